from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.core.config import evaluation_setting


class AnalogyQuery(BaseModel):
    """w1 : w2 = w3 : gold"""
    w1: str
    w2: str
    w3: str
    gold: str
    t: float = Field(default=evaluation_setting.DEFAULT_T, ge=0.0, le=1.0)
    section: Optional[str] = None

    def text(self) -> str:
        return " ".join((self.w1, self.w2, self.w3, self.gold))


class AnalogyResult(BaseModel):
    accuracy: float
    correct: int
    total: int
    oov: int
    evaluated: int
    t: float
    sections: Dict[str, float] = Field(default_factory=dict)


class TGridScore(BaseModel):
    t: float
    fold_accuracies: List[float]
    mean_accuracy: float

class FoldSelection(BaseModel):
    held_out_fold: int
    t: float
    train_accuracy: float
    held_out_accuracy: float
