from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.core.config import api_setting, evaluation_setting
from app.core.enums.similarity import SimilarityEnum

from app.domain.evaluation.schemas.analogy import AnalogyResult, FoldSelection, TGridScore
from app.domain.evaluation.schemas.similarity import SimilarityResult
from app.domain.evaluation.schemas.weat import WeatResult


class WeatReport(BaseModel):
    similarity: str
    seed: int
    results: List[WeatResult]


class SimilarityReport(BaseModel):
    similarity: str
    datasets: Dict[str, SimilarityResult]


class AnalogyReport(BaseModel):
    similarity: str
    result: AnalogyResult
    cross_validated: bool = False
    t_grid_scores: Optional[List[TGridScore]] = None
    fold_selections: Optional[List[FoldSelection]] = None
    held_out_accuracy: Optional[float] = None


class NeighborWord(BaseModel):
    word: str
    score: float


class AnalogyPrediction(BaseModel):
    t: float
    point: List[float]
    neighbors: List[NeighborWord]


class AnalogyRequest(BaseModel):
    """a : b = c : ?"""
    a: str
    b: str
    c: str
    t: float = Field(default=evaluation_setting.DEFAULT_T, ge=0.0, le=1.0)
    similarity: SimilarityEnum = SimilarityEnum.COSINE
    top_k: int = Field(default=5, ge=1, le=api_setting.MAX_TOP_K)
