from typing import Dict, Optional

from pydantic import BaseModel, Field


class BiasSummary(BaseModel):
    words: int
    mean_abs_gamma: float
    max_abs_gamma: float
    threshold: float
    above_threshold: int


class BiasCorrelation(BaseModel):
    pearson: float
    spearman: float
    shared_words: int


class BiasReport(BaseModel):
    """γ(w) 는 양수면 여성 편향, 음수면 남성 편향"""
    gamma: Dict[str, float] = Field(default_factory=dict)
    summary: BiasSummary
    direct_bias: Optional[Dict[str, float]] = None
    correlation: Optional[BiasCorrelation] = None
