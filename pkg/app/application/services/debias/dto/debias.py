from typing import List

from pydantic import BaseModel, Field

from app.core.config import pgd_setting

from app.domain.debias.schemas.pgd import DebiasOutcome


class WordDebiasRecord(BaseModel):
    word: str
    gamma_before: float
    gamma_after: float
    f_g_before: float
    f_g_after: float
    f_s_after: float
    objective_before: float
    objective_after: float
    gyrocosine_to_original: float
    epochs_run: int
    skipped: bool = False

    @classmethod
    def from_outcome(cls, outcome: DebiasOutcome) -> "WordDebiasRecord":
        return cls(
            word=outcome.word,
            gamma_before=outcome.gamma_before,
            gamma_after=outcome.gamma_after,
            f_g_before=outcome.f_g_before,
            f_g_after=outcome.f_g_after,
            f_s_after=outcome.f_s_after,
            objective_before=outcome.objective_before,
            objective_after=outcome.objective_after,
            gyrocosine_to_original=outcome.gyrocosine_to_original,
            epochs_run=outcome.epochs_run,
            skipped=outcome.skipped,
        )


class DebiasedWordResponse(WordDebiasRecord):
    original: List[float]
    debiased: List[float]


class DebiasSummary(BaseModel):
    neutral_words: int
    specific_words: int
    changed: int
    mean_abs_gamma_before: float
    mean_abs_gamma_after: float
    reduction: float
    min_gyrocosine_to_original: float


class DebiasReport(BaseModel):
    lambda1: float
    lambda2: float
    learning_rate: float
    epochs: int
    summary: DebiasSummary
    words: List[WordDebiasRecord]


class DebiasWordRequest(BaseModel):
    word: str
    lambda1: float = pgd_setting.LAMBDA1
    lambda2: float = pgd_setting.LAMBDA2
    learning_rate: float = Field(default=pgd_setting.LEARNING_RATE, gt=0)
    epochs: int = Field(default=pgd_setting.EPOCHS, ge=0, le=5000)
