from dataclasses import dataclass, field
from typing import List

from pydantic import BaseModel, Field, model_validator

from app.core.config import pgd_setting
from app.core.enums.optimizer import GradientModeEnum, MomentumTransportEnum
from app.core.errors.exceptions import InvalidConfigException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.geometry.schemas.gyrovector import PoincarePoint

LAMBDA_SUM_TOL = 1e-9


class PgdConfig(BaseModel):
    # lambda1 은 F_s(의미 보존), lambda2 는 F_g(성별 균등화) 가중치
    lambda1: float = pgd_setting.LAMBDA1
    lambda2: float = pgd_setting.LAMBDA2
    learning_rate: float = Field(default=pgd_setting.LEARNING_RATE, gt=0)
    epochs: int = Field(default=pgd_setting.EPOCHS, ge=0)
    gradient: GradientModeEnum = GradientModeEnum.ANALYTIC
    transport: MomentumTransportEnum = MomentumTransportEnum.PARALLEL

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_weights(self) -> "PgdConfig":
        for name, value in (("lambda1", self.lambda1), ("lambda2", self.lambda2)):
            if not 0.0 <= value <= 1.0:
                raise InvalidConfigException(f"{name}={value} is outside [0, 1]")
        if abs(self.lambda1 + self.lambda2 - 1.0) > LAMBDA_SUM_TOL:
            raise InvalidConfigException(f"lambda1 + lambda2 = {self.lambda1 + self.lambda2}, expected 1")
        return self


@dataclass
class DebiasOutcome:
    word: str
    original: PoincarePoint
    debiased: PoincarePoint
    gamma_before: float
    gamma_after: float
    f_g_before: float
    f_g_after: float
    f_s_after: float
    objective_before: float
    objective_after: float
    gyrocosine_to_original: float
    epochs_run: int
    # 영벡터 입력은 최적화 없이 그대로 통과
    skipped: bool = False

    @property
    def changed(self) -> bool:
        return bool((self.original != self.debiased).any())


@dataclass
class DebiasedVocabulary:
    embeddings: EmbeddingSet
    outcomes: List[DebiasOutcome] = field(default_factory=list)
