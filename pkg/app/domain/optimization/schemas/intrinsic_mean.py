from dataclasses import dataclass

from pydantic import BaseModel, Field

from app.core.config import mean_setting
from app.core.enums.optimizer import OptimizerEnum, MomentumTransportEnum
from app.domain.geometry.schemas.gyrovector import PoincarePoint


class MeanConfig(BaseModel):
    learning_rate: float = Field(default=mean_setting.LEARNING_RATE, gt=0)
    max_epochs: int = Field(default=mean_setting.MAX_EPOCHS, ge=0)
    tol: float = Field(default=mean_setting.TOL, gt=0)
    optimizer: OptimizerEnum = OptimizerEnum.RADAM
    transport: MomentumTransportEnum = MomentumTransportEnum.PARALLEL

    class Config:
        frozen = True


@dataclass
class MeanResult:
    mean: PoincarePoint
    converged: bool
    epochs_run: int
    grad_norm: float
    objective: float
    initial_objective: float
