from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import numpy.typing as npt

from app.core.config import optimizer_setting
from app.core.enums.optimizer import MomentumTransportEnum
from app.domain.geometry.schemas.gyrovector import PoincarePoint, TangentVector


@dataclass(frozen=True)
class RiemannianGradient:
    base: PoincarePoint
    components: npt.NDArray[np.float64]
    # True 면 components 가 이미 역계량((1 − ‖x‖²)/2)² 으로 스케일된 상태
    rescaled: bool = True


@dataclass(frozen=True)
class AdamState:
    """
    Riemannian Adam 상태. m 은 현재 점의 접공간 좌표, v 는 스칼라 2차 모멘트.
    init_adam_state 로 생성하고 radam_step 이 새 상태를 돌려준다.
    """
    step: int = 0
    m: Optional[TangentVector] = None
    v: float = 0.0
    beta1: float = optimizer_setting.BETA1
    beta2: float = optimizer_setting.BETA2
    eps_adam: float = optimizer_setting.ADAM_EPS
    learning_rate: float = optimizer_setting.LEARNING_RATE
    transport: MomentumTransportEnum = MomentumTransportEnum.PARALLEL


@dataclass
class OptimizationTrace:
    best_point: PoincarePoint
    best_objective: float
    initial_objective: float
    epochs_run: int
    grad_norm: float
    converged: bool
    objective_history: list = field(default_factory=list, repr=False)
