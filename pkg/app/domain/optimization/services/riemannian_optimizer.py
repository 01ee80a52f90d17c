import logging
from dataclasses import replace
from typing import Callable, Optional, Tuple

import numpy as np

from app.core.config import optimizer_setting
from app.core.enums.optimizer import OptimizerEnum, MomentumTransportEnum
from app.core.errors.exceptions import NonPositiveLearningRateException, UninitializedStateException, \
    DimensionMismatchException, InvalidPointException
from app.domain.geometry.schemas.gyrovector import PoincarePoint, TangentVector
from app.domain.geometry.services.gyrovector import as_point, _as_vector, _check_dims, _sqnorm, _exp, _log, \
    _parallel_transport
from app.domain.optimization.schemas.optimizer import RiemannianGradient, AdamState, OptimizationTrace

logger = logging.getLogger(__name__)

ObjectiveFn = Callable[[np.ndarray], float]
GradientFn = Callable[[np.ndarray], np.ndarray]


def _inverse_metric(x: np.ndarray) -> np.ndarray:
    # 1 / λ_x² = ((1 − ‖x‖²) / 2)²
    return ((1.0 - _sqnorm(x)) / 2.0) ** 2


def _check_base(x: np.ndarray, base: np.ndarray, what: str) -> None:
    if base.shape != x.shape or not np.array_equal(base, x):
        raise InvalidPointException(f"{what} is attached to a different base point")


def riemannian_norm(x: PoincarePoint, components: np.ndarray) -> float:
    """접벡터의 계량 노름 λ_x · ‖v‖"""
    return float(np.sqrt(_sqnorm(components))[0] * 2.0 / (1.0 - _sqnorm(x)[0]))


def euclidean_to_riemannian_grad(x: PoincarePoint, g_euc: np.ndarray) -> RiemannianGradient:
    x = as_point(x)
    g_euc = _as_vector(g_euc, "g_euc")
    _check_dims(x, g_euc)
    return RiemannianGradient(base=x, components=g_euc * _inverse_metric(x), rescaled=True)


def _riemannian_components(x: np.ndarray, g: RiemannianGradient) -> np.ndarray:
    _check_base(x, g.base, "gradient")
    if g.components.shape != x.shape:
        raise DimensionMismatchException(f"gradient {g.components.shape} vs point {x.shape}")
    if g.rescaled:
        return g.components
    return g.components * _inverse_metric(x)


def rsgd_step(x: PoincarePoint, g: RiemannianGradient, learning_rate: float) -> PoincarePoint:
    """x_{t+1} = exp_{x_t}(−α g_t)"""
    if not learning_rate > 0:
        raise NonPositiveLearningRateException(f"learning_rate={learning_rate}")
    x = as_point(x)
    return _exp(x, -learning_rate * _riemannian_components(x, g))


def init_adam_state(
        x: PoincarePoint,
        learning_rate: float = optimizer_setting.LEARNING_RATE,
        transport: MomentumTransportEnum = MomentumTransportEnum.PARALLEL,
        **hyperparams,
) -> AdamState:
    if not learning_rate > 0:
        raise NonPositiveLearningRateException(f"learning_rate={learning_rate}")
    x = as_point(x)
    return AdamState(
        step=0,
        m=TangentVector(base=x, components=np.zeros_like(x)),
        v=0.0,
        learning_rate=learning_rate,
        transport=transport,
        **hyperparams,
    )


def _transport_momentum(state: AdamState, x: np.ndarray, x_new: np.ndarray, m: np.ndarray) -> np.ndarray:
    if state.transport == MomentumTransportEnum.LOG_EXP:
        return _log(x_new, _exp(x, m))
    return _parallel_transport(x, x_new, m)


def radam_step(state: AdamState, x: PoincarePoint, g: RiemannianGradient) -> Tuple[PoincarePoint, AdamState]:
    """
    Riemannian Adam 1 스텝.
    1. m ← β1·m + (1 − β1)·g,  v ← β2·v + (1 − β2)·⟨g, g⟩_x
    2. 편향 보정 후 exp_x(−α · m̂ / (√v̂ + ε)) 로 이동
    3. m 을 새 점의 접공간으로 옮긴다
    """
    if state.m is None:
        raise UninitializedStateException("call init_adam_state first")
    x = as_point(x)
    _check_base(x, state.m.base, "optimizer state")
    grad = _riemannian_components(x, g)

    step = state.step + 1
    m = state.beta1 * state.m.components + (1.0 - state.beta1) * grad
    v = state.beta2 * state.v + (1.0 - state.beta2) * riemannian_norm(x, grad) ** 2
    m_hat = m / (1.0 - state.beta1 ** step)
    v_hat = v / (1.0 - state.beta2 ** step)

    direction = -state.learning_rate * m_hat / (np.sqrt(v_hat) + state.eps_adam)
    x_new = _exp(x, direction)
    m_new = _transport_momentum(state, x, x_new, m)
    return x_new, replace(state, step=step, m=TangentVector(base=x_new, components=m_new), v=float(v))


def central_difference_gradient(
        f: ObjectiveFn,
        x: np.ndarray,
        h: float = optimizer_setting.FINITE_DIFFERENCE_STEP,
) -> np.ndarray:
    """유클리드 좌표에 대한 중앙 차분 기울기"""
    x = np.asarray(x, dtype=np.float64)
    grad = np.empty_like(x)
    for i in range(x.shape[-1]):
        step = np.zeros_like(x)
        step[i] = h
        grad[i] = (f(x + step) - f(x - step)) / (2.0 * h)
    return grad


def minimize(
        x0: PoincarePoint,
        objective: ObjectiveFn,
        euclidean_grad: GradientFn,
        *,
        optimizer: OptimizerEnum = OptimizerEnum.RADAM,
        learning_rate: float = optimizer_setting.LEARNING_RATE,
        epochs: int,
        tol: Optional[float] = None,
        transport: MomentumTransportEnum = MomentumTransportEnum.PARALLEL,
) -> OptimizationTrace:
    """
    best-so-far 반복점을 추적하며 목적 함수를 최소화한다.
    tol 이 주어지면 리만 기울기 노름이 tol 이하인 점에서 멈추고 그 점을 돌려준다.

    Returns:
        OptimizationTrace: 가장 작은 목적값을 낸 점과 수렴 정보
    """
    if not learning_rate > 0:
        raise NonPositiveLearningRateException(f"learning_rate={learning_rate}")
    x = as_point(x0)
    state = init_adam_state(x, learning_rate, transport) if optimizer == OptimizerEnum.RADAM else None

    initial_objective = float(objective(x))
    best_point, best_objective = x, initial_objective
    history = [initial_objective]
    epochs_run = 0
    converged = False

    for _ in range(epochs):
        g = euclidean_to_riemannian_grad(x, euclidean_grad(x))
        if tol is not None:
            norm = riemannian_norm(x, g.components)
            if norm <= tol:
                # converged, grad_norm 은 돌려주는 점 기준
                best_point, best_objective = x, history[-1]
                grad_norm, converged = norm, True
                break
        if state is not None:
            x, state = radam_step(state, x, g)
        else:
            x = rsgd_step(x, g, learning_rate)
        epochs_run += 1

        value = float(objective(x))
        history.append(value)
        if value < best_objective:
            best_point, best_objective = x, value

    if not converged:
        final_grad = euclidean_to_riemannian_grad(best_point, euclidean_grad(best_point))
        grad_norm = riemannian_norm(best_point, final_grad.components)
        converged = tol is not None and grad_norm <= tol
    logger.debug(f"minimize: {epochs_run} epochs, objective {initial_objective:.6g} -> {best_objective:.6g}")

    return OptimizationTrace(
        best_point=best_point,
        best_objective=best_objective,
        initial_objective=initial_objective,
        epochs_run=epochs_run,
        grad_norm=grad_norm,
        converged=converged,
        objective_history=history,
    )
