import logging
from typing import Sequence

import numpy as np

from app.core.errors.exceptions import EmptyInputException
from app.domain.geometry.schemas.gyrovector import PoincarePoint
from app.domain.geometry.services.gyrovector import as_point, project_to_ball, _check_dims, _distance, _log, _lambda
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig, MeanResult
from app.domain.optimization.services.riemannian_optimizer import minimize

logger = logging.getLogger(__name__)


def _stack_points(points: Sequence[PoincarePoint]) -> np.ndarray:
    if len(points) == 0:
        raise EmptyInputException("karcher_mean needs at least one point")
    arrays = [as_point(p, f"points[{i}]") for i, p in enumerate(points)]
    _check_dims(*arrays)
    return np.stack(arrays)


def frechet_objective(mu: np.ndarray, points: np.ndarray) -> float:
    """Σ d(μ, x_i)²"""
    return float(np.sum(_distance(mu, points) ** 2))


def frechet_riemannian_gradient(mu: np.ndarray, points: np.ndarray) -> np.ndarray:
    """grad Σ d(μ, x_i)² = −2 Σ log_μ(x_i)"""
    return -2.0 * np.sum(_log(mu, points), axis=0)


def frechet_euclidean_gradient(mu: np.ndarray, points: np.ndarray) -> np.ndarray:
    lam = _lambda(mu)
    return lam * lam * frechet_riemannian_gradient(mu, points)


def karcher_mean(points: Sequence[PoincarePoint], cfg: MeanConfig = MeanConfig()) -> MeanResult:
    """
    볼 위 점 집합의 내재 평균 μ = argmin Σ d(μ, x_i)².
    산술 평균에서 시작해 리만 최적화로 내려간다. 수렴하지 못해도 에러가 아니라 결과에 표시한다.
    """
    stacked = _stack_points(points)
    mu0 = project_to_ball(np.mean(stacked, axis=0))

    trace = minimize(
        mu0,
        lambda mu: frechet_objective(mu, stacked),
        lambda mu: frechet_euclidean_gradient(mu, stacked),
        optimizer=cfg.optimizer,
        learning_rate=cfg.learning_rate,
        epochs=cfg.max_epochs,
        tol=cfg.tol,
        transport=cfg.transport,
    )
    if not trace.converged:
        logger.warning(
            f"Karcher mean did not reach tol={cfg.tol:g} in {cfg.max_epochs} epochs "
            f"(grad norm {trace.grad_norm:.3g})"
        )
    return MeanResult(
        mean=trace.best_point,
        converged=trace.converged,
        epochs_run=trace.epochs_run,
        grad_norm=trace.grad_norm,
        objective=trace.best_objective,
        initial_objective=trace.initial_objective,
    )
