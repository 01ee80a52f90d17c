import logging
from typing import Callable, Iterable, List, Optional

import numpy as np

from app.core.config import optimizer_setting
from app.core.enums.gender import WordPartitionEnum
from app.core.enums.optimizer import GradientModeEnum, OptimizerEnum
from app.core.errors.exceptions import MissingPartitionException
from app.domain.bias.schemas.gender import GenderGyrovectors
from app.domain.bias.services.gyrocosine_bias import gyrocosine_bias_values
from app.domain.debias.schemas.pgd import PgdConfig, DebiasOutcome, DebiasedVocabulary
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.geometry.schemas.gyrovector import PoincarePoint
from app.domain.geometry.services.gyrovector import as_point, _check_dims, _norm, _unit, gyrocosine, \
    gyrocosine_values, origin_gyrovector
from app.domain.optimization.services.riemannian_optimizer import minimize, central_difference_gradient

logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], List]


def f_g(wd: PoincarePoint, gv: GenderGyrovectors) -> float:
    """F_g = |cos(w′_d, g_mf) − cos(w′_d, g_fm)| / 2"""
    wd_prime = origin_gyrovector(wd)
    return abs(gyrocosine(wd_prime, gv.g_mf) - gyrocosine(wd_prime, gv.g_fm)) / 2.0


def f_s(wd: PoincarePoint, w_orig: PoincarePoint) -> float:
    """F_s = |cos(w′_d, w′) − 1| / 2"""
    return abs(gyrocosine(origin_gyrovector(wd), origin_gyrovector(w_orig)) - 1.0) / 2.0


def pgd_objective(wd: PoincarePoint, w_orig: PoincarePoint, gv: GenderGyrovectors, cfg: PgdConfig) -> float:
    return cfg.lambda1 * f_s(wd, w_orig) + cfg.lambda2 * f_g(wd, gv)


def _objective_values(wd: np.ndarray, w_orig: np.ndarray, gv: GenderGyrovectors, cfg: PgdConfig) -> float:
    # 최적화 루프용: 검증 없이 값 벡터로 바로 계산
    gamma = gyrocosine_bias_values(wd, gv)
    cos_orig = gyrocosine_values(wd, w_orig)
    return float(cfg.lambda1 * (1.0 - cos_orig) / 2.0 + cfg.lambda2 * abs(gamma))


def _cosine_gradient(w: np.ndarray, u: np.ndarray) -> np.ndarray:
    # ∂/∂w (w·û / ‖w‖) = (û − cos · ŵ) / ‖w‖
    w_hat = _unit(w, "wd")
    u_hat = _unit(u, "u")
    cos = float(np.dot(w_hat, u_hat))
    return (u_hat - cos * w_hat) / _norm(w)[0]


def pgd_euclidean_gradient(
        wd: np.ndarray,
        w_orig: np.ndarray,
        gv: GenderGyrovectors,
        cfg: PgdConfig,
) -> np.ndarray:
    """
    목적 함수의 유클리드 기울기 (계량 보정 전).
    |γ| 의 꺾인 점(γ = 0)에서는 sign(0) = 0 으로 F_g 항을 0 으로 둔다.
    """
    if cfg.gradient == GradientModeEnum.FINITE_DIFFERENCE:
        return central_difference_gradient(
            lambda x: _objective_values(x, w_orig, gv, cfg), wd, optimizer_setting.FINITE_DIFFERENCE_STEP
        )
    gamma = gyrocosine_bias_values(wd, gv)
    grad_gamma = 0.5 * (_cosine_gradient(wd, gv.g_mf.value) - _cosine_gradient(wd, gv.g_fm.value))
    grad_fs = -0.5 * _cosine_gradient(wd, w_orig)
    return cfg.lambda1 * grad_fs + cfg.lambda2 * np.sign(gamma) * grad_gamma


def _passthrough(word: str, w: np.ndarray) -> DebiasOutcome:
    logger.warning(f"'{word}' is the zero vector, passed through unchanged")
    return DebiasOutcome(
        word=word,
        original=w,
        debiased=w.copy(),
        gamma_before=0.0,
        gamma_after=0.0,
        f_g_before=0.0,
        f_g_after=0.0,
        f_s_after=0.0,
        objective_before=0.0,
        objective_after=0.0,
        gyrocosine_to_original=1.0,
        epochs_run=0,
        skipped=True,
    )


def debias_word(
        w_orig: PoincarePoint,
        gv: GenderGyrovectors,
        cfg: PgdConfig = PgdConfig(),
        word: str = "",
) -> DebiasOutcome:
    """
    단어 하나를 Riemannian Adam 으로 PGD 최적화한다.
    w_orig 에서 시작해 cfg.epochs 만큼 돌고, 목적값이 가장 작았던 반복점을 돌려준다.
    """
    w = as_point(w_orig, "w_orig")
    _check_dims(w, gv.mu_m)
    if _norm(w)[0] == 0.0:
        return _passthrough(word, w)

    trace = minimize(
        w,
        lambda x: _objective_values(x, w, gv, cfg),
        lambda x: pgd_euclidean_gradient(x, w, gv, cfg),
        optimizer=OptimizerEnum.RADAM,
        learning_rate=cfg.learning_rate,
        epochs=cfg.epochs,
        transport=cfg.transport,
    )
    debiased = trace.best_point
    gamma_before = float(gyrocosine_bias_values(w, gv))
    gamma_after = float(gyrocosine_bias_values(debiased, gv))
    cos_orig = float(gyrocosine_values(debiased, w))
    return DebiasOutcome(
        word=word,
        original=w,
        debiased=debiased,
        gamma_before=gamma_before,
        gamma_after=gamma_after,
        f_g_before=abs(gamma_before),
        f_g_after=abs(gamma_after),
        f_s_after=(1.0 - cos_orig) / 2.0,
        objective_before=trace.initial_objective,
        objective_after=trace.best_objective,
        gyrocosine_to_original=cos_orig,
        epochs_run=trace.epochs_run,
    )


def debias_vocabulary(
        emb: EmbeddingSet,
        gv: GenderGyrovectors,
        cfg: PgdConfig = PgdConfig(),
        mapper: Optional[Mapper] = None,
) -> DebiasedVocabulary:
    """
    gender-neutral 단어만 debias_word 로 옮기고, gender-specific 행은 그대로 복사한다.
    mapper 는 입력 순서대로 결과를 돌려줘야 한다 (WorkerPool.map_ordered).
    """
    if emb.partition is None:
        raise MissingPartitionException("debias_vocabulary needs a specific/neutral partition")
    neutral = emb.words_in(WordPartitionEnum.NEUTRAL)
    logger.info(f"debiasing {len(neutral)} neutral words of {len(emb)} (lr={cfg.learning_rate}, epochs={cfg.epochs})")

    mapper = mapper or (lambda fn, items: list(map(fn, items)))
    outcomes = mapper(lambda w: debias_word(emb.vector(w), gv, cfg, word=w), neutral)

    vectors = np.array(emb.vectors, dtype=np.float64, copy=True)
    for outcome in outcomes:
        vectors[emb.index(outcome.word)] = outcome.debiased
    return DebiasedVocabulary(embeddings=emb.with_vectors(vectors), outcomes=list(outcomes))
