import logging
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from scipy import stats

from app.core.config import pgd_setting
from app.core.utils import unique_in_order
from app.core.errors.exceptions import InsufficientDefinitionalWordsException, InsufficientDataException, \
    DegenerateStatisticException, ZeroGyrovectorException
from app.domain.bias.schemas.bias_report import BiasSummary, BiasCorrelation
from app.domain.bias.schemas.gender import GenderGyrovectors
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.geometry.schemas.gyrovector import PoincarePoint
from app.domain.geometry.services.gyrovector import as_point, _check_dims, gyrocosine_values, rooted_gyrovector, \
    _norm
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig
from app.domain.optimization.services.intrinsic_mean import karcher_mean

logger = logging.getLogger(__name__)

MIN_DEFINITIONAL_WORDS = 2


def gender_gyrovectors_from_points(
        male_points: Sequence[PoincarePoint],
        female_points: Sequence[PoincarePoint],
        cfg: MeanConfig = MeanConfig(),
) -> GenderGyrovectors:
    """점 집합에서 바로 μ_M, μ_F 와 두 gender gyrovector 를 만든다."""
    mu_m = karcher_mean(male_points, cfg).mean
    mu_f = karcher_mean(female_points, cfg).mean
    return GenderGyrovectors(
        mu_m=mu_m,
        mu_f=mu_f,
        g_mf=rooted_gyrovector(mu_m, mu_f),
        g_fm=rooted_gyrovector(mu_f, mu_m),
    )


def _present(emb: EmbeddingSet, words: Sequence[str], side: str) -> List[str]:
    missing = emb.missing(words)
    if missing:
        logger.warning(f"{len(missing)} {side} definitional words not in vocabulary, skipped: {missing}")
    present = [w for w in unique_in_order(words) if w in emb]
    if len(present) < MIN_DEFINITIONAL_WORDS:
        raise InsufficientDefinitionalWordsException(
            f"{side}: {len(present)} words in vocabulary, need {MIN_DEFINITIONAL_WORDS}"
        )
    return present


def gender_gyrovectors(
        emb: EmbeddingSet,
        male_words: Sequence[str],
        female_words: Sequence[str],
        cfg: MeanConfig = MeanConfig(),
) -> GenderGyrovectors:
    """
    정의어 목록에서 gender gyrovector 를 계산한다.
    어휘에 없는 단어는 경고 후 건너뛰고, 한쪽에 2개 미만이 남으면 에러.
    """
    male = _present(emb, male_words, "male")
    female = _present(emb, female_words, "female")
    logger.info(f"gender gyrovectors from {len(male)} male / {len(female)} female words")
    return gender_gyrovectors_from_points(list(emb.vectors_for(male)), list(emb.vectors_for(female)), cfg)


def gyrocosine_bias_values(w: np.ndarray, gv: GenderGyrovectors) -> np.ndarray:
    """γ(w) = (cos(w′, g_mf) − cos(w′, g_fm)) / 2. w′ = O ⊕ w 의 값은 w 자체다."""
    return 0.5 * (gyrocosine_values(w, gv.g_mf.value) - gyrocosine_values(w, gv.g_fm.value))


def gyrocosine_bias(w: PoincarePoint, gv: GenderGyrovectors) -> float:
    """
    단어 벡터 하나의 gyrocosine bias.

    Returns:
        float: [-1, 1]. 양수면 여성 편향, 음수면 남성 편향
    """
    w = as_point(w, "w")
    _check_dims(w, gv.mu_m)
    return float(gyrocosine_bias_values(w, gv))


def gyrocosine_bias_map(emb: EmbeddingSet, words: Sequence[str], gv: GenderGyrovectors) -> Dict[str, float]:
    """영벡터 단어는 γ 가 정의되지 않으므로 경고 후 제외한다."""
    if not words:
        return {}
    vectors = as_point(emb.vectors_for(words), "vectors")
    _check_dims(vectors, gv.mu_m)
    zero = _norm(vectors)[:, 0] <= 0.0
    if np.any(zero):
        logger.warning(f"{int(zero.sum())} zero vectors have no gyrocosine bias, skipped")
    keep = [w for w, z in zip(words, zero) if not z]
    if not keep:
        return {}
    gammas = np.atleast_1d(gyrocosine_bias_values(vectors[~zero], gv))
    return {w: float(g) for w, g in zip(keep, gammas)}


def summarize_bias(gammas: Mapping[str, float], threshold: float = pgd_setting.BIAS_THRESHOLD) -> BiasSummary:
    values = np.abs(np.fromiter(gammas.values(), dtype=np.float64, count=len(gammas)))
    return BiasSummary(
        words=len(values),
        mean_abs_gamma=float(values.mean()) if len(values) else 0.0,
        max_abs_gamma=float(values.max()) if len(values) else 0.0,
        threshold=threshold,
        above_threshold=int(np.count_nonzero(values > threshold)),
    )


def euclidean_gender_direction(
        emb: EmbeddingSet,
        male_words: Sequence[str],
        female_words: Sequence[str],
) -> npt.NDArray[np.float64]:
    """유클리드 임베딩의 성별 방향 = 여성 정의어 산술 평균 − 남성 정의어 산술 평균"""
    male = _present(emb, male_words, "male")
    female = _present(emb, female_words, "female")
    return emb.vectors_for(female).mean(axis=0) - emb.vectors_for(male).mean(axis=0)


def direct_bias_euclidean(w: npt.ArrayLike, gender_dir: npt.ArrayLike, absolute: bool = False) -> float:
    """단어 벡터와 성별 방향 사이의 부호 있는 코사인 (absolute=True 면 절댓값)"""
    w = np.asarray(w, dtype=np.float64)
    gender_dir = np.asarray(gender_dir, dtype=np.float64)
    _check_dims(w, gender_dir)
    w_norm = np.linalg.norm(w)
    d_norm = np.linalg.norm(gender_dir)
    if w_norm == 0.0 or d_norm == 0.0:
        raise ZeroGyrovectorException("direct bias of a zero vector")
    cos = float(np.clip(np.dot(w, gender_dir) / (w_norm * d_norm), -1.0, 1.0))
    return abs(cos) if absolute else cos


def _shared(hyp_bias: Mapping[str, float], euc_bias: Mapping[str, float]) -> Tuple[np.ndarray, np.ndarray, int]:
    shared = [w for w in hyp_bias if w in euc_bias]
    if len(shared) < 3:
        raise InsufficientDataException(f"{len(shared)} shared words, need 3")
    x = np.array([hyp_bias[w] for w in shared], dtype=np.float64)
    y = np.array([euc_bias[w] for w in shared], dtype=np.float64)
    for name, arr in (("hyperbolic", x), ("euclidean", y)):
        if np.ptp(arr) == 0.0:
            raise DegenerateStatisticException(f"{name} bias values have zero variance")
    return x, y, len(shared)


def bias_correlation(hyp_bias: Mapping[str, float], euc_bias: Mapping[str, float]) -> BiasCorrelation:
    """공통 단어에 대한 Pearson / Spearman 상관"""
    x, y, n = _shared(hyp_bias, euc_bias)
    pearson = stats.pearsonr(x, y)[0]
    spearman = stats.spearmanr(x, y)[0]
    return BiasCorrelation(pearson=float(pearson), spearman=float(spearman), shared_words=n)
