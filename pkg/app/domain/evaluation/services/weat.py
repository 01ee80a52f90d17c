import logging
from itertools import combinations
from math import comb
from typing import Tuple

import numpy as np

from app.core.config import evaluation_setting
from app.core.errors.exceptions import MissingWordException, DegenerateStatisticException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.weat import WeatSpec, WeatResult
from app.domain.evaluation.services.similarity import similarity_matrix

logger = logging.getLogger(__name__)

MONTE_CARLO_BATCH = 10_000


def _require(emb: EmbeddingSet, spec: WeatSpec) -> None:
    missing = emb.missing(spec.targets_x + spec.targets_y + spec.attributes_a + spec.attributes_b)
    if missing:
        raise MissingWordException(f"WEAT words not in vocabulary: {missing}")


def _associations(words, spec: WeatSpec, emb: EmbeddingSet) -> np.ndarray:
    # s(w, A, B) = mean_a sim(w, a) − mean_b sim(w, b)
    points = emb.vectors_for(words)
    sim_a = similarity_matrix(points, emb.vectors_for(spec.attributes_a), spec.similarity)
    sim_b = similarity_matrix(points, emb.vectors_for(spec.attributes_b), spec.similarity)
    return sim_a.mean(axis=1) - sim_b.mean(axis=1)


def weat_association(w: str, spec: WeatSpec, emb: EmbeddingSet) -> float:
    missing = emb.missing([w] + spec.attributes_a + spec.attributes_b)
    if missing:
        raise MissingWordException(f"{missing}")
    return float(_associations([w], spec, emb)[0])


def _effect_size(s_x: np.ndarray, s_y: np.ndarray) -> float:
    scores = np.concatenate([s_x, s_y])
    if np.ptp(scores) == 0.0:
        raise DegenerateStatisticException(
            f"association scores have zero variance (all equal to {s_x[0]:.6g}); effect size undefined"
        )
    return float((s_x.mean() - s_y.mean()) / scores.std(ddof=0))


def _exact_partition_stats(scores: np.ndarray, k: int) -> np.ndarray:
    total = scores.sum()
    subsets = np.array(list(combinations(range(len(scores)), k)), dtype=np.intp)
    return 2.0 * scores[subsets].sum(axis=1) - total


def _sampled_partition_stats(scores: np.ndarray, k: int, samples: int, seed: int) -> np.ndarray:
    # Philox 는 카운터 기반이라 같은 seed 면 같은 순열 스트림을 낸다
    rng = np.random.Generator(np.random.Philox(seed))
    total = scores.sum()
    stats = np.empty(samples, dtype=np.float64)
    for start in range(0, samples, MONTE_CARLO_BATCH):
        size = min(MONTE_CARLO_BATCH, samples - start)
        shuffled = rng.permuted(np.tile(scores, (size, 1)), axis=1)
        stats[start:start + size] = 2.0 * shuffled[:, :k].sum(axis=1) - total
    return stats


def weat_permutation_stats(
        scores: np.ndarray,
        k: int,
        max_permutations: int,
        seed: int,
) -> Tuple[np.ndarray, bool]:
    """
    X ∪ Y 를 크기 k 로 나누는 분할들의 통계량 Σ_Xi s − Σ_Yi s.
    전체 분할 수가 max_permutations 이하면 전부 나열, 아니면 seed 로 표본 추출.
    """
    if comb(len(scores), k) <= max_permutations:
        return _exact_partition_stats(scores, k), True
    return _sampled_partition_stats(scores, k, max_permutations, seed), False


def weat_test(
        spec: WeatSpec,
        emb: EmbeddingSet,
        max_permutations: int = evaluation_setting.WEAT_MAX_PERMUTATIONS,
        seed: int = evaluation_setting.WEAT_SEED,
) -> WeatResult:
    """
    WEAT 검정.

    Returns:
        WeatResult: 통계량, Cohen's d (모집단 표준편차), 단측 순열 p-value
    """
    _require(emb, spec)
    s_x = _associations(spec.targets_x, spec, emb)
    s_y = _associations(spec.targets_y, spec, emb)
    statistic = float(s_x.sum() - s_y.sum())
    effect_size = _effect_size(s_x, s_y)

    scores = np.concatenate([s_x, s_y])
    perm_stats, exact = weat_permutation_stats(scores, len(s_x), max_permutations, seed)
    tol = 1e-12 * max(1.0, abs(statistic))
    p_value = float(np.count_nonzero(perm_stats >= statistic - tol) / len(perm_stats))

    logger.info(
        f"WEAT {spec.name or ''}: statistic={statistic:.6g} d={effect_size:.4f} p={p_value:.4g} "
        f"({'exact' if exact else 'sampled'}, {len(perm_stats)} partitions)"
    )
    return WeatResult(
        name=spec.name,
        statistic=statistic,
        effect_size_d=effect_size,
        p_value=p_value,
        permutations_used=len(perm_stats),
        exact=exact,
    )
