import logging
from typing import Sequence

import numpy as np

from app.core.config import evaluation_setting
from app.core.enums.similarity import SimilarityEnum, SemBiasScorerEnum
from app.core.errors.exceptions import EmptyEvaluableException, ZeroGyrovectorException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.sembias import SemBiasInstance, SemBiasResult
from app.domain.evaluation.services.analogy import analogy_solve_points
from app.domain.evaluation.services.similarity import similarity
from app.domain.geometry.services.gyrovector import _mobius_add, gyrocosine_values

logger = logging.getLogger(__name__)

MALE_ANCHOR = "he"
FEMALE_ANCHOR = "she"


def _analogy_scores(instance: SemBiasInstance, emb: EmbeddingSet, t: float, metric: SimilarityEnum) -> np.ndarray:
    # he : she = a : ? 의 예측점과 b 의 유사도
    he, she = emb.vector(MALE_ANCHOR), emb.vector(FEMALE_ANCHOR)
    return np.array([
        similarity(analogy_solve_points(he, she, emb.vector(a), t), emb.vector(b), metric)
        for a, b in instance.candidates()
    ])


def _gyrocosine_scores(instance: SemBiasInstance, emb: EmbeddingSet) -> np.ndarray:
    # gyrocosine(⊖she ⊕ he, ⊖b ⊕ a)
    anchor = _mobius_add(-emb.vector(FEMALE_ANCHOR), emb.vector(MALE_ANCHOR))
    scores = []
    for a, b in instance.candidates():
        try:
            scores.append(gyrocosine_values(anchor, _mobius_add(-emb.vector(b), emb.vector(a))))
        except ZeroGyrovectorException:
            scores.append(-np.inf)
    return np.array(scores)


def sembias_eval(
        instances: Sequence[SemBiasInstance],
        emb: EmbeddingSet,
        t: float = evaluation_setting.DEFAULT_T,
        metric: SimilarityEnum = SimilarityEnum.NEG_POINCARE,
        scorer: SemBiasScorerEnum = SemBiasScorerEnum.ANALOGY,
) -> SemBiasResult:
    """
    인스턴스마다 네 후보 쌍 중 점수가 가장 높은 쌍을 고르고 Def / Ster / None 비율(%)을 센다.
    동점이면 def, ster, none, none 순서에서 앞선 쌍을 고른다.
    """
    if not instances:
        raise EmptyEvaluableException("no SemBias instances")
    emb.index(MALE_ANCHOR)
    emb.index(FEMALE_ANCHOR)

    counts = np.zeros(3, dtype=np.int64)
    skipped = 0
    for instance in instances:
        missing = emb.missing(instance.words())
        if missing:
            skipped += 1
            logger.warning(f"SemBias instance skipped, missing {missing}")
            continue
        if scorer == SemBiasScorerEnum.GYROCOSINE:
            scores = _gyrocosine_scores(instance, emb)
        else:
            scores = _analogy_scores(instance, emb, t, metric)
        # argmax 는 첫 최댓값을 고른다. 3, 4 번째 후보는 모두 None
        counts[min(int(np.argmax(scores)), 2)] += 1

    evaluated = int(counts.sum())
    if evaluated == 0:
        raise EmptyEvaluableException(f"all {len(instances)} SemBias instances have missing words")
    definition, stereotype, none = (100.0 * counts / evaluated).tolist()
    return SemBiasResult(
        definition=definition,
        stereotype=stereotype,
        none=none,
        evaluated=evaluated,
        skipped=skipped,
    )
