import logging
from typing import Sequence

import numpy as np
from scipy import stats

from app.core.enums.similarity import SimilarityEnum
from app.core.errors.exceptions import InsufficientDataException, DegenerateStatisticException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.similarity import SimilarityPair, SimilarityResult
from app.domain.geometry.services.gyrovector import _distance

logger = logging.getLogger(__name__)

MIN_SIMILARITY_PAIRS = 3


def similarity_matrix(points: np.ndarray, others: np.ndarray, metric: SimilarityEnum) -> np.ndarray:
    """
    points (k, n) 와 others (m, n) 사이의 (k, m) 유사도.
    neg-poincare 는 −d(x, y), cosine 은 원시 좌표의 유클리드 코사인.
    """
    points = np.atleast_2d(points)
    others = np.atleast_2d(others)
    if metric == SimilarityEnum.NEG_POINCARE:
        return -_distance(points[:, None, :], others[None, :, :])
    p_norm = np.linalg.norm(points, axis=1, keepdims=True)
    o_norm = np.linalg.norm(others, axis=1, keepdims=True)
    denom = p_norm * o_norm.T
    with np.errstate(invalid="ignore", divide="ignore"):
        cos = points @ others.T / denom
    return np.where(denom > 0.0, cos, 0.0)


def similarity(x: np.ndarray, y: np.ndarray, metric: SimilarityEnum) -> float:
    return float(similarity_matrix(x, y, metric)[0, 0])


def _rowwise_cosine(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    # 영벡터가 낀 쌍은 0
    denom = np.linalg.norm(left, axis=1) * np.linalg.norm(right, axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        cos = np.einsum("ij,ij->i", left, right) / denom
    return np.where(denom > 0.0, cos, 0.0)


def similarity_eval(
        dataset: Sequence[SimilarityPair],
        emb: EmbeddingSet,
        metric: SimilarityEnum = SimilarityEnum.NEG_POINCARE,
) -> SimilarityResult:
    """모델 유사도와 사람 점수 사이의 Spearman 순위 상관. 어휘 밖 쌍은 빼고 센다."""
    resolvable = [p for p in dataset if p.word1 in emb and p.word2 in emb]
    oov = len(dataset) - len(resolvable)
    if oov:
        logger.warning(f"{oov} of {len(dataset)} similarity pairs out of vocabulary")
    if len(resolvable) < MIN_SIMILARITY_PAIRS:
        raise InsufficientDataException(f"{len(resolvable)} resolvable pairs, need {MIN_SIMILARITY_PAIRS}")

    left = emb.vectors_for(p.word1 for p in resolvable)
    right = emb.vectors_for(p.word2 for p in resolvable)
    if metric == SimilarityEnum.NEG_POINCARE:
        model = -_distance(left, right)
    else:
        model = _rowwise_cosine(left, right)
    human = np.array([p.score for p in resolvable], dtype=np.float64)
    if np.ptp(model) == 0.0 or np.ptp(human) == 0.0:
        raise DegenerateStatisticException("similarity scores have zero variance")

    rho = stats.spearmanr(model, human)[0]
    return SimilarityResult(spearman=float(rho), evaluated=len(resolvable), oov=oov)
