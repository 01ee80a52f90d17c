import logging
from collections import defaultdict
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import evaluation_setting
from app.core.enums.similarity import SimilarityEnum
from app.core.errors.exceptions import InvalidConfigException, EmptyEvaluableException, InsufficientDataException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.analogy import AnalogyQuery, AnalogyResult, FoldSelection, TGridScore
from app.domain.evaluation.services.similarity import similarity_matrix
from app.domain.geometry.schemas.gyrovector import PoincarePoint
from app.domain.geometry.services.gyrovector import as_point, _check_dims, _mobius_add, _gyration, _scalar_mul, \
    project_to_ball

logger = logging.getLogger(__name__)

QUERY_CHUNK = 256


def _check_t(t: float) -> float:
    if not 0.0 <= t <= 1.0:
        raise InvalidConfigException(f"t={t} is outside [0, 1]")
    return float(t)


def _translations(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # d1 = c ⊕ gyr[c, ⊖a](⊖a ⊕ b),  d2 = b ⊕ gyr[b, ⊖a](⊖a ⊕ c)
    d1 = _mobius_add(c, project_to_ball(_gyration(c, -a, _mobius_add(-a, b))))
    d2 = _mobius_add(b, project_to_ball(_gyration(b, -a, _mobius_add(-a, c))))
    return d1, d2


def _interpolate(d1: np.ndarray, d2: np.ndarray, t: float) -> np.ndarray:
    if t == 0.0:
        return d1
    if t == 1.0:
        return d2
    return _mobius_add(d1, _scalar_mul(t, _mobius_add(-d1, d2)))


def analogy_solve_points(a: PoincarePoint, b: PoincarePoint, c: PoincarePoint, t: float) -> PoincarePoint:
    """
    'a 는 b, c 는 ?' 의 gyro-translation 해 d^t = d1 ⊕ ((⊖d1 ⊕ d2) ⊗ t).
    t = 0 이면 d1, t = 1 이면 d2 를 그대로 돌려준다.
    """
    t = _check_t(t)
    a, b, c = as_point(a, "a"), as_point(b, "b"), as_point(c, "c")
    _check_dims(a, b, c)
    d1, d2 = _translations(a, b, c)
    return _interpolate(d1, d2, t)


def analogy_solve(a: str, b: str, c: str, t: float, emb: EmbeddingSet) -> PoincarePoint:
    return analogy_solve_points(emb.vector(a), emb.vector(b), emb.vector(c), t)


def nearest_words(
        point: PoincarePoint,
        emb: EmbeddingSet,
        metric: SimilarityEnum = SimilarityEnum.COSINE,
        exclude: Sequence[str] = (),
        top_k: int = 1,
) -> List[Tuple[str, float]]:
    """어휘 전체를 전수 탐색해 유사도가 큰 순서로 top_k 단어를 돌려준다."""
    scores = similarity_matrix(point, emb.vectors, metric)[0]
    for w in exclude:
        if w in emb:
            scores[emb.index(w)] = -np.inf
    order = np.argsort(-scores, kind="stable")[:top_k]
    words = emb.words
    return [(words[i], float(scores[i])) for i in order if np.isfinite(scores[i])]


def _resolvable(dataset: Sequence[AnalogyQuery], emb: EmbeddingSet) -> List[AnalogyQuery]:
    return [q for q in dataset if q.w1 in emb and q.w2 in emb and q.w3 in emb]


def _predict(queries: Sequence[AnalogyQuery], emb: EmbeddingSet, t: float, metric: SimilarityEnum) -> List[str]:
    """쿼리 단어 셋을 후보에서 뺀 최근접 단어. 행렬 메모리를 위해 청크로 나눠 계산한다."""
    words = emb.words
    predictions: List[str] = []
    for start in range(0, len(queries), QUERY_CHUNK):
        chunk = queries[start:start + QUERY_CHUNK]
        a = emb.vectors_for(q.w1 for q in chunk)
        b = emb.vectors_for(q.w2 for q in chunk)
        c = emb.vectors_for(q.w3 for q in chunk)
        d1, d2 = _translations(a, b, c)
        scores = similarity_matrix(_interpolate(d1, d2, t), emb.vectors, metric)
        for row, q in enumerate(chunk):
            scores[row, [emb.index(q.w1), emb.index(q.w2), emb.index(q.w3)]] = -np.inf
        predictions.extend(words[i] for i in np.argmax(scores, axis=1))
    return predictions


def _hits(queries: Sequence[AnalogyQuery], predictions: Sequence[str]) -> List[bool]:
    return [p.casefold() == q.gold.casefold() for q, p in zip(queries, predictions)]


def analogy_eval(
        dataset: Sequence[AnalogyQuery],
        emb: EmbeddingSet,
        t: float = evaluation_setting.DEFAULT_T,
        metric: SimilarityEnum = SimilarityEnum.COSINE,
) -> AnalogyResult:
    """
    d^t 에 가장 가까운 어휘 단어가 정답인 비율.
    어휘 밖 단어가 있는 쿼리는 오답으로 세고 oov 로 따로 보고한다.
    """
    t = _check_t(t)
    queries = _resolvable(dataset, emb)
    oov = len(dataset) - len(queries)
    if not queries:
        raise EmptyEvaluableException(f"all {len(dataset)} analogy queries are out of vocabulary")
    if oov:
        logger.warning(f"{oov} of {len(dataset)} analogy queries out of vocabulary")

    hits = _hits(queries, _predict(queries, emb, t, metric))
    correct = sum(hits)

    section_total = defaultdict(int)
    section_correct = defaultdict(int)
    for q in dataset:
        if q.section is not None:
            section_total[q.section] += 1
    for q, hit in zip(queries, hits):
        if q.section is not None:
            section_correct[q.section] += int(hit)

    return AnalogyResult(
        accuracy=correct / len(dataset),
        correct=correct,
        total=len(dataset),
        oov=oov,
        evaluated=len(queries),
        t=t,
        sections={s: section_correct[s] / n for s, n in section_total.items()},
    )


def _folds(dataset: Sequence[AnalogyQuery], n_folds: int) -> List[List[AnalogyQuery]]:
    ordered = sorted(dataset, key=lambda q: q.text())
    bounds = [len(ordered) * i // n_folds for i in range(n_folds + 1)]
    return [ordered[bounds[i]:bounds[i + 1]] for i in range(n_folds)]


def _fold_accuracy(fold: Sequence[AnalogyQuery], emb: EmbeddingSet, t: float, metric: SimilarityEnum) -> float:
    queries = _resolvable(fold, emb)
    if not queries:
        return 0.0
    return sum(_hits(queries, _predict(queries, emb, t, metric))) / len(fold)


def t_grid_scores(
        dataset: Sequence[AnalogyQuery],
        emb: EmbeddingSet,
        metric: SimilarityEnum = SimilarityEnum.COSINE,
        grid: Optional[Sequence[float]] = None,
        n_folds: int = evaluation_setting.CV_FOLDS,
) -> List[TGridScore]:
    """t 격자의 각 값에서 fold 별 정확도와 평균"""
    if n_folds < 2:
        raise InvalidConfigException(f"n_folds={n_folds}, cross-validation needs at least 2")
    if len(dataset) < n_folds:
        raise InsufficientDataException(f"{len(dataset)} analogies for {n_folds}-fold cross-validation")
    grid = evaluation_setting.T_GRID if grid is None else grid
    folds = _folds(dataset, n_folds)
    scores = []
    for t in grid:
        accuracies = [_fold_accuracy(fold, emb, _check_t(t), metric) for fold in folds]
        scores.append(TGridScore(t=t, fold_accuracies=accuracies, mean_accuracy=float(np.mean(accuracies))))
    return scores


def _train_accuracy(score: TGridScore, held_out: int) -> float:
    return float(np.mean([a for j, a in enumerate(score.fold_accuracies) if j != held_out]))


def fold_selections(scores: Sequence[TGridScore]) -> List[FoldSelection]:
    """fold 마다 나머지 fold 에서 t 를 고르고, 빼 둔 fold 에서 그 t 를 채점한다."""
    if not scores:
        raise InsufficientDataException("empty t grid")
    selections = []
    for k in range(len(scores[0].fold_accuracies)):
        # 동점이면 작은 t
        best = min(scores, key=lambda s: (-_train_accuracy(s, k), s.t))
        selections.append(FoldSelection(
            held_out_fold=k,
            t=best.t,
            train_accuracy=_train_accuracy(best, k),
            held_out_accuracy=best.fold_accuracies[k],
        ))
    return selections


def select_t(scores: Sequence[TGridScore]) -> float:
    """fold 별로 고른 t 중 held-out 정확도가 가장 높은 값. 동점이면 작은 t"""
    best = min(fold_selections(scores), key=lambda f: (-f.held_out_accuracy, f.t))
    return best.t


def cross_validate_t(
        def_analogies: Sequence[AnalogyQuery],
        emb: EmbeddingSet,
        metric: SimilarityEnum = SimilarityEnum.COSINE,
        grid: Optional[Sequence[float]] = None,
) -> float:
    """성별 정의 analogy 로 2-fold 교차검증해 held-out 정확도가 가장 높은 t 를 고른다."""
    t = select_t(t_grid_scores(def_analogies, emb, metric, grid))
    logger.info(f"cross-validated t = {t}")
    return t
