import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
from fastapi import Depends

from app.application.services.evaluation.dto.evaluation import WeatReport, SimilarityReport, AnalogyReport, \
    AnalogyPrediction, NeighborWord
from app.core.config import evaluation_setting
from app.core.decorators import log_errors
from app.core.enums.similarity import SimilarityEnum, SemBiasScorerEnum
from app.core.errors.exceptions import EmptyInputException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.sembias import SemBiasResult
from app.domain.evaluation.services.analogy import analogy_eval, analogy_solve, fold_selections, nearest_words, \
    t_grid_scores, select_t
from app.domain.evaluation.services.sembias import sembias_eval
from app.domain.evaluation.services.similarity import similarity_eval
from app.domain.evaluation.services.weat import weat_test
from app.infrastructure.repositories.benchmark.benchmark import BenchmarkRepository, get_benchmark_repository

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class EvaluationApplicationService:
    def __init__(
            self,
            benchmark_repo: BenchmarkRepository,
    ):
        self.benchmark_repo = benchmark_repo

    @log_errors("WEAT evaluation failed")
    def weat(
            self,
            emb: EmbeddingSet,
            spec_paths: Sequence[PathLike] = (),
            metric: SimilarityEnum = SimilarityEnum.NEG_POINCARE,
            max_permutations: int = evaluation_setting.WEAT_MAX_PERMUTATIONS,
            seed: int = evaluation_setting.WEAT_SEED,
    ) -> WeatReport:
        """spec_paths 가 비어 있으면 기본 WEAT 스펙 전부를 돈다."""
        paths = list(spec_paths) or self.benchmark_repo.list_weat_specs()
        if not paths:
            raise EmptyInputException("no WEAT specs")
        results = [
            weat_test(self.benchmark_repo.load_weat_spec(p, metric), emb, max_permutations, seed)
            for p in paths
        ]
        return WeatReport(similarity=metric.value, seed=seed, results=results)

    @log_errors("SemBias evaluation failed")
    def sembias(
            self,
            emb: EmbeddingSet,
            dataset_path: PathLike,
            t: float = evaluation_setting.DEFAULT_T,
            metric: SimilarityEnum = SimilarityEnum.NEG_POINCARE,
            scorer: SemBiasScorerEnum = SemBiasScorerEnum.ANALOGY,
    ) -> SemBiasResult:
        return sembias_eval(self.benchmark_repo.load_sembias(dataset_path), emb, t, metric, scorer)

    @log_errors("Similarity evaluation failed")
    def similarity(
            self,
            emb: EmbeddingSet,
            dataset_paths: Sequence[PathLike],
            metric: SimilarityEnum = SimilarityEnum.NEG_POINCARE,
    ) -> SimilarityReport:
        if not dataset_paths:
            raise EmptyInputException("no similarity datasets")
        datasets = {
            Path(p).stem: similarity_eval(self.benchmark_repo.load_similarity(p), emb, metric)
            for p in dataset_paths
        }
        return SimilarityReport(similarity=metric.value, datasets=datasets)

    @log_errors("Analogy evaluation failed")
    def analogy(
            self,
            emb: EmbeddingSet,
            dataset_path: PathLike,
            t: float = evaluation_setting.DEFAULT_T,
            metric: SimilarityEnum = SimilarityEnum.COSINE,
            cv_dataset_path: Optional[PathLike] = None,
    ) -> AnalogyReport:
        """
        cv_dataset_path 가 주어지면 그 성별 정의 analogy 로 t 를 교차검증해 고른 뒤 평가한다.
        """
        scores, selections, held_out = None, None, None
        if cv_dataset_path is not None:
            scores = t_grid_scores(self.benchmark_repo.load_analogy(cv_dataset_path), emb, metric)
            selections = fold_selections(scores)
            held_out = float(np.mean([f.held_out_accuracy for f in selections]))
            t = select_t(scores)
            logger.info(f"cross-validated t = {t} (held-out accuracy {held_out:.3f})")
        result = analogy_eval(self.benchmark_repo.load_analogy(dataset_path), emb, t, metric)
        return AnalogyReport(
            similarity=metric.value,
            result=result,
            cross_validated=scores is not None,
            t_grid_scores=scores,
            fold_selections=selections,
            held_out_accuracy=held_out,
        )

    def cross_validate_t(
            self,
            emb: EmbeddingSet,
            cv_dataset_path: PathLike,
            metric: SimilarityEnum = SimilarityEnum.COSINE,
    ) -> AnalogyReport:
        """평가 데이터 없이 t 선택만 할 때. result 는 선택된 t 로 cv 데이터 전체를 평가한 값이다."""
        return self.analogy(emb, cv_dataset_path, metric=metric, cv_dataset_path=cv_dataset_path)

    def analogy_query(
            self,
            emb: EmbeddingSet,
            a: str,
            b: str,
            c: str,
            t: float = evaluation_setting.DEFAULT_T,
            metric: SimilarityEnum = SimilarityEnum.COSINE,
            top_k: int = 5,
    ) -> AnalogyPrediction:
        point = analogy_solve(a, b, c, t, emb)
        neighbors = nearest_words(point, emb, metric, exclude=(a, b, c), top_k=top_k)
        return AnalogyPrediction(
            t=t,
            point=point.tolist(),
            neighbors=[NeighborWord(word=w, score=s) for w, s in neighbors],
        )


def get_evaluation_application_service(
        benchmark_repo: BenchmarkRepository = Depends(get_benchmark_repository),
) -> EvaluationApplicationService:
    return EvaluationApplicationService(
        benchmark_repo=benchmark_repo,
    )
