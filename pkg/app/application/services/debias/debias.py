import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from fastapi import Depends

from app.application.services.debias.dto.debias import DebiasReport, DebiasSummary, WordDebiasRecord, \
    DebiasedWordResponse
from app.core.decorators import log_errors
from app.core.enums.gender import WordPartitionEnum
from app.domain.bias.schemas.gender import GenderGyrovectors
from app.domain.debias.schemas.pgd import PgdConfig, DebiasedVocabulary
from app.domain.debias.services.pgd import debias_vocabulary, debias_word
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.infrastructure.task.worker_pool import WorkerPool, get_worker_pool

logger = logging.getLogger(__name__)


class DebiasApplicationService:
    def __init__(
            self,
            worker_pool: WorkerPool,
    ):
        self.worker_pool = worker_pool

    @log_errors("Vocabulary debiasing failed")
    def debias_vocabulary(
            self,
            emb: EmbeddingSet,
            gv: GenderGyrovectors,
            specific_words: Sequence[str],
            cfg: PgdConfig = PgdConfig(),
    ) -> Tuple[DebiasedVocabulary, DebiasReport]:
        """specific_words 에 없는 단어를 gender-neutral 로 보고 PGD 를 적용한다."""
        partitioned = emb.with_partition(specific_words)
        result = debias_vocabulary(partitioned, gv, cfg, mapper=self.worker_pool.map_ordered)
        return result, self._report(partitioned, result, cfg)

    @staticmethod
    def _report(emb: EmbeddingSet, result: DebiasedVocabulary, cfg: PgdConfig) -> DebiasReport:
        outcomes = [o for o in result.outcomes if not o.skipped]
        before = float(np.mean([o.f_g_before for o in outcomes])) if outcomes else 0.0
        after = float(np.mean([o.f_g_after for o in outcomes])) if outcomes else 0.0
        summary = DebiasSummary(
            neutral_words=len(result.outcomes),
            specific_words=len(emb.words_in(WordPartitionEnum.SPECIFIC)),
            changed=sum(o.changed for o in result.outcomes),
            mean_abs_gamma_before=before,
            mean_abs_gamma_after=after,
            reduction=1.0 - after / before if before > 0.0 else 0.0,
            min_gyrocosine_to_original=min((o.gyrocosine_to_original for o in outcomes), default=1.0),
        )
        logger.info(
            f"debiased {summary.neutral_words} words: mean |gamma| {before:.4f} -> {after:.4f} "
            f"({100.0 * summary.reduction:.1f}% reduction)"
        )
        return DebiasReport(
            lambda1=cfg.lambda1,
            lambda2=cfg.lambda2,
            learning_rate=cfg.learning_rate,
            epochs=cfg.epochs,
            summary=summary,
            words=[WordDebiasRecord.from_outcome(o) for o in result.outcomes],
        )

    @log_errors("Word debiasing failed")
    def debias_word(
            self,
            emb: EmbeddingSet,
            gv: GenderGyrovectors,
            word: str,
            cfg: Optional[PgdConfig] = None,
    ) -> DebiasedWordResponse:
        outcome = debias_word(emb.vector(word), gv, cfg or PgdConfig(), word=word)
        return DebiasedWordResponse(
            **WordDebiasRecord.from_outcome(outcome).model_dump(),
            original=outcome.original.tolist(),
            debiased=outcome.debiased.tolist(),
        )


def get_debias_application_service(
        worker_pool: WorkerPool = Depends(get_worker_pool),
) -> DebiasApplicationService:
    return DebiasApplicationService(
        worker_pool=worker_pool,
    )
