import logging
from pathlib import Path
from typing import Union

from fastapi import Depends

from app.application.services.mean.dto.mean import MeanReport
from app.core.decorators import log_errors
from app.core.errors.exceptions import MissingWordException, EmptyInputException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig
from app.domain.optimization.services.intrinsic_mean import karcher_mean
from app.infrastructure.repositories.word_list.word_list import WordListRepository, get_word_list_repository

logger = logging.getLogger(__name__)


class MeanApplicationService:
    def __init__(
            self,
            word_list_repo: WordListRepository,
    ):
        self.word_list_repo = word_list_repo

    @log_errors("Intrinsic mean failed")
    def intrinsic_mean(self, emb: EmbeddingSet, words_path: Union[str, Path], cfg: MeanConfig) -> MeanReport:
        words = self.word_list_repo.load_word_list(words_path)
        if not words:
            raise EmptyInputException(f"{words_path} has no words")
        missing = emb.missing(words)
        if missing:
            raise MissingWordException(f"{missing}")

        result = karcher_mean(list(emb.vectors_for(words)), cfg)
        return MeanReport(
            words=words,
            mean=result.mean.tolist(),
            converged=result.converged,
            epochs_run=result.epochs_run,
            grad_norm=result.grad_norm,
            objective=result.objective,
        )


def get_mean_application_service(
        word_list_repo: WordListRepository = Depends(get_word_list_repository),
) -> MeanApplicationService:
    return MeanApplicationService(
        word_list_repo=word_list_repo,
    )
