import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from fastapi import Depends

from app.core.config import data_setting, pgd_setting
from app.core.decorators import log_errors
from app.core.utils import unique_in_order
from app.core.enums.gender import WordPartitionEnum
from app.core.errors.exceptions import ZeroGyrovectorException, InsufficientDataException, MissingWordException
from app.domain.bias.schemas.bias_report import BiasReport
from app.domain.bias.schemas.gender import GenderGyrovectors
from app.domain.bias.services.gyrocosine_bias import gender_gyrovectors, gyrocosine_bias_map, summarize_bias, \
    euclidean_gender_direction, direct_bias_euclidean, bias_correlation
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig
from app.infrastructure.repositories.word_list.word_list import WordListRepository, get_word_list_repository

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class BiasApplicationService:
    def __init__(
            self,
            word_list_repo: WordListRepository,
    ):
        self.word_list_repo = word_list_repo

    def load_gender_words(
            self,
            male_path: PathLike = data_setting.MALE_WORDS_PATH,
            female_path: PathLike = data_setting.FEMALE_WORDS_PATH,
    ) -> Tuple[List[str], List[str]]:
        return self.word_list_repo.load_word_list(male_path), self.word_list_repo.load_word_list(female_path)

    def load_specific_words(self, path: Optional[PathLike] = data_setting.GENDER_SPECIFIC_PATH) -> List[str]:
        return self.word_list_repo.load_word_list(path) if path else []

    @log_errors("Gender gyrovector computation failed")
    def gender_gyrovectors(
            self,
            emb: EmbeddingSet,
            male_words: Sequence[str],
            female_words: Sequence[str],
            cfg: MeanConfig = MeanConfig(),
    ) -> GenderGyrovectors:
        return gender_gyrovectors(emb, male_words, female_words, cfg)

    @staticmethod
    def neutral_vocabulary(emb: EmbeddingSet, specific_words: Sequence[str]) -> List[str]:
        return emb.with_partition(specific_words).words_in(WordPartitionEnum.NEUTRAL)

    @log_errors("Bias report failed")
    def bias_report(
            self,
            emb: EmbeddingSet,
            male_words: Sequence[str],
            female_words: Sequence[str],
            target_words: Optional[Sequence[str]] = None,
            specific_words: Sequence[str] = (),
            euclidean_emb: Optional[EmbeddingSet] = None,
            absolute_direct_bias: bool = False,
            cfg: MeanConfig = MeanConfig(),
            threshold: float = pgd_setting.BIAS_THRESHOLD,
            gv: Optional[GenderGyrovectors] = None,
    ) -> BiasReport:
        """
        단어별 γ(w) 리포트. target_words 가 비어 있으면 gender-neutral 어휘 전체를 쓴다.
        euclidean_emb 가 주어지면 direct bias 열과 상관계수를 붙인다.
        """
        if gv is None:
            gv = self.gender_gyrovectors(emb, male_words, female_words, cfg)
        if not target_words:
            targets = self.neutral_vocabulary(emb, [*specific_words, *male_words, *female_words])
        else:
            targets = [w for w in unique_in_order(target_words) if w in emb]
            if len(targets) < len(target_words):
                logger.warning(f"{len(target_words) - len(targets)} target words not in vocabulary, skipped")

        gammas = gyrocosine_bias_map(emb, targets, gv)
        report = BiasReport(gamma=gammas, summary=summarize_bias(gammas, threshold))
        if euclidean_emb is not None:
            report.direct_bias = self._direct_bias(euclidean_emb, male_words, female_words, list(gammas),
                                                   absolute_direct_bias)
            try:
                report.correlation = bias_correlation(gammas, report.direct_bias)
            except InsufficientDataException as e:
                logger.warning(f"bias correlation skipped: {e}")
        return report

    def word_bias(
            self,
            emb: EmbeddingSet,
            gv: GenderGyrovectors,
            words: Sequence[str],
            threshold: float = pgd_setting.BIAS_THRESHOLD,
    ) -> BiasReport:
        """요청한 단어가 하나라도 어휘에 없으면 에러"""
        missing = emb.missing(words)
        if missing:
            raise MissingWordException(f"{missing}")
        return self.bias_report(emb, [], [], target_words=words, threshold=threshold, gv=gv)

    @staticmethod
    def _direct_bias(
            euclidean_emb: EmbeddingSet,
            male_words: Sequence[str],
            female_words: Sequence[str],
            words: Sequence[str],
            absolute: bool,
    ) -> dict:
        direction = euclidean_gender_direction(euclidean_emb, male_words, female_words)
        direct = {}
        for word in words:
            if word not in euclidean_emb:
                continue
            try:
                direct[word] = direct_bias_euclidean(euclidean_emb.vector(word), direction, absolute)
            except ZeroGyrovectorException:
                logger.warning(f"'{word}' is the zero vector in the euclidean embedding, skipped")
        return direct


def get_bias_application_service(
        word_list_repo: WordListRepository = Depends(get_word_list_repository),
) -> BiasApplicationService:
    return BiasApplicationService(
        word_list_repo=word_list_repo,
    )
