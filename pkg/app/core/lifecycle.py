import asyncio
import logging
from typing import Optional

from app.core.config import api_setting, data_setting
from app.core.enums.space import EmbeddingSpaceEnum
from app.domain.bias.schemas.gender import GenderGyrovectors
from app.domain.bias.services.gyrocosine_bias import gender_gyrovectors
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.infrastructure.repositories.embedding.embedding import get_embedding_repository
from app.infrastructure.repositories.word_list.word_list import get_word_list_repository

logger = logging.getLogger(__name__)


class LifespanServices:
   """서버 수명 동안 공유하는 읽기 전용 모델 상태"""

   def __init__(self):
       self.embeddings: Optional[EmbeddingSet] = None
       self.gender: Optional[GenderGyrovectors] = None

   @property
   def ready(self) -> bool:
       return self.embeddings is not None and self.gender is not None

   def _load(self):
       embeddings = get_embedding_repository().load(
           api_setting.EMBEDDINGS_PATH, EmbeddingSpaceEnum(api_setting.EMBEDDINGS_SPACE)
       )
       word_list_repo = get_word_list_repository()
       male = word_list_repo.load_word_list(data_setting.MALE_WORDS_PATH)
       female = word_list_repo.load_word_list(data_setting.FEMALE_WORDS_PATH)
       self.gender = gender_gyrovectors(embeddings, male, female)
       self.embeddings = embeddings

   async def initialize(self):
       """임베딩과 gender gyrovector 를 한 번 계산해 둔다"""
       if not api_setting.EMBEDDINGS_PATH:
           logger.warning("EMBEDDINGS_PATH is not set; bias / debias endpoints will answer 503")
           return
       # 평균 계산은 CPU 작업이라 이벤트 루프 밖에서 돌린다
       await asyncio.to_thread(self._load)
       logger.info(f"model state ready: {len(self.embeddings)} words")

   async def cleanup(self):
       """모든 리소스 정리"""
       self.embeddings = None
       self.gender = None
