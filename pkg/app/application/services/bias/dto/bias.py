from typing import List

from pydantic import BaseModel, Field

from app.core.config import pgd_setting


class WordBiasRequest(BaseModel):
    words: List[str] = Field(min_length=1)
    threshold: float = pgd_setting.BIAS_THRESHOLD
