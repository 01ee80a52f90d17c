from typing import List, Optional

from pydantic import BaseModel, model_validator

from app.core.enums.similarity import SimilarityEnum
from app.core.errors.exceptions import InvalidConfigException


class WeatSpec(BaseModel):
    """
    WEAT 단어 집합. X/Y 는 target, A/B 는 attribute.
    |X| = |Y| >= 2, |A| = |B| >= 2 이고 네 집합은 서로소여야 한다.
    """
    name: Optional[str] = None
    targets_x: List[str]
    targets_y: List[str]
    attributes_a: List[str]
    attributes_b: List[str]
    similarity: SimilarityEnum = SimilarityEnum.NEG_POINCARE

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_sets(self) -> "WeatSpec":
        sets = {
            "targets_x": self.targets_x,
            "targets_y": self.targets_y,
            "attributes_a": self.attributes_a,
            "attributes_b": self.attributes_b,
        }
        for name, words in sets.items():
            if len(set(words)) != len(words):
                raise InvalidConfigException(f"{name} has duplicate words")
        if len(self.targets_x) != len(self.targets_y) or len(self.targets_x) < 2:
            raise InvalidConfigException(
                f"target sets must be equal-sized with >= 2 words, got {len(self.targets_x)}/{len(self.targets_y)}"
            )
        if len(self.attributes_a) != len(self.attributes_b) or len(self.attributes_a) < 2:
            raise InvalidConfigException(
                f"attribute sets must be equal-sized with >= 2 words, "
                f"got {len(self.attributes_a)}/{len(self.attributes_b)}"
            )
        seen = {}
        for name, words in sets.items():
            for w in words:
                if w in seen:
                    raise InvalidConfigException(f"'{w}' appears in both {seen[w]} and {name}")
                seen[w] = name
        return self

    def swapped_targets(self) -> "WeatSpec":
        return self.model_copy(update={"targets_x": self.targets_y, "targets_y": self.targets_x})


class WeatResult(BaseModel):
    name: Optional[str] = None
    statistic: float
    effect_size_d: float
    p_value: float
    permutations_used: int
    exact: bool
