from typing import Tuple

from pydantic import BaseModel

WordPair = Tuple[str, str]


class SemBiasInstance(BaseModel):
    def_pair: WordPair
    ster_pair: WordPair
    none_pair_1: WordPair
    none_pair_2: WordPair

    def candidates(self) -> Tuple[WordPair, ...]:
        """동점이면 앞선 쌍을 고른다: def, ster, none, none"""
        return self.def_pair, self.ster_pair, self.none_pair_1, self.none_pair_2

    def words(self) -> Tuple[str, ...]:
        return tuple(w for pair in self.candidates() for w in pair)


class SemBiasResult(BaseModel):
    definition: float
    stereotype: float
    none: float
    evaluated: int
    skipped: int
