from pydantic import BaseModel


class SimilarityPair(BaseModel):
    word1: str
    word2: str
    score: float


class SimilarityResult(BaseModel):
    spearman: float
    evaluated: int
    oov: int
