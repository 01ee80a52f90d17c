from dataclasses import dataclass, field
from typing import Dict, List, Optional, Iterable

import numpy as np
import numpy.typing as npt

from app.core.enums.gender import WordPartitionEnum
from app.core.enums.space import EmbeddingSpaceEnum
from app.core.errors.exceptions import MissingWordException, DimensionMismatchException, EmptyEmbeddingException


@dataclass(frozen=True)
class EmbeddingSet:
    """
    어휘 → 행 인덱스 매핑과 n 차원 벡터 행렬.
    vectors 는 읽기 전용으로 고정되며 변경은 with_* 메서드로 새 객체를 만든다.
    """
    vocab: Dict[str, int]
    vectors: npt.NDArray[np.float64]
    space: EmbeddingSpaceEnum = EmbeddingSpaceEnum.POINCARE
    partition: Optional[Dict[str, WordPartitionEnum]] = field(default=None, repr=False)

    def __post_init__(self):
        if self.vectors.ndim != 2:
            raise DimensionMismatchException(f"vectors must be a matrix, got shape {self.vectors.shape}")
        if len(self.vocab) != self.vectors.shape[0]:
            raise DimensionMismatchException(f"{len(self.vocab)} words for {self.vectors.shape[0]} rows")
        if sorted(self.vocab.values()) != list(range(len(self.vocab))):
            raise DimensionMismatchException("vocab indices must be dense 0..V-1")
        vectors = np.array(self.vectors, dtype=np.float64)
        vectors.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)

    @classmethod
    def from_words(
            cls,
            words: List[str],
            vectors: npt.ArrayLike,
            space: EmbeddingSpaceEnum = EmbeddingSpaceEnum.POINCARE,
    ) -> "EmbeddingSet":
        if not words:
            raise EmptyEmbeddingException()
        return cls(vocab={w: i for i, w in enumerate(words)}, vectors=np.asarray(vectors, dtype=np.float64), space=space)

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def words(self) -> List[str]:
        ordered = [""] * len(self.vocab)
        for word, idx in self.vocab.items():
            ordered[idx] = word
        return ordered

    def __len__(self) -> int:
        return len(self.vocab)

    def __contains__(self, word: str) -> bool:
        return word in self.vocab

    def index(self, word: str) -> int:
        try:
            return self.vocab[word]
        except KeyError:
            raise MissingWordException(word)

    def vector(self, word: str) -> npt.NDArray[np.float64]:
        return self.vectors[self.index(word)]

    def vectors_for(self, words: Iterable[str]) -> npt.NDArray[np.float64]:
        return self.vectors[[self.index(w) for w in words]]

    def missing(self, words: Iterable[str]) -> List[str]:
        return [w for w in words if w not in self.vocab]

    def with_vectors(self, vectors: npt.ArrayLike) -> "EmbeddingSet":
        return EmbeddingSet(vocab=dict(self.vocab), vectors=np.asarray(vectors), space=self.space, partition=self.partition)

    def with_partition(self, specific_words: Iterable[str]) -> "EmbeddingSet":
        """목록에 있는 단어는 gender-specific, 나머지는 gender-neutral"""
        specific = set(specific_words)
        partition = {
            w: WordPartitionEnum.SPECIFIC if w in specific else WordPartitionEnum.NEUTRAL
            for w in self.words
        }
        return EmbeddingSet(vocab=dict(self.vocab), vectors=self.vectors, space=self.space, partition=partition)

    def words_in(self, part: WordPartitionEnum) -> List[str]:
        if self.partition is None:
            return []
        return [w for w in self.words if self.partition.get(w) == part]
