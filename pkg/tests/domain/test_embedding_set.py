import numpy as np
import pytest

from app.core.enums.gender import WordPartitionEnum
from app.core.errors.exceptions import MissingWordException, DimensionMismatchException, EmptyEmbeddingException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet


@pytest.fixture
def emb() -> EmbeddingSet:
    return EmbeddingSet.from_words(["king", "queen", "apple"], [[0.1, 0.2], [0.3, -0.1], [0.0, 0.5]])


class TestEmbeddingSet:

    def test_lookup(self, emb):
        assert len(emb) == 3
        assert emb.dimension == 2
        assert emb.words == ["king", "queen", "apple"]
        assert "queen" in emb and "pear" not in emb
        np.testing.assert_array_equal(emb.vector("apple"), [0.0, 0.5])
        np.testing.assert_array_equal(emb.vectors_for(["apple", "king"]), [[0.0, 0.5], [0.1, 0.2]])
        assert emb.missing(["king", "pear"]) == ["pear"]

    def test_missing_word(self, emb):
        with pytest.raises(MissingWordException):
            emb.vector("pear")

    def test_vectors_are_read_only(self, emb):
        with pytest.raises(ValueError):
            emb.vectors[0, 0] = 0.9

    def test_source_array_is_copied(self):
        source = np.array([[0.1, 0.2]])
        emb = EmbeddingSet.from_words(["a"], source)
        source[0, 0] = 0.5
        assert emb.vector("a")[0] == 0.1

    def test_shape_checks(self):
        with pytest.raises(DimensionMismatchException):
            EmbeddingSet.from_words(["a", "b"], [[0.1, 0.2]])
        with pytest.raises(DimensionMismatchException):
            EmbeddingSet(vocab={"a": 0, "b": 2}, vectors=np.zeros((2, 2)))
        with pytest.raises(EmptyEmbeddingException):
            EmbeddingSet.from_words([], np.zeros((0, 2)))

    def test_partition(self, emb):
        assert emb.words_in(WordPartitionEnum.NEUTRAL) == []
        parted = emb.with_partition(["king", "queen", "prince"])
        assert parted.words_in(WordPartitionEnum.SPECIFIC) == ["king", "queen"]
        assert parted.words_in(WordPartitionEnum.NEUTRAL) == ["apple"]
        assert emb.partition is None

    def test_with_vectors_keeps_partition(self, emb):
        parted = emb.with_partition(["king"])
        moved = parted.with_vectors(np.zeros((3, 2)))
        assert moved.partition == parted.partition
        np.testing.assert_array_equal(moved.vector("king"), [0.0, 0.0])
        np.testing.assert_array_equal(parted.vector("king"), [0.1, 0.2])
