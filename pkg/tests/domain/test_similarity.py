import numpy as np
import pytest

from app.core.enums.similarity import SimilarityEnum
from app.core.errors.exceptions import InsufficientDataException, DegenerateStatisticException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.similarity import SimilarityPair
from app.domain.evaluation.services.similarity import similarity, similarity_eval, similarity_matrix
from app.domain.geometry.services.gyrovector import poincare_distance
from tests.conftest import polar

RADII = [0.1, 0.2, 0.3, 0.4]


@pytest.fixture
def ring() -> EmbeddingSet:
    words = ["origin"] + [f"w{i}" for i in range(len(RADII))]
    vectors = [[0.0, 0.0]] + [polar(r, 30.0 * i) for i, r in enumerate(RADII)]
    return EmbeddingSet.from_words(words, np.array(vectors))


def pairs(scores):
    return [SimilarityPair(word1="origin", word2=f"w{i}", score=s) for i, s in enumerate(scores)]


class TestSimilarityMatrix:

    def test_negative_poincare(self):
        x, y = np.array([[0.1, 0.2], [0.0, -0.3]]), np.array([[0.4, 0.0]])
        matrix = similarity_matrix(x, y, SimilarityEnum.NEG_POINCARE)
        assert matrix.shape == (2, 1)
        assert matrix[1, 0] == pytest.approx(-poincare_distance(x[1], y[0]), rel=1e-12)

    def test_cosine_with_zero_vector(self):
        matrix = similarity_matrix(np.array([[0.0, 0.0], [0.3, 0.0]]), np.array([[0.0, 0.2]]), SimilarityEnum.COSINE)
        np.testing.assert_allclose(matrix, [[0.0], [0.0]], atol=1e-15)

    def test_scalar_similarity(self):
        assert similarity(np.array([0.3, 0.0]), np.array([0.6, 0.0]), SimilarityEnum.COSINE) == pytest.approx(1.0)


class TestSimilarityEval:

    def test_same_ordering(self, ring):
        assert similarity_eval(pairs([4.0, 3.0, 2.0, 1.0]), ring).spearman == pytest.approx(1.0)

    def test_reversed_ordering(self, ring):
        assert similarity_eval(pairs([1.0, 2.0, 3.0, 4.0]), ring).spearman == pytest.approx(-1.0)

    def test_one_rank_swap(self, ring):
        result = similarity_eval(pairs([4.0, 3.0, 1.0, 2.0]), ring)
        assert result.spearman == pytest.approx(1.0 - 6.0 * 2.0 / (4.0 * 15.0))
        assert result.evaluated == 4

    def test_oov_pairs_dropped(self, ring):
        dataset = pairs([4.0, 3.0, 2.0, 1.0]) + [SimilarityPair(word1="origin", word2="nowhere", score=9.0)]
        result = similarity_eval(dataset, ring)
        assert (result.evaluated, result.oov) == (4, 1)

    def test_cosine_metric(self):
        emb = EmbeddingSet.from_words(
            ["x", "a", "b", "c"], np.array([[0.5, 0.0], polar(0.3, 10.0), polar(0.3, 50.0), polar(0.3, 120.0)]))
        dataset = [SimilarityPair(word1="x", word2=w, score=s) for w, s in (("a", 9.0), ("b", 5.0), ("c", 1.0))]
        assert similarity_eval(dataset, emb, SimilarityEnum.COSINE).spearman == pytest.approx(1.0)

    def test_cosine_zero_vector_scores_zero(self):
        emb = EmbeddingSet.from_words(
            ["x", "a", "b", "c", "void"],
            np.array([[0.5, 0.0], polar(0.3, 10.0), polar(0.3, 50.0), polar(0.3, 120.0), [0.0, 0.0]]))
        scores = (("a", 9.0), ("b", 5.0), ("void", 3.0), ("c", 1.0))
        dataset = [SimilarityPair(word1="x", word2=w, score=s) for w, s in scores]
        result = similarity_eval(dataset, emb, SimilarityEnum.COSINE)
        assert result.spearman == pytest.approx(1.0)
        assert result.evaluated == 4

    def test_insufficient_pairs(self, ring):
        with pytest.raises(InsufficientDataException):
            similarity_eval(pairs([1.0, 2.0]), ring)

    def test_constant_human_scores(self, ring):
        with pytest.raises(DegenerateStatisticException):
            similarity_eval(pairs([1.0, 1.0, 1.0, 1.0]), ring)
