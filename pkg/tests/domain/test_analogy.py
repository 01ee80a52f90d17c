import numpy as np
import pytest

from app.core.enums.similarity import SimilarityEnum
from app.core.errors.exceptions import InvalidConfigException, EmptyEvaluableException, InsufficientDataException, \
    MissingWordException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.evaluation.schemas.analogy import AnalogyQuery, TGridScore
from app.domain.evaluation.services.analogy import (
    analogy_eval,
    analogy_solve,
    analogy_solve_points,
    cross_validate_t,
    fold_selections,
    nearest_words,
    select_t,
    t_grid_scores,
)
from app.domain.geometry.services.gyrovector import gyr, mobius_add, mobius_scalar_mul, poincare_distance
from tests.conftest import polar

A, B, C = np.array([0.3, 0.1]), np.array([-0.2, 0.4]), np.array([0.1, -0.5])
# 한 사분면에 모인 쿼리. 180° 회전한 두 번째 쿼리와 겹치지 않는다
QA, QB, QC = np.array([0.30, 0.40]), np.array([0.35, 0.50]), np.array([0.45, 0.30])


def mobius_1d(x: float, y: float) -> float:
    return (x + y) / (1.0 + x * y)


def rotated(point, degrees):
    theta = np.deg2rad(degrees)
    rotation = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    return rotation @ point


def build(points: dict) -> EmbeddingSet:
    return EmbeddingSet.from_words(list(points), np.array(list(points.values())))


class TestAnalogySolve:

    def test_endpoints(self):
        d1 = mobius_add(C, gyr(C, -A, mobius_add(-A, B)))
        d2 = mobius_add(B, gyr(B, -A, mobius_add(-A, C)))
        np.testing.assert_allclose(analogy_solve_points(A, B, C, 0.0), d1, atol=1e-15)
        np.testing.assert_allclose(analogy_solve_points(A, B, C, 1.0), d2, atol=1e-15)

    def test_interpolation_follows_geodesic(self):
        d1 = analogy_solve_points(A, B, C, 0.0)
        d2 = analogy_solve_points(A, B, C, 1.0)
        total = poincare_distance(d1, d2)
        assert total > 1e-3
        for t in (0.3, 0.5, 0.8):
            dt = analogy_solve_points(A, B, C, t)
            assert poincare_distance(d1, dt) == pytest.approx(t * total, rel=1e-8)
            assert poincare_distance(dt, d2) == pytest.approx((1.0 - t) * total, rel=1e-8)

    def test_degenerate_collapses(self):
        np.testing.assert_allclose(analogy_solve_points(A, A, C, 0.0), C, atol=1e-12)
        np.testing.assert_allclose(analogy_solve_points(A, B, A, 1.0), B, atol=1e-12)

    def test_one_dimensional_solutions_agree(self):
        a, b, c = 0.1, 0.3, 0.2
        expected = mobius_1d(c, mobius_1d(-a, b))
        for t in (0.0, 0.5, 1.0):
            np.testing.assert_allclose(analogy_solve_points(a, b, c, t), [expected], atol=1e-14)

    def test_euclidean_limit(self):
        r = 1e-3
        a, b, c = (mobius_scalar_mul(r, p) for p in (A, B, C))
        euclidean = c + b - a
        for t in (0.0, 0.3, 1.0):
            dt = analogy_solve_points(a, b, c, t)
            assert np.linalg.norm(dt - euclidean) <= 1e-3 * np.linalg.norm(euclidean)

    def test_t_outside_unit_interval(self):
        with pytest.raises(InvalidConfigException):
            analogy_solve_points(A, B, C, 1.5)

    def test_words(self):
        emb = build({"a": A, "b": B, "c": C})
        np.testing.assert_array_equal(analogy_solve("a", "b", "c", 0.3, emb), analogy_solve_points(A, B, C, 0.3))
        with pytest.raises(MissingWordException):
            analogy_solve("a", "b", "zz", 0.3, emb)


class TestNearestWords:

    def test_orders_by_similarity_and_excludes(self):
        emb = build({"east": [0.5, 0.0], "north": [0.0, 0.5], "northeast": [0.3, 0.3], "west": [-0.5, 0.0]})
        neighbours = nearest_words(np.array([0.4, 0.05]), emb, top_k=3)
        assert [w for w, _ in neighbours] == ["east", "northeast", "north"]
        excluded = nearest_words(np.array([0.4, 0.05]), emb, exclude=["east"], top_k=1)
        assert excluded[0][0] == "northeast"

    def test_negative_poincare(self):
        emb = build({"near": [0.1, 0.1], "far": [0.1, 0.8]})
        word, score = nearest_words(np.array([0.1, 0.0]), emb, SimilarityEnum.NEG_POINCARE)[0]
        assert word == "near"
        assert score == pytest.approx(-poincare_distance([0.1, 0.0], [0.1, 0.1]))


class TestAnalogyEval:

    @pytest.fixture
    def solved(self):
        t = 0.3
        points = {"a": A, "b": B, "c": C, "gold": analogy_solve_points(A, B, C, t)}
        for i in range(6):
            points[f"decoy{i}"] = polar(0.6, 60.0 * i + 17.0)
        return build(points), t

    def test_gold_at_prediction(self, solved):
        emb, t = solved
        result = analogy_eval([AnalogyQuery(w1="a", w2="b", w3="c", gold="gold")], emb, t)
        assert result.accuracy == 1.0
        assert result.correct == 1
        assert result.t == t

    def test_case_folded_gold(self, solved):
        emb, t = solved
        result = analogy_eval([AnalogyQuery(w1="a", w2="b", w3="c", gold="GOLD")], emb, t)
        assert result.accuracy == 1.0

    def test_query_words_are_excluded(self):
        a = np.array([0.3, 0.1])
        b = a + np.array([1e-4, 0.0])
        c = np.array([-0.2, 0.4])
        emb = build({"a": a, "b": b, "c": c, "gold": rotated(c, 3.0), "other": rotated(c, 40.0)})
        prediction = analogy_solve_points(a, b, c, 0.3)
        assert nearest_words(prediction, emb)[0][0] == "c"
        result = analogy_eval([AnalogyQuery(w1="a", w2="b", w3="c", gold="gold")], emb, 0.3)
        assert result.accuracy == 1.0

    def test_oov_counts_as_miss(self, solved):
        emb, t = solved
        dataset = [
            AnalogyQuery(w1="a", w2="b", w3="c", gold="gold", section="capital"),
            AnalogyQuery(w1="a", w2="b", w3="missing", gold="gold", section="capital"),
            AnalogyQuery(w1="a", w2="b", w3="c", gold="decoy0", section="family"),
        ]
        result = analogy_eval(dataset, emb, t)
        assert result.accuracy == pytest.approx(1.0 / 3.0)
        assert (result.total, result.evaluated, result.oov, result.correct) == (3, 2, 1, 1)
        assert result.sections == {"capital": 0.5, "family": 0.0}

    def test_all_oov(self, solved):
        emb, t = solved
        with pytest.raises(EmptyEvaluableException):
            analogy_eval([AnalogyQuery(w1="x", w2="y", w3="z", gold="w")], emb, t)

    def test_invalid_t(self, solved):
        emb, _ = solved
        with pytest.raises(InvalidConfigException):
            analogy_eval([AnalogyQuery(w1="a", w2="b", w3="c", gold="gold")], emb, -0.1)


class TestCrossValidation:

    @staticmethod
    def two_queries(gold_t: float, decoy_ts=()):
        points, dataset = {}, []
        for q, angle in enumerate((0.0, 180.0)):
            a, b, c = (rotated(p, angle) for p in (QA, QB, QC))
            points.update({f"a{q}": a, f"b{q}": b, f"c{q}": c, f"gold{q}": analogy_solve_points(a, b, c, gold_t)})
            for j, t in enumerate(decoy_ts):
                points[f"decoy{q}_{j}"] = analogy_solve_points(a, b, c, t)
            dataset.append(AnalogyQuery(w1=f"a{q}", w2=f"b{q}", w3=f"c{q}", gold=f"gold{q}"))
        return build(points), dataset

    def test_grid_has_eleven_values(self):
        emb, dataset = self.two_queries(0.5)
        scores = t_grid_scores(dataset, emb, SimilarityEnum.NEG_POINCARE)
        assert [s.t for s in scores] == [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
        assert all(len(s.fold_accuracies) == 2 for s in scores)

    def test_ties_go_to_smallest_t(self):
        emb, dataset = self.two_queries(0.5)
        assert cross_validate_t(dataset, emb, SimilarityEnum.NEG_POINCARE) == 0.0

    def test_selects_second_solution(self):
        emb, dataset = self.two_queries(1.0, decoy_ts=(0.0, 0.95))
        scores = t_grid_scores(dataset, emb, SimilarityEnum.NEG_POINCARE)
        assert scores[-1].mean_accuracy == 1.0
        assert all(s.mean_accuracy == 0.0 for s in scores[:-1])
        assert select_t(scores) == 1.0

    def test_needs_two_queries(self):
        emb, dataset = self.two_queries(0.5)
        with pytest.raises(InsufficientDataException):
            cross_validate_t(dataset[:1], emb)

    def test_needs_two_folds(self):
        emb, dataset = self.two_queries(0.5)
        with pytest.raises(InvalidConfigException):
            t_grid_scores(dataset, emb, n_folds=1)


class TestFoldSelection:

    @staticmethod
    def grid(*rows):
        return [TGridScore(t=t, fold_accuracies=list(accs), mean_accuracy=float(np.mean(accs))) for t, accs in rows]

    def test_each_fold_is_scored_with_the_other_folds_choice(self):
        scores = self.grid((0.0, (0.5, 0.25)), (0.5, (0.75, 1.0)), (1.0, (1.0, 0.5)))
        selections = fold_selections(scores)
        assert [(f.held_out_fold, f.t) for f in selections] == [(0, 0.5), (1, 1.0)]
        assert [f.train_accuracy for f in selections] == [1.0, 1.0]
        assert [f.held_out_accuracy for f in selections] == [0.75, 0.5]
        assert select_t(scores) == 0.5

    def test_differs_from_best_mean(self):
        scores = self.grid((0.0, (1.0, 0.0)), (0.5, (0.0, 1.0)), (1.0, (0.9, 0.9)))
        assert max(scores, key=lambda s: s.mean_accuracy).t == 1.0
        selections = fold_selections(scores)
        assert [f.t for f in selections] == [0.5, 0.0]
        assert all(f.held_out_accuracy == 0.0 for f in selections)
        assert select_t(scores) == 0.0

    def test_empty_grid(self):
        with pytest.raises(InsufficientDataException):
            fold_selections([])
