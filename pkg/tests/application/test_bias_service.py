import pytest

from app.application.services.bias.bias import BiasApplicationService
from app.core.errors.exceptions import MissingWordException
from app.infrastructure.repositories.word_list.word_list import WordListRepository
from tests.conftest import FEMALE_WORDS, FIXED_POINT_MEAN, MALE_WORDS


@pytest.fixture
def service():
    return BiasApplicationService(WordListRepository())


class TestBiasReport:

    def test_defaults_to_neutral_vocabulary(self, service, clustered_embedding):
        report = service.bias_report(clustered_embedding, MALE_WORDS, FEMALE_WORDS, cfg=FIXED_POINT_MEAN)
        assert sorted(report.gamma) == sorted(f"neutral{i}" for i in range(20))
        assert report.summary.words == 20
        assert report.direct_bias is None
        assert report.correlation is None

    def test_specific_words_are_excluded(self, service, clustered_embedding):
        report = service.bias_report(
            clustered_embedding, MALE_WORDS, FEMALE_WORDS,
            specific_words=["neutral0", "neutral1"], cfg=FIXED_POINT_MEAN,
        )
        assert "neutral0" not in report.gamma
        assert report.summary.words == 18

    def test_target_words(self, service, clustered_embedding, caplog):
        report = service.bias_report(
            clustered_embedding, MALE_WORDS, FEMALE_WORDS,
            target_words=["neutral3", "neutral5", "unseen"], cfg=FIXED_POINT_MEAN,
        )
        assert list(report.gamma) == ["neutral3", "neutral5"]
        assert "1 target words not in vocabulary" in caplog.text

    def test_definitional_words_have_the_expected_sign(self, service, clustered_embedding, gender):
        report = service.bias_report(
            clustered_embedding, MALE_WORDS, FEMALE_WORDS, target_words=["he", "she"], gv=gender,
        )
        assert report.gamma["he"] < 0.0 < report.gamma["she"]

    def test_threshold_count(self, service, clustered_embedding, gender):
        loose = service.bias_report(clustered_embedding, MALE_WORDS, FEMALE_WORDS, gv=gender, threshold=0.0)
        strict = service.bias_report(clustered_embedding, MALE_WORDS, FEMALE_WORDS, gv=gender, threshold=1.0)
        assert loose.summary.above_threshold == 20
        assert strict.summary.above_threshold == 0

    def test_direct_bias_and_correlation(self, service, clustered_embedding, gender):
        report = service.bias_report(
            clustered_embedding, MALE_WORDS, FEMALE_WORDS,
            euclidean_emb=clustered_embedding, gv=gender,
        )
        assert sorted(report.direct_bias) == sorted(report.gamma)
        assert report.correlation.shared_words == 20
        # 같은 좌표를 두 방식으로 본 것이므로 부호 경향이 같다
        assert report.correlation.spearman > 0.5

    def test_absolute_direct_bias(self, service, clustered_embedding, gender):
        report = service.bias_report(
            clustered_embedding, MALE_WORDS, FEMALE_WORDS,
            euclidean_emb=clustered_embedding, absolute_direct_bias=True, gv=gender,
        )
        assert all(v >= 0.0 for v in report.direct_bias.values())


class TestWordBias:

    def test_words(self, service, clustered_embedding, gender):
        report = service.word_bias(clustered_embedding, gender, ["neutral0", "neutral1"])
        assert list(report.gamma) == ["neutral0", "neutral1"]

    def test_missing_word_raises(self, service, clustered_embedding, gender):
        with pytest.raises(MissingWordException, match="unseen"):
            service.word_bias(clustered_embedding, gender, ["neutral0", "unseen"])


class TestGenderWords:

    def test_shipped_lists(self, service):
        male, female = service.load_gender_words()
        assert len(male) == len(female) == 10
        assert set(male) <= set(service.load_specific_words())

    def test_no_specific_path(self, service):
        assert service.load_specific_words(None) == []
