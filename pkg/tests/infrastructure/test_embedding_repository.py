import numpy as np
import pytest

from app.core.enums.space import EmbeddingSpaceEnum, EmbeddingFormatEnum
from app.core.errors.exceptions import EmbeddingFormatException, EmptyEmbeddingException, InvalidWordException
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.infrastructure.repositories.embedding.embedding import (
    EmbeddingRepository,
    load_embeddings,
    resolve_format,
    save_embeddings,
)
from tests.conftest import sample_ball, write_embedding_text


@pytest.fixture
def repo() -> EmbeddingRepository:
    return EmbeddingRepository()


class TestLoadText:

    def test_two_lines(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("a 0.1 0.2\nb -0.3 0.0\n", encoding="utf-8")
        emb = load_embeddings(path)
        assert (len(emb), emb.dimension) == (2, 2)
        np.testing.assert_array_equal(emb.vector("b"), [-0.3, 0.0])
        assert emb.space == EmbeddingSpaceEnum.POINCARE

    def test_header_is_checked(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_text("2 2\na 0.1 0.2\nb -0.3 0.0\n", encoding="utf-8")
        assert len(repo.load(path)) == 2
        path.write_text("3 2\na 0.1 0.2\nb -0.3 0.0\n", encoding="utf-8")
        with pytest.raises(EmbeddingFormatException):
            repo.load(path)

    def test_one_dimensional_rows_are_not_headers(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_text("a 0.5\nb -0.25\n", encoding="utf-8")
        assert repo.load(path).words == ["a", "b"]

    def test_poincare_rows_are_projected(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_text("a 0.1 0.2\nb 1.2 0.0\n", encoding="utf-8")
        emb, stats = repo.load_with_stats(path)
        assert stats.projected == 1
        assert np.linalg.norm(emb.vector("b")) == pytest.approx(1.0 - 1e-5, abs=1e-12)

    def test_euclidean_rows_are_kept(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_text("a 3.0 4.0\nb 1.2 0.0\n", encoding="utf-8")
        emb, stats = repo.load_with_stats(path, EmbeddingSpaceEnum.EUCLIDEAN)
        assert stats.projected == 0
        np.testing.assert_array_equal(emb.vector("a"), [3.0, 4.0])

    def test_duplicates_keep_first(self, tmp_path, repo, caplog):
        path = tmp_path / "vec.txt"
        path.write_text("a 0.1 0.2\nb 0.0 0.1\na 0.5 0.5\n", encoding="utf-8")
        emb, stats = repo.load_with_stats(path)
        assert stats.duplicates == 1
        assert emb.words == ["a", "b"]
        np.testing.assert_array_equal(emb.vector("a"), [0.1, 0.2])
        assert "duplicate" in caplog.text

    @pytest.mark.parametrize("content, line", [
        ("a 0.1 0.2\nb 0.3\n", 2),
        ("a 0.1 0.2\nb 0.3 x\n", 2),
        ("a 0.1 nan\n", 1),
        ("a 0.1 0.2\n\nb inf 0.0\n", 3),
        ("a\n", 1),
    ])
    def test_malformed_lines(self, tmp_path, repo, content, line):
        path = tmp_path / "vec.txt"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(EmbeddingFormatException) as exc_info:
            repo.load(path)
        assert exc_info.value.line_number == line

    def test_invalid_utf8_reports_line(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_bytes(b"he 0.1 0.2\r\nsh\xe9 0.3 0.1\n")
        with pytest.raises(EmbeddingFormatException) as exc_info:
            repo.load(path)
        assert exc_info.value.line_number == 2
        assert "UTF-8" in exc_info.value.context

    def test_crlf_and_multibyte_words(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_bytes("그녀 0.1 0.2\r\nhe 0.3 0.1\r\n".encode("utf-8"))
        emb = repo.load(path)
        assert emb.words == ["그녀", "he"]
        np.testing.assert_array_equal(emb.vector("그녀"), [0.1, 0.2])

    def test_empty_file(self, tmp_path, repo):
        path = tmp_path / "vec.txt"
        path.write_text("\n", encoding="utf-8")
        with pytest.raises(EmptyEmbeddingException):
            repo.load(path)

    def test_identical_bytes_give_identical_sets(self, tmp_path, repo, rng):
        path = tmp_path / "vec.txt"
        write_embedding_text(path, [f"w{i}" for i in range(5)], sample_ball(rng, 5, 4), header=True)
        first, second = repo.load(path), repo.load(path)
        assert first.vocab == second.vocab
        np.testing.assert_array_equal(first.vectors, second.vectors)


class TestSave:

    def test_text_round_trip(self, tmp_path, rng):
        emb = EmbeddingSet.from_words([f"w{i}" for i in range(10)], sample_ball(rng, 10, 8))
        path = tmp_path / "out.txt"
        save_embeddings(emb, path)
        loaded = load_embeddings(path)
        assert loaded.words == emb.words
        np.testing.assert_array_equal(loaded.vectors, emb.vectors)
        assert path.read_text(encoding="utf-8").splitlines()[0] == "10 8"

    def test_binary_round_trip(self, tmp_path, rng, repo):
        emb = EmbeddingSet.from_words(["ä", "b", "한국"], sample_ball(rng, 3, 5))
        path = tmp_path / "out.bin"
        repo.save(emb, path)
        assert path.read_bytes()[:4] == b"HDEB"
        loaded = repo.load(path)
        assert loaded.words == emb.words
        np.testing.assert_array_equal(loaded.vectors, emb.vectors)

    def test_binary_bad_magic(self, tmp_path, repo):
        path = tmp_path / "out.bin"
        path.write_bytes(b"NOPE" + b"\x00" * 8)
        with pytest.raises(EmbeddingFormatException):
            repo.load(path)

    def test_binary_truncated(self, tmp_path, rng, repo):
        path = tmp_path / "out.bin"
        repo.save(EmbeddingSet.from_words(["a", "b"], sample_ball(rng, 2, 3)), path)
        path.write_bytes(path.read_bytes()[:-4])
        with pytest.raises(EmbeddingFormatException):
            repo.load(path)

    def test_whitespace_word_rejected(self, tmp_path, repo):
        emb = EmbeddingSet.from_words(["new york"], [[0.1, 0.1]])
        with pytest.raises(InvalidWordException):
            repo.save(emb, tmp_path / "out.txt")

    def test_empty_vocabulary_rejected(self, tmp_path, repo):
        emb = EmbeddingSet(vocab={}, vectors=np.zeros((0, 2)))
        with pytest.raises(EmptyEmbeddingException):
            repo.save(emb, tmp_path / "out.txt")

    def test_format_resolution(self):
        assert resolve_format("vectors.bin") == EmbeddingFormatEnum.BINARY
        assert resolve_format("vectors.txt") == EmbeddingFormatEnum.TEXT
        assert resolve_format("vectors.bin", EmbeddingFormatEnum.TEXT) == EmbeddingFormatEnum.TEXT
