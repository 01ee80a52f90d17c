import logging
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from app.core.config import data_setting, geometry_setting
from app.core.decorators import log_errors
from app.core.enums.space import EmbeddingSpaceEnum, EmbeddingFormatEnum
from app.core.errors.exceptions import EmbeddingFormatException, EmptyEmbeddingException, InvalidWordException
from app.core.utils import utf8_lines
from app.domain.embedding.schemas.embedding_set import EmbeddingSet

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_HEADER = struct.Struct("<II")
_WORD_LENGTH = struct.Struct("<H")


@dataclass
class EmbeddingLoadStats:
    rows: int = 0
    duplicates: int = 0
    projected: int = 0


def resolve_format(path: PathLike, fmt: Optional[EmbeddingFormatEnum] = None) -> EmbeddingFormatEnum:
    if fmt is not None:
        return fmt
    return EmbeddingFormatEnum.BINARY if Path(path).suffix == ".bin" else EmbeddingFormatEnum.TEXT


def _parse_header(tokens: List[str]) -> Optional[Tuple[int, int]]:
    # word2vec 형식: 첫 줄이 "V n"
    if len(tokens) != 2:
        return None
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        return None


def _parse_row(tokens: List[str], line_number: int, dimension: Optional[int]) -> np.ndarray:
    if len(tokens) < 2:
        raise EmbeddingFormatException(f"expected a word and at least one value, got {len(tokens)} fields",
                                       line_number)
    if dimension is not None and len(tokens) - 1 != dimension:
        raise EmbeddingFormatException(f"expected {dimension} values, got {len(tokens) - 1}", line_number)
    try:
        row = np.array([float(v) for v in tokens[1:]], dtype=np.float64)
    except ValueError as e:
        raise EmbeddingFormatException(f"non-numeric value ({e})", line_number)
    if not np.all(np.isfinite(row)):
        raise EmbeddingFormatException(f"NaN or Inf in vector of '{tokens[0]}'", line_number)
    return row


class EmbeddingRepository:
    """
    단어 벡터 파일 입출력.
    텍스트: 한 줄에 "단어 v1 v2 ...", 선택적 word2vec 헤더 "V n".
    바이너리: magic, u32 V, u32 n, (u16 길이 + UTF-8 단어) × V, f64 행렬 (리틀 엔디언).
    """

    def __init__(
            self,
            magic: bytes = data_setting.BINARY_MAGIC,
            float_format: str = data_setting.TEXT_FLOAT_FORMAT,
    ):
        self.magic = magic
        self.float_format = float_format

    @log_errors("Failed to load embeddings")
    def load_with_stats(
            self,
            path: PathLike,
            space: EmbeddingSpaceEnum = EmbeddingSpaceEnum.POINCARE,
            fmt: Optional[EmbeddingFormatEnum] = None,
    ) -> Tuple[EmbeddingSet, EmbeddingLoadStats]:
        if resolve_format(path, fmt) == EmbeddingFormatEnum.BINARY:
            words, rows = self._read_binary(path)
        else:
            words, rows = self._read_text(path)

        stats = EmbeddingLoadStats(rows=len(words))
        vocab = {}
        keep = []
        for i, word in enumerate(words):
            if word in vocab:
                stats.duplicates += 1
                continue
            vocab[word] = len(keep)
            keep.append(i)
        if stats.duplicates:
            logger.warning(f"{stats.duplicates} duplicate words in {path}, first occurrence kept")
        if not keep:
            raise EmptyEmbeddingException(str(path))

        vectors = np.array(rows[keep], dtype=np.float64)
        if space == EmbeddingSpaceEnum.POINCARE:
            stats.projected = self._project_rows(vectors)
            if stats.projected:
                logger.warning(f"{stats.projected} rows of {path} had norm >= 1 and were projected into the ball")

        logger.info(f"loaded {len(vocab)} x {vectors.shape[1]} {space.value} embeddings from {path}")
        return EmbeddingSet(vocab=vocab, vectors=vectors, space=space), stats

    def load(
            self,
            path: PathLike,
            space: EmbeddingSpaceEnum = EmbeddingSpaceEnum.POINCARE,
            fmt: Optional[EmbeddingFormatEnum] = None,
    ) -> EmbeddingSet:
        return self.load_with_stats(path, space, fmt)[0]

    @staticmethod
    def _project_rows(vectors: np.ndarray) -> int:
        norms = np.linalg.norm(vectors, axis=1)
        outside = norms >= 1.0
        vectors[outside] *= ((1.0 - geometry_setting.BALL_EPS) / norms[outside])[:, None]
        return int(outside.sum())

    @staticmethod
    def _read_text(path: PathLike) -> Tuple[List[str], np.ndarray]:
        words: List[str] = []
        rows: List[np.ndarray] = []
        header = None
        dimension = None
        for line_number, line in utf8_lines(path):
            tokens = line.split()
            if not tokens:
                continue
            if line_number == 1 and (header := _parse_header(tokens)) is not None:
                dimension = header[1]
                continue
            row = _parse_row(tokens, line_number, dimension)
            dimension = len(row)
            words.append(tokens[0])
            rows.append(row)

        if header is not None and header != (len(words), dimension or header[1]):
            raise EmbeddingFormatException(f"header declares {header[0]} x {header[1]}, "
                                           f"file has {len(words)} x {dimension}", 1)
        if not words:
            raise EmptyEmbeddingException(str(path))
        return words, np.vstack(rows)

    def _read_binary(self, path: PathLike) -> Tuple[List[str], np.ndarray]:
        data = Path(path).read_bytes()
        if data[:len(self.magic)] != self.magic:
            raise EmbeddingFormatException(f"bad magic {data[:len(self.magic)]!r}")
        offset = len(self.magic)
        try:
            size, dimension = _HEADER.unpack_from(data, offset)
            offset += _HEADER.size
            words = []
            for _ in range(size):
                (length,) = _WORD_LENGTH.unpack_from(data, offset)
                offset += _WORD_LENGTH.size
                words.append(data[offset:offset + length].decode("utf-8"))
                offset += length
        except (struct.error, UnicodeDecodeError) as e:
            raise EmbeddingFormatException(f"truncated or corrupt word table ({e})")
        expected = size * dimension * 8
        if len(data) - offset != expected:
            raise EmbeddingFormatException(f"expected {expected} bytes of vectors, found {len(data) - offset}")
        rows = np.frombuffer(data, dtype="<f8", count=size * dimension, offset=offset).reshape(size, dimension)
        if not np.all(np.isfinite(rows)):
            raise EmbeddingFormatException("NaN or Inf in vectors")
        return words, rows.astype(np.float64)

    @log_errors("Failed to save embeddings")
    def save(self, emb: EmbeddingSet, path: PathLike, fmt: Optional[EmbeddingFormatEnum] = None) -> None:
        if len(emb) == 0:
            raise EmptyEmbeddingException()
        words = emb.words
        for word in words:
            if not word or any(ch.isspace() for ch in word):
                raise InvalidWordException(f"{word!r} is empty or contains whitespace")

        if resolve_format(path, fmt) == EmbeddingFormatEnum.BINARY:
            self._write_binary(words, emb.vectors, path)
        else:
            with open(path, "w", encoding="utf-8") as f:
                f.write(f"{len(words)} {emb.dimension}\n")
                for word, row in zip(words, emb.vectors):
                    f.write(word + " " + " ".join(self.float_format % v for v in row) + "\n")
        logger.info(f"saved {len(words)} x {emb.dimension} embeddings to {path}")

    def _write_binary(self, words: List[str], vectors: np.ndarray, path: PathLike) -> None:
        with open(path, "wb") as f:
            f.write(self.magic)
            f.write(_HEADER.pack(len(words), vectors.shape[1]))
            for word in words:
                encoded = word.encode("utf-8")
                f.write(_WORD_LENGTH.pack(len(encoded)))
                f.write(encoded)
            f.write(np.ascontiguousarray(vectors, dtype="<f8").tobytes())


def get_embedding_repository() -> EmbeddingRepository:
    return EmbeddingRepository()


def load_embeddings(path: PathLike, space: EmbeddingSpaceEnum = EmbeddingSpaceEnum.POINCARE) -> EmbeddingSet:
    return get_embedding_repository().load(path, space)


def save_embeddings(emb: EmbeddingSet, path: PathLike) -> None:
    get_embedding_repository().save(emb, path)
