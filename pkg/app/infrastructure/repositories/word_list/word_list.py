import logging
import re
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from app.core.decorators import log_errors
from app.core.utils import unique_in_order, count_duplicates, utf8_lines
from app.core.errors.exceptions import EmbeddingFormatException

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
_PAIR_SEPARATOR = re.compile(r"[:\s]+")


def content_lines(path: PathLike) -> Iterator[Tuple[int, str]]:
    # 빈 줄과 '#' 주석 줄은 건너뛴다
    for line_number, line in utf8_lines(path):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield line_number, stripped


def _dedup(items: list, path: PathLike) -> list:
    duplicates = count_duplicates(items)
    if duplicates:
        logger.warning(f"{duplicates} duplicate entries in {path} removed")
    return unique_in_order(items)


class WordListRepository:
    @log_errors("Failed to load word list")
    def load_word_list(self, path: PathLike) -> List[str]:
        """한 줄에 한 단어. 대소문자는 그대로 둔다."""
        return _dedup([line for _, line in content_lines(path)], path)

    @log_errors("Failed to load word pairs")
    def load_pairs(self, path: PathLike) -> List[Tuple[str, str]]:
        """한 줄에 한 쌍, 공백 또는 ':' 로 구분. 정의어 쌍 파일은 남성 단어가 첫 열이다."""
        pairs = []
        for line_number, line in content_lines(path):
            tokens = [t for t in _PAIR_SEPARATOR.split(line) if t]
            if len(tokens) != 2:
                raise EmbeddingFormatException(f"expected a word pair, got {len(tokens)} fields", line_number)
            pairs.append((tokens[0], tokens[1]))
        return _dedup(pairs, path)


def get_word_list_repository() -> WordListRepository:
    return WordListRepository()


def load_word_list(path: PathLike) -> List[str]:
    return get_word_list_repository().load_word_list(path)


def load_pairs(path: PathLike) -> List[Tuple[str, str]]:
    return get_word_list_repository().load_pairs(path)
