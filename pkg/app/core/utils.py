from pathlib import Path
from typing import Hashable, Iterable, Iterator, List, Sequence, Tuple, TypeVar, Union

from app.core.errors.exceptions import EmbeddingFormatException

T = TypeVar("T", bound=Hashable)


def unique_in_order(items: Iterable[T]) -> List[T]:
    """첫 등장 순서를 유지하며 중복 제거"""
    return list(dict.fromkeys(items))


def count_duplicates(items: Sequence[T]) -> int:
    return len(items) - len(set(items))


def utf8_lines(path: Union[str, Path]) -> Iterator[Tuple[int, str]]:
    """(줄 번호, 줄) 을 1 부터 센다. 잘못된 UTF-8 은 줄 번호와 함께 형식 에러로 바꾼다."""
    with open(path, "rb") as f:
        for line_number, raw in enumerate(f, start=1):
            try:
                yield line_number, raw.decode("utf-8")
            except UnicodeDecodeError as e:
                raise EmbeddingFormatException(f"invalid UTF-8 at byte {e.start}", line_number)
