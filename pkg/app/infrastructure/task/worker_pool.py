import os
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

logger = getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def default_threads() -> int:
    return os.cpu_count() or 1


class WorkerPool:
    """
    단어 단위 작업을 스레드로 나눠 돌리는 풀.
    결과는 항상 입력 순서대로 돌려주므로 스레드 수와 무관하게 같은 출력이 나온다.
    """

    def __init__(self, threads: Optional[int] = None, progress: bool = False, description: str = "words"):
        self.threads = max(1, threads or default_threads())
        self.progress = progress
        self.description = description

    def map_ordered(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        bar = tqdm(total=len(items), desc=self.description, disable=not self.progress)
        try:
            if self.threads == 1 or len(items) <= 1:
                results = []
                for item in items:
                    results.append(fn(item))
                    bar.update()
                return results

            logger.debug(f"running {len(items)} {self.description} on {self.threads} threads")
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                results = []
                for result in executor.map(fn, items):
                    results.append(result)
                    bar.update()
                return results
        finally:
            bar.close()


def get_worker_pool() -> WorkerPool:
    return WorkerPool()
