import functools
import logging
from typing import Callable, Optional, TypeVar

from app.core.errors.exceptions import DebiasException

T = TypeVar("T")


def log_errors(error_message: Optional[str] = None, logger: Optional[logging.Logger] = None):
    """
    실패를 로그로 남기고 그대로 다시 던지는 데코레이터.

    DebiasException 은 입력 문제이므로 WARNING 으로 message / context 만 남기고,
    그 밖의 예외는 ERROR 로 스택과 함께 남긴다.

    Args:
        error_message: 로그 앞에 붙일 문구 (기본값: "<함수명> failed")
        logger: 사용할 로거 (기본값: 데코레이트된 함수 모듈의 로거)
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> T:
            used_logger = logger or logging.getLogger(func.__module__)
            message = error_message or f"{func.__name__} failed"
            try:
                return func(*args, **kwargs)
            except DebiasException as e:
                detail = f"{e.message} ({e.context})" if e.context else e.message
                used_logger.warning(f"{message}: {type(e).__name__}: {detail}")
                raise
            except Exception as e:
                used_logger.error(f"{message}: {e!r}", exc_info=True)
                raise

        return wrapper

    return decorator
