from fastapi import Request
import logging

from starlette.responses import JSONResponse

from app.core.errors.error_messages import INTERNAL_SERVER_ERROR_MESSAGE
from app.core.errors.exceptions import DebiasException, MissingWordException, EmbeddingFormatException, \
    EmptyEmbeddingException

logger = logging.getLogger(__name__)


def _status_code(exc: DebiasException) -> int:
    if isinstance(exc, MissingWordException):
        return 404
    if isinstance(exc, (EmbeddingFormatException, EmptyEmbeddingException)):
        return 422
    return 400


async def handle_debias_exception(request: Request, exc: DebiasException):
    status_code = _status_code(exc)
    logger.warning(f"{request.method} {request.url.path} -> {status_code}: {exc}")

    return JSONResponse(
        status_code=status_code,
        content={
            "error_code": type(exc).__name__,
            "message": exc.message,
            "context": exc.context
        }
    )


async def handle_general_exception(request: Request, exc: Exception):
    logger.error("Unhandled Exception Occurred", exc_info=exc)

    return JSONResponse(
        status_code=500,
        content={
            "error_code": "Internal Server Error",
            "message": INTERNAL_SERVER_ERROR_MESSAGE,
            "context": None
        }
    )
