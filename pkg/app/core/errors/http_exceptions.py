from typing import Optional

from fastapi import HTTPException

from app.core.errors.error_messages import EMBEDDINGS_NOT_LOADED_MESSAGE


class CustomHttpException(HTTPException):
    def __init__(
            self,
            status_code: int,
            error_code: str,
            message: str,
            context: Optional[str],
    ):
        super().__init__(
            status_code=status_code,
            detail={
                "error_code": error_code,
                "message": message,
                "context": context
            }
        )

# HTTP EXCEPTIONS
class ServiceUnavailableException(CustomHttpException):
    def __init__(self, message: str, context: Optional[str]):
        super().__init__(503, "Service Unavailable", message, context)


# SPECIFIC EXCEPTIONS - message 가 client에 그대로 표기됨.
class EmbeddingsNotLoadedException(ServiceUnavailableException):
    def __init__(self, context: str = None):
        super().__init__(EMBEDDINGS_NOT_LOADED_MESSAGE, context)
