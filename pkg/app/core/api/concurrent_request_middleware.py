from asyncio import Semaphore
from typing import Sequence

from fastapi import FastAPI, Request
from starlette.middleware.base import BaseHTTPMiddleware, RequestResponseEndpoint
from starlette.responses import JSONResponse

from app.core.errors.error_messages import SERVER_BUSY_MESSAGE


class OptimizationConcurrencyMiddleware(BaseHTTPMiddleware):
    """
    PGD 최적화 요청 동시 실행 수를 제한한다.
    슬롯이 모두 차 있으면 대기하지 않고 바로 503 을 돌려준다.
    """

    def __init__(self, app: FastAPI, paths: Sequence[str], max_concurrent: int = 4):
        super().__init__(app)
        self._paths = tuple(paths)
        self._semaphore = Semaphore(max_concurrent)

    async def dispatch(
        self, request: Request, call_next: RequestResponseEndpoint
    ):
        if not request.url.path.startswith(self._paths):
            return await call_next(request)
        if self._semaphore.locked():
            return JSONResponse(
                status_code=503,
                content={"error_code": "Service Unavailable", "message": SERVER_BUSY_MESSAGE, "context": None},
            )
        async with self._semaphore:
            return await call_next(request)
