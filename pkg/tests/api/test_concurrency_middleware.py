from fastapi import FastAPI
from fastapi.testclient import TestClient

from app.core.api.concurrent_request_middleware import OptimizationConcurrencyMiddleware
from app.core.errors.error_messages import SERVER_BUSY_MESSAGE


def make_app(max_concurrent: int) -> FastAPI:
    app = FastAPI()
    app.add_middleware(OptimizationConcurrencyMiddleware, paths=["/slow"], max_concurrent=max_concurrent)

    @app.get("/slow/run")
    def run():
        return {"ok": True}

    @app.get("/fast")
    def fast():
        return {"ok": True}

    return app


class TestOptimizationConcurrencyMiddleware:

    def test_passes_when_slots_free(self):
        client = TestClient(make_app(1))
        assert client.get("/slow/run").status_code == 200
        # 슬롯은 요청이 끝나면 돌려받는다
        assert client.get("/slow/run").status_code == 200

    def test_busy_when_no_slot(self):
        response = TestClient(make_app(0)).get("/slow/run")
        assert response.status_code == 503
        assert response.json()["message"] == SERVER_BUSY_MESSAGE

    def test_other_paths_are_not_limited(self):
        assert TestClient(make_app(0)).get("/fast").status_code == 200
