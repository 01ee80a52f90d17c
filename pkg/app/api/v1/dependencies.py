from fastapi import Request

from app.core.errors.http_exceptions import EmbeddingsNotLoadedException
from app.core.lifecycle import LifespanServices


def get_model_state(request: Request) -> LifespanServices:
    services: LifespanServices = getattr(request.app.state, "services", None)
    if services is None or not services.ready:
        raise EmbeddingsNotLoadedException()
    return services
