from fastapi import APIRouter, Depends, status

from app.api.v1.dependencies import get_model_state
from app.application.services.evaluation.dto.evaluation import AnalogyRequest, AnalogyPrediction
from app.application.services.evaluation.evaluation import EvaluationApplicationService, \
    get_evaluation_application_service
from app.core.lifecycle import LifespanServices

router = APIRouter()

#/evaluation

@router.post("/analogy", response_model=AnalogyPrediction, status_code=status.HTTP_200_OK)
def analogy(
        request: AnalogyRequest,
        state: LifespanServices = Depends(get_model_state),
        service: EvaluationApplicationService = Depends(get_evaluation_application_service),
) -> AnalogyPrediction:
    return service.analogy_query(
        state.embeddings, request.a, request.b, request.c,
        t=request.t, metric=request.similarity, top_k=request.top_k,
    )
