from fastapi import APIRouter, Depends, status

from app.api.v1.dependencies import get_model_state
from app.application.services.debias.debias import DebiasApplicationService, get_debias_application_service
from app.application.services.debias.dto.debias import DebiasWordRequest, DebiasedWordResponse
from app.core.lifecycle import LifespanServices
from app.domain.debias.schemas.pgd import PgdConfig

router = APIRouter()

#/debias

@router.post("/word", response_model=DebiasedWordResponse, status_code=status.HTTP_200_OK)
def debias_word(
        request: DebiasWordRequest,
        state: LifespanServices = Depends(get_model_state),
        service: DebiasApplicationService = Depends(get_debias_application_service),
) -> DebiasedWordResponse:
    cfg = PgdConfig(
        lambda1=request.lambda1,
        lambda2=request.lambda2,
        learning_rate=request.learning_rate,
        epochs=request.epochs,
    )
    return service.debias_word(state.embeddings, state.gender, request.word, cfg)
