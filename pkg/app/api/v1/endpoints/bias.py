from fastapi import APIRouter, Depends, status

from app.api.v1.dependencies import get_model_state
from app.application.services.bias.bias import BiasApplicationService, get_bias_application_service
from app.application.services.bias.dto.bias import WordBiasRequest
from app.core.lifecycle import LifespanServices
from app.domain.bias.schemas.bias_report import BiasReport

router = APIRouter()

#/bias

@router.post("/gyrocosine", response_model=BiasReport, status_code=status.HTTP_200_OK)
def gyrocosine_bias(
        request: WordBiasRequest,
        state: LifespanServices = Depends(get_model_state),
        service: BiasApplicationService = Depends(get_bias_application_service),
) -> BiasReport:
    return service.word_bias(state.embeddings, state.gender, request.words, request.threshold)
