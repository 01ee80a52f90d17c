from fastapi import APIRouter

from app.api.v1.endpoints import bias, debias, evaluation

router = APIRouter()

router.include_router(bias.router, prefix="/bias", tags=['bias'])
router.include_router(debias.router, prefix="/debias", tags=['debias'])
router.include_router(evaluation.router, prefix="/evaluation", tags=['evaluation'])
