from fastapi import APIRouter
from app.core.settings import Settings
from . import common
from . import monopole


def get_routes(settings: Settings) -> APIRouter:  # pylint: disable=unused-argument
    api_router = APIRouter()

    api_router.include_router(monopole.router)
    api_router.include_router(common.router)

    return api_router
