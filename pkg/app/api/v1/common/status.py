from typing import Any, Dict

from fastapi import APIRouter

from app.core.settings import get_settings

from ..tags import UTILITY

router = APIRouter()

NUMERICAL_SETTINGS = (
    "MONOPOLE_TOL",
    "IDENTITY_TOL",
    "SNAP_TOL",
    "MARGIN",
    "RAY_SAMPLES",
    "DISC_SAMPLES",
    "BALL_SAMPLES",
    "FINITE_DIFFERENCE_STEP",
)


@router.get("/ping", response_model=str, tags=[UTILITY])
def ping() -> Any:
    """
    Ensure API can be pinged
    """
    return "pong"


@router.get("/tolerances", tags=[UTILITY])
def tolerances() -> Dict[str, float]:
    """
    Tolerances and default grids the numerical core is running with
    """
    settings = get_settings().dict()
    return {name: settings[name] for name in NUMERICAL_SETTINGS}
