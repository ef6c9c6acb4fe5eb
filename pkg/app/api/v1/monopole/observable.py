from fastapi import APIRouter, Body

from app.core.observables import rational_map, spectral_curve

from ..models import (
    RationalMapRequest,
    RationalMapResponse,
    SpectralCurveRequest,
    SpectralCurveResponse,
)
from ..tags import OBSERVABLE

router = APIRouter()


@router.post("/spectral-curve", tags=[OBSERVABLE])
def curve(
    request: SpectralCurveRequest = Body(...),
) -> SpectralCurveResponse:
    """
    Coefficients of the spectral curve
    """
    result = spectral_curve(request.to_adhm())
    return SpectralCurveResponse(message="Successfully computed spectral curve", curve=result.to_dict())


@router.post("/rational-map", tags=[OBSERVABLE])
def rational(
    request: RationalMapRequest = Body(...),
) -> RationalMapResponse:
    """
    Rational map of data with structure group Sp(1)
    """
    mapping = rational_map(request.to_adhm())
    values = mapping.evaluate([complex(real, imag) for real, imag in request.points]) if request.points else []
    return RationalMapResponse(
        message="Successfully computed rational map",
        rational_map=mapping.to_dict(),
        values=[[value.real, value.imag] for value in values],
    )
