from typing import List

import numpy as np
from fastapi import APIRouter, Body, HTTPException

from app.core.fields import BallPoint, connection_and_bogomolny, higgs, ray_profile

from ..models import (
    BogomolnyRequest,
    BogomolnyResponse,
    FieldSampleRequest,
    FieldSampleResponse,
    ProfileRequest,
    ProfileResponse,
)
from ..tags import FIELD

router = APIRouter()


def _point(values: List[float]) -> BallPoint:
    if len(values) != 3:
        raise HTTPException(status_code=400, detail="A point needs three coordinates")
    return BallPoint.from_array(values)


@router.post("/sample", tags=[FIELD])
def sample(
    request: FieldSampleRequest = Body(...),
) -> FieldSampleResponse:
    """
    Higgs field, its norm and optionally the energy density at a point
    """
    result = higgs(request.to_adhm(), _point(request.point), request.energy, request.step)
    return FieldSampleResponse(message="Successfully sampled field", sample=result.to_dict())


@router.post("/profile", tags=[FIELD])
def profile(
    request: ProfileRequest = Body(...),
) -> ProfileResponse:
    """
    Field samples along a ray from the origin
    """
    if request.count < 1:
        raise HTTPException(status_code=400, detail="count must be positive")
    radii = np.linspace(request.start, request.stop, request.count)
    samples = ray_profile(request.to_adhm(), radii, request.direction, request.energy, request.step)
    return ProfileResponse(
        message=f"Successfully sampled {len(samples)} points",
        samples=[result.to_dict() for result in samples],
    )


@router.post("/bogomolny", tags=[FIELD])
def bogomolny(
    request: BogomolnyRequest = Body(...),
) -> BogomolnyResponse:
    """
    Residual of the Bogomolny equation at a point
    """
    residual = connection_and_bogomolny(request.to_adhm(), _point(request.point), request.step)
    return BogomolnyResponse(message="Successfully evaluated Bogomolny residual", residual=residual)
