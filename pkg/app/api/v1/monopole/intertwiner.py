from fastapi import APIRouter, Body

from app.core.bweb import compute_B, realize_B_real, verify_identities

from ..models import IntertwinerRequest, IntertwinerResponse
from ..tags import INTERTWINER

router = APIRouter()


@router.post("", tags=[INTERTWINER])
def intertwiner(
    request: IntertwinerRequest = Body(...),
) -> IntertwinerResponse:
    """
    Intertwiner triple from the n-dimensional irreducible into the (n+2)-dimensional one
    """
    triple = realize_B_real(request.n) if request.real else compute_B(request.n, request.theta)
    report = verify_identities(triple)
    return IntertwinerResponse(
        message="Successfully computed intertwiner",
        intertwiner=triple.to_dict(),
        residuals=report.to_dict(),
        holds=report.holds(),
    )
