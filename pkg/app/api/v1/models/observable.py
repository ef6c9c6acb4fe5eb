from typing import Any, Dict, List

from .base import BaseDataRequest, BaseResponse

__all__ = [
    "SpectralCurveRequest",
    "SpectralCurveResponse",
    "RationalMapRequest",
    "RationalMapResponse",
]

ComplexNumber = List[float]
"""[re, im]"""


class SpectralCurveRequest(BaseDataRequest):
    pass


class SpectralCurveResponse(BaseResponse):
    curve: Dict[str, Any]


class RationalMapRequest(BaseDataRequest):
    points: List[ComplexNumber] = []
    """Points of the boundary plane at which to evaluate the map"""


class RationalMapResponse(BaseResponse):
    rational_map: Dict[str, Any]
    values: List[ComplexNumber] = []
