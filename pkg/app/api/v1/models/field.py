from typing import Any, Dict, List, Optional

from .base import BaseDataRequest, BaseResponse

__all__ = [
    "FieldSampleRequest",
    "FieldSampleResponse",
    "ProfileRequest",
    "ProfileResponse",
    "BogomolnyRequest",
    "BogomolnyResponse",
]

FieldSamplePayload = Dict[str, Any]


class FieldSampleRequest(BaseDataRequest):
    point: List[float]
    """Cartesian coordinates in the unit ball"""
    step: Optional[float] = None
    energy: bool = False


class FieldSampleResponse(BaseResponse):
    sample: FieldSamplePayload


class ProfileRequest(BaseDataRequest):
    start: float = 0.0
    stop: float = 0.99
    count: int = 50
    direction: List[float] = [0.0, 0.0, 1.0]
    energy: bool = True
    step: Optional[float] = None


class ProfileResponse(BaseResponse):
    samples: List[FieldSamplePayload]


class BogomolnyRequest(BaseDataRequest):
    point: List[float]
    step: Optional[float] = None


class BogomolnyResponse(BaseResponse):
    residual: float
    """Norm of F + ⋆DΦ at the point"""
