from typing import Any, Dict, List, Optional

from app.core.adhm import Domain
from app.core.symmetry import Family

from .base import BaseDataRequest, BaseRequest, BaseResponse, BaseValidationResponse

__all__ = [
    "FamilyRequest",
    "FamilyResponse",
    "AnsatzRequest",
    "AnsatzResponse",
    "VerifyRequest",
    "VerifyResponse",
    "StructureGroupRequest",
    "StructureGroupResponse",
]

FamilyInstancePayload = Dict[str, Any]
ValidityReportPayload = Dict[str, Any]


class FamilyRequest(BaseRequest):
    name: Family
    params: Dict[str, float] = {}
    """Family parameters; missing ones take the family defaults"""


class FamilyResponse(BaseResponse):
    instance: FamilyInstancePayload


class AnsatzRequest(BaseRequest):
    summands: List[int]
    """Dimensions of the real irreducible summands of ℝᵏ"""
    params: Dict[str, float] = {}


class AnsatzResponse(BaseResponse):
    ansatz: Dict[str, Any]


class VerifyRequest(BaseDataRequest):
    domain: Domain = Domain.BALL
    samples: Optional[int] = None
    """Sample count per direction; the configured default for the domain when omitted"""


class VerifyResponse(BaseValidationResponse):
    valid: bool
    report: ValidityReportPayload


class StructureGroupRequest(BaseRequest):
    summands: List[int]
    seed: int = 0


class StructureGroupResponse(BaseResponse):
    bounds: Dict[str, Any]
