from typing import Any, Dict, Optional
from enum import Enum
from pydantic import BaseModel, validator

from app.core.adhm import AdhmData
from app.core.errors import MonopoleError

__all__ = [
    "BaseRequest",
    "BaseResponse",
    "BaseDataRequest",
    "BaseValidationResponse",
    "ResponseStatus",
    "AdhmPayload",
]

AdhmPayload = Dict[str, Any]
"""Serialized (L, M) as written by the CLI, optionally wrapped in a family instance"""


class ResponseStatus(str, Enum):
    FAIL = "fail"
    SUCCESS = "success"


class BaseRequest(BaseModel):
    """A basic request"""


class BaseResponse(BaseModel):
    """A basic response"""

    status: ResponseStatus = ResponseStatus.SUCCESS
    """The status of the response"""

    message: Optional[str] = None
    """An optional message describing the response"""


class BaseDataRequest(BaseRequest):
    """A request carrying ADHM data"""

    data: AdhmPayload
    """The serialized data; a family instance is unwrapped to its data"""

    @validator("data")
    def _unwrap(cls, value: AdhmPayload) -> AdhmPayload:  # pylint: disable=no-self-argument
        payload = value.get("data", value)
        try:
            AdhmData.from_dict(payload)
        except (KeyError, TypeError, ValueError, MonopoleError) as error:
            raise ValueError(f"malformed ADHM data: {error}") from error
        return payload

    def to_adhm(self) -> AdhmData:
        return AdhmData.from_dict(self.data)


class BaseValidationResponse(BaseResponse):
    """Response for validating models"""

    details: Optional[str] = None
    """Optional details of the validation result"""
