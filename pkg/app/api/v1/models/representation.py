from typing import Any, Dict, List

from pydantic import validator

from .base import BaseRequest, BaseResponse

__all__ = [
    "Representation",
    "IrrepRequest",
    "IrrepResponse",
    "DecomposeRequest",
    "DecomposeResponse",
    "CommutantRequest",
    "CommutantResponse",
    "IntertwinerRequest",
    "IntertwinerResponse",
]

Representation = Dict[str, Any]
"""Generators as nested [re, im] pairs with their dimension and realness"""

ComplexMatrix = List[Any]


class IrrepRequest(BaseRequest):
    dim: int
    """Dimension of the irreducible representation"""
    real: bool = False
    """Return the real form instead of the complex one"""

    @validator("dim")
    def _positive(cls, value: int) -> int:  # pylint: disable=no-self-argument
        if value < 1:
            raise ValueError("dim must be positive")
        return value


class IrrepResponse(BaseResponse):
    representation: Representation
    casimir: float
    """The Casimir eigenvalue, −ΣY_a² = casimir·I"""


class DecomposeRequest(BaseRequest):
    representation: Representation


class DecomposeResponse(BaseResponse):
    summands: List[int]
    """Dimensions of the irreducible summands, descending"""
    multiplicities: Dict[int, int]


class CommutantRequest(BaseRequest):
    representation: Representation


class CommutantResponse(BaseResponse):
    basis: List[ComplexMatrix]
    dimension: int


class IntertwinerRequest(BaseRequest):
    n: int
    """The triple maps the n-dimensional irreducible into the (n+2)-dimensional one"""
    real: bool = False
    theta: float = 0.0
    """Phase for the complex form; ignored when real"""


class IntertwinerResponse(BaseResponse):
    intertwiner: Dict[str, Any]
    residuals: Dict[str, float]
    """Residual of each of the seven identities"""
    holds: bool
    """Every residual is within IDENTITY_TOL"""
