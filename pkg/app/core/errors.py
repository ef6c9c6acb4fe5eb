from typing import Any, Optional

__all__ = [
    "MonopoleError",
    "DimensionMismatch",
    "NotPureImaginary",
    "RankDeficient",
    "NoRealForm",
    "NotIrreducible",
    "InvalidRepresentation",
    "PhaseSearchFailed",
    "SingularGram",
    "NotUnitary",
    "NotOrthogonal",
    "NotUnitQuaternion",
    "PreconditionFailed",
    "UnsupportedSummand",
    "OutOfRange",
    "ConstructionInvalid",
    "NotSymmetric",
    "KernelDimensionMismatch",
    "StencilOutsideBall",
    "GaugeAlignmentFailed",
    "RankZeroH",
    "UnknownParameter",
    "UnsupportedStructureGroup",
]


class MonopoleError(Exception):
    """Base class for every failure raised by the monopole core."""


class DimensionMismatch(MonopoleError):
    """Operands have incompatible shapes."""


class NotPureImaginary(MonopoleError):
    """A quaternionic matrix has a non-negligible real part."""


class RankDeficient(MonopoleError):
    """Columns are not right-linearly independent over the quaternions."""


class NoRealForm(MonopoleError):
    """The requested dimension admits no irreducible real representation."""


class NotIrreducible(MonopoleError):
    """The top weight space is not one dimensional."""


class InvalidRepresentation(MonopoleError):
    """Generators do not close into a representation of sp(1)."""


class PhaseSearchFailed(MonopoleError):
    """No global phase makes the intertwiner triple real."""


class SingularGram(MonopoleError):
    """L·L† is not invertible."""


class NotUnitary(MonopoleError):
    pass


class NotOrthogonal(MonopoleError):
    pass


class NotUnitQuaternion(MonopoleError):
    pass


class PreconditionFailed(MonopoleError):
    """A documented precondition or postcondition does not hold."""


class UnsupportedSummand(MonopoleError):
    """A summand of dimension 2 (mod 4) has no real irreducible form."""


class OutOfRange(MonopoleError):
    """A family parameter lies outside its admissible range."""


class ConstructionInvalid(MonopoleError):
    """
    The constructed data fails validation.

    The failing report is kept so callers can show what went wrong.
    """

    def __init__(self, message: str, report: Optional[Any] = None) -> None:
        super().__init__(message)
        self.report = report


class NotSymmetric(MonopoleError):
    """Data is not spherically symmetric with respect to the given generators."""


class KernelDimensionMismatch(MonopoleError):
    pass


class StencilOutsideBall(MonopoleError):
    pass


class GaugeAlignmentFailed(MonopoleError):
    pass


class RankZeroH(MonopoleError):
    """Every eigenvalue of H vanishes, so no rational map can be formed."""


class UnknownParameter(MonopoleError):
    pass


class UnsupportedStructureGroup(MonopoleError):
    pass
