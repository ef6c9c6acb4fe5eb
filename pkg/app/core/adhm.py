from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from logging import getLogger
from typing import Any, Dict, Optional, Tuple

import numpy as np

from .errors import (
    DimensionMismatch,
    NotOrthogonal,
    NotUnitary,
    NotUnitQuaternion,
    PreconditionFailed,
    SingularGram,
)
from .quat import (
    UNITS,
    QMatrix,
    Quaternion,
    complex_embed,
    hermitian_eigvalsh,
    inverse,
    unitarity_residual,
)
from .settings import get_settings, resolve_tol

__all__ = [
    "Domain",
    "AdhmData",
    "ValidityReport",
    "mu",
    "gauge_act",
    "rotate_act",
    "equivariance_q",
    "domain_points",
    "delta_gram_eigenvalues",
    "validate",
]

logger = getLogger(__name__)


class Domain(str, Enum):
    """Region of the closed ball on which non-singularity of Δ†Δ is sampled."""

    BALL = "ball"
    AXIAL = "axial"
    RAY = "ray"


@dataclass(frozen=True, eq=False)
class AdhmData:
    """
    The pair (L, M) with L of shape n×k and M of shape k×k.

    Membership in the data set requires M symmetric and pure imaginary,
    L·L† positive definite, L†L − M² = I_k and Δ(X)†Δ(X) non-singular on the
    closed ball.
    """

    L: QMatrix
    M: QMatrix

    def __post_init__(self) -> None:
        if self.M.rows != self.M.cols or self.L.cols != self.M.rows:
            raise DimensionMismatch(
                f"L of shape {self.L.shape} and M of shape {self.M.shape} are incompatible"
            )

    @property
    def n(self) -> int:
        return self.L.rows

    @property
    def k(self) -> int:
        return self.M.rows

    @cached_property
    def mu(self) -> QMatrix:
        return mu(self)

    def algebraic_residual(self) -> float:
        """‖L†L − M² − I_k‖"""
        return (self.L.dagger() @ self.L - self.M @ self.M - QMatrix.identity(self.k)).norm()

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "L": self.L.to_dict(), "M": self.M.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AdhmData":
        return cls(QMatrix.from_dict(data["L"]), QMatrix.from_dict(data["M"]))


@dataclass(frozen=True)
class ValidityReport:
    symmetric_ok: bool
    imaginary_ok: bool
    lldagger_min_eig: float
    algebraic_residual: float
    delta_min_eig_over_domain: float
    domain: Domain
    margin: float
    samples: int
    pairing_ok: bool
    worst_point: Tuple[float, float, float]
    tolerance: float

    @property
    def valid(self) -> bool:
        return (
            self.symmetric_ok
            and self.imaginary_ok
            and self.pairing_ok
            and self.algebraic_residual <= self.tolerance
            and self.lldagger_min_eig > self.margin
            and self.delta_min_eig_over_domain > self.margin
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "symmetric_ok": self.symmetric_ok,
            "imaginary_ok": self.imaginary_ok,
            "lldagger_min_eig": self.lldagger_min_eig,
            "algebraic_residual": self.algebraic_residual,
            "delta_min_eig_over_domain": self.delta_min_eig_over_domain,
            "domain": self.domain.value,
            "margin": self.margin,
            "samples": self.samples,
            "pairing_ok": self.pairing_ok,
            "worst_point": list(self.worst_point),
            "tolerance": self.tolerance,
        }


def mu(d: AdhmData, tol: Optional[float] = None) -> QMatrix:
    """The unique μ ∈ sp(n) with μL = LM."""
    tolerance = resolve_tol(tol)
    L, M = d.L, d.M
    gram = L @ L.dagger()
    smallest = float(hermitian_eigvalsh(gram).min())
    if smallest <= tolerance:
        raise SingularGram(f"L·L† has smallest eigenvalue {smallest:.3e}")
    result = L @ M @ L.dagger() @ inverse(gram)

    failures = {
        "μL − LM": (result @ L - L @ M).max_abs(),
        "μ† + μ": (result.dagger() + result).max_abs(),
        "L·L† − μ² − I": (gram - result @ result - QMatrix.identity(d.n)).max_abs(),
    }
    for name, residual in failures.items():
        if residual > tolerance:
            raise PreconditionFailed(f"{name} has residual {residual:.3e}")
    return result


def _check_orthogonal(Q: np.ndarray, size: int, tol: float) -> None:
    if Q.shape != (size, size):
        raise DimensionMismatch(f"expected a {size}×{size} orthogonal matrix, got {Q.shape}")
    residual = float(np.abs(Q.T @ Q - np.eye(size)).max())
    if residual > tol:
        raise NotOrthogonal(f"QᵀQ − I has residual {residual:.3e}")


def _check_unit(p: Quaternion, tol: float) -> None:
    if abs(p.norm() - 1.0) > tol:
        raise NotUnitQuaternion(f"|p| = {p.norm():.15f}")


def gauge_act(q: QMatrix, Q: np.ndarray, d: AdhmData, tol: Optional[float] = None) -> AdhmData:
    """(q, Q)·(L, M) = (q·L·Qᵀ, Q·M·Qᵀ) for q ∈ Sp(n), Q ∈ O(k)."""
    tolerance = resolve_tol(tol)
    if q.shape != (d.n, d.n):
        raise DimensionMismatch(f"expected a {d.n}×{d.n} gauge matrix, got {q.shape}")
    residual = unitarity_residual(q)
    if residual > tolerance:
        raise NotUnitary(f"q†q − I has residual {residual:.3e}")
    Q = np.asarray(Q, dtype=float)
    _check_orthogonal(Q, d.k, tolerance)
    rotation = QMatrix.from_real(Q)
    return AdhmData(q @ d.L @ rotation.transpose(), rotation @ d.M @ rotation.transpose())


def rotate_act(p: Quaternion, d: AdhmData, tol: Optional[float] = None) -> AdhmData:
    """Entrywise conjugation of L and M by the unit quaternion p."""
    _check_unit(p, resolve_tol(tol))
    return AdhmData(d.L.conjugate_by(p), d.M.conjugate_by(p))


def equivariance_q(p: Quaternion, Q: np.ndarray, d: AdhmData, tol: Optional[float] = None) -> QMatrix:
    """
    The unique q ∈ Sp(n) with q·L·Qᵀ = p·L·p̄, given Q·M·Qᵀ = p·M·p̄.
    """
    tolerance = resolve_tol(tol)
    _check_unit(p, tolerance)
    Q = np.asarray(Q, dtype=float)
    _check_orthogonal(Q, d.k, tolerance)
    rotation = QMatrix.from_real(Q)
    if not (rotation @ d.M @ rotation.transpose()).allclose(d.M.conjugate_by(p), tolerance):
        raise PreconditionFailed("Q·M·Qᵀ differs from p·M·p̄")

    gram = d.L @ d.L.dagger()
    q = (inverse(gram) @ d.L.right(p.conjugate()) @ rotation @ d.L.dagger()).left(p)
    if unitarity_residual(q) > tolerance:
        raise PreconditionFailed(f"q is not unitary, residual {unitarity_residual(q):.3e}")
    if not (q @ d.L @ rotation.transpose()).allclose(d.L.conjugate_by(p), tolerance):
        raise PreconditionFailed("q·L·Qᵀ differs from p·L·p̄")
    return q


def domain_points(domain: Domain, samples: int) -> np.ndarray:
    """Sample points (X₁, X₂, X₃) of the closed region, shape (N, 3)."""
    if domain == Domain.RAY:
        heights = np.linspace(0.0, 1.0, samples)
        return np.column_stack([np.zeros(samples), np.zeros(samples), heights])
    if domain == Domain.AXIAL:
        radii, angles = np.meshgrid(
            np.linspace(0.0, 1.0, samples), np.linspace(-0.5 * np.pi, 0.5 * np.pi, samples), indexing="ij"
        )
        radii, angles = radii.ravel(), angles.ravel()
        return np.column_stack([np.zeros(radii.size), radii * np.cos(angles), radii * np.sin(angles)])
    axis = np.linspace(-1.0, 1.0, samples)
    cube = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1).reshape(-1, 3)
    return cube[np.einsum("ij,ij->i", cube, cube) <= 1.0 + 1e-12]


def delta_gram_eigenvalues(d: AdhmData, points: np.ndarray, chunk: Optional[int] = None) -> np.ndarray:
    """
    Eigenvalues of the embedded Δ(X)†Δ(X) at each point, shape (N, 2k).

    Δ†Δ = L†L + M†M + |X|²·I + Σ_c X_c·(e_c·M − M†·e_c), evaluated in batches.
    """
    chunk = chunk or get_settings().EVALUATION_CHUNK
    L, M = d.L, d.M
    constant = complex_embed(L.dagger() @ L + M.dagger() @ M)
    linear = np.stack([complex_embed(M.left(e) - M.dagger().right(e)) for e in UNITS])
    eye = np.eye(constant.shape[0])
    points = np.atleast_2d(np.asarray(points, dtype=float))
    values = np.empty((points.shape[0], constant.shape[0]))
    for start in range(0, points.shape[0], chunk):
        batch = points[start : start + chunk]
        squares = np.einsum("nc,nc->n", batch, batch)
        grams = constant[None] + squares[:, None, None] * eye[None] + np.einsum("nc,cij->nij", batch, linear)
        values[start : start + chunk] = np.linalg.eigvalsh(grams)
    return values


def validate(
    d: AdhmData,
    domain: Domain = Domain.BALL,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
    margin: Optional[float] = None,
) -> ValidityReport:
    settings = get_settings()
    tolerance = resolve_tol(tol)
    margin = settings.MARGIN if margin is None else margin
    if samples is None:
        samples = {
            Domain.RAY: settings.RAY_SAMPLES,
            Domain.AXIAL: settings.DISC_SAMPLES,
            Domain.BALL: settings.BALL_SAMPLES,
        }[domain]

    M = d.M
    symmetric_ok = (M - M.transpose()).max_abs() <= tolerance
    imaginary_ok = float(np.abs(M.w).max(initial=0.0)) <= tolerance
    lldagger_min_eig = float(hermitian_eigvalsh(d.L @ d.L.dagger()).min())

    points = domain_points(domain, samples)
    values = delta_gram_eigenvalues(d, points)
    scale = max(1.0, float(np.abs(values).max()))
    pairing_ok = bool(np.abs(values[:, 0::2] - values[:, 1::2]).max() <= tolerance * scale)
    minima = values[:, 0]
    worst = int(np.argmin(minima))
    report = ValidityReport(
        symmetric_ok=bool(symmetric_ok),
        imaginary_ok=imaginary_ok,
        lldagger_min_eig=lldagger_min_eig,
        algebraic_residual=d.algebraic_residual(),
        delta_min_eig_over_domain=float(minima[worst]),
        domain=domain,
        margin=margin,
        samples=samples,
        pairing_ok=pairing_ok,
        worst_point=tuple(float(value) for value in points[worst]),  # type: ignore
        tolerance=tolerance,
    )
    logger.debug(
        f"validated n={d.n}, k={d.k} on {domain.value} with {points.shape[0]} points: "
        f"min eigenvalue {report.delta_min_eig_over_domain:.3e}"
    )
    return report
