"""
Monopole fields on the ball model of hyperbolic space.

For X = X₁i + X₂j + X₃k with R < 1, Δ(X) = [L; M − X·I_k] and ψ(X) is an
orthonormal frame of ker Δ(X)†. The Higgs field is
Φ = ½·ψ†·[[−μ, L], [−L†, M]]·ψ and the connection is A_i = ψ†·∂_iψ.
The metric is g_ij = 4δ_ij/(1 − R²)².
"""
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import polar

from .adhm import AdhmData
from .errors import GaugeAlignmentFailed, OutOfRange, StencilOutsideBall
from .quat import QMatrix, Quaternion, complex_embed, complex_extract, kernel_basis
from .settings import get_settings
from .suirrep import LEVI_CIVITA, complex_pairs

__all__ = [
    "BallPoint",
    "FieldSample",
    "BoundaryLimit",
    "delta",
    "kernel_frame",
    "higgs",
    "higgs_matrix",
    "higgs_boundary_eigenvalues",
    "energy_density",
    "connection_and_bogomolny",
    "ray_profile",
]

logger = getLogger(__name__)

ALIGNMENT_FLOOR = 1e-3


@dataclass(frozen=True)
class BallPoint:
    X1: float
    X2: float
    X3: float

    def __post_init__(self) -> None:
        if self.R >= 1.0:
            raise OutOfRange(f"point ({self.X1}, {self.X2}, {self.X3}) lies outside the open ball")

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "BallPoint":
        X1, X2, X3 = (float(value) for value in values)
        return cls(X1, X2, X3)

    @classmethod
    def on_ray(cls, direction: Sequence[float], r: float) -> "BallPoint":
        unit = np.asarray(direction, dtype=float)
        return cls.from_array(r * unit / np.linalg.norm(unit))

    @property
    def R(self) -> float:
        return float(np.sqrt(self.X1 ** 2 + self.X2 ** 2 + self.X3 ** 2))

    def as_array(self) -> np.ndarray:
        return np.array([self.X1, self.X2, self.X3])

    def quaternion(self) -> Quaternion:
        return Quaternion.imaginary(self.as_array())

    def shifted(self, axis: int, step: float) -> "BallPoint":
        values = self.as_array()
        values[axis] += step
        return BallPoint.from_array(values)


@dataclass(frozen=True, eq=False)
class FieldSample:
    point: BallPoint
    higgs: QMatrix
    higgs_norm_sq: float
    higgs_eigenvalues: np.ndarray
    energy_density: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": list(self.point.as_array()),
            "higgs": self.higgs.to_dict(),
            "higgs_norm_sq": self.higgs_norm_sq,
            "higgs_eigenvalues": complex_pairs(self.higgs_eigenvalues),
            "energy_density": self.energy_density,
        }


@dataclass(frozen=True, eq=False)
class BoundaryLimit:
    radii: np.ndarray
    eigenvalues: np.ndarray
    """Imaginary parts of the eigenvalues of Φ, shape (len(radii), 2n), ascending per row"""

    limit: np.ndarray

    def multiplicities(self, tol: float = 1e-4) -> List[Tuple[complex, int]]:
        groups: List[List[complex]] = []
        for value in self.limit:
            if groups and abs(value - groups[-1][0]) <= tol:
                groups[-1].append(value)
            else:
                groups.append([value])
        return [(complex(np.mean(group)), len(group)) for group in groups]


def delta(d: AdhmData, X: BallPoint) -> QMatrix:
    return QMatrix.block([[d.L], [d.M - QMatrix.from_scalar(X.quaternion(), d.k)]])


def kernel_frame(d: AdhmData, X: BallPoint, tol: Optional[float] = None) -> QMatrix:
    return kernel_basis(delta(d, X).dagger(), d.n, tol)


def _higgs_block(d: AdhmData) -> QMatrix:
    return QMatrix.block([[-d.mu, d.L], [-d.L.dagger(), d.M]])


def _frame_higgs(block: QMatrix, frame: QMatrix) -> QMatrix:
    return 0.5 * (frame.dagger() @ block @ frame)


def higgs_matrix(d: AdhmData, X: BallPoint, tol: Optional[float] = None) -> QMatrix:
    return _frame_higgs(_higgs_block(d), kernel_frame(d, X, tol))


def _norm_sq(phi: QMatrix) -> float:
    """−(1/n)·Re Tr Φ²"""
    return float(-np.trace((phi @ phi).w) / phi.rows)


def _imaginary_spectrum(phi: QMatrix) -> np.ndarray:
    return np.linalg.eigvalsh(-1j * complex_embed(phi))


def higgs(
    d: AdhmData,
    X: BallPoint,
    energy: bool = False,
    h: Optional[float] = None,
    tol: Optional[float] = None,
) -> FieldSample:
    phi = higgs_matrix(d, X, tol)
    density = energy_density(d, X, h, tol) if energy else None
    return FieldSample(X, phi, _norm_sq(phi), 1j * _imaginary_spectrum(phi), density)


def _step(h: Optional[float], X: BallPoint) -> float:
    step = get_settings().FINITE_DIFFERENCE_STEP if h is None else h
    if step > (1.0 - X.R) / 4.0:
        raise StencilOutsideBall(f"step {step} does not fit inside the ball at R = {X.R}")
    return step


def energy_density(d: AdhmData, X: BallPoint, h: Optional[float] = None, tol: Optional[float] = None) -> float:
    """
    (1/√g)·∂_i(√g·g^ij·∂_j|Φ|²) by the seven point flux stencil.

    √g·g^ii = 2/(1 − R²) is evaluated at the half-step midpoints.
    """
    step = _step(h, X)

    def norm_sq(point: np.ndarray) -> float:
        return _norm_sq(higgs_matrix(d, BallPoint.from_array(point), tol))

    def weight(point: np.ndarray) -> float:
        return 2.0 / (1.0 - float(point @ point))

    center = X.as_array()
    value = norm_sq(center)
    total = 0.0
    for axis in range(3):
        offset = np.zeros(3)
        offset[axis] = step
        forward = norm_sq(center + offset)
        backward = norm_sq(center - offset)
        total += weight(center + 0.5 * offset) * (forward - value) - weight(center - 0.5 * offset) * (value - backward)
    return float((1.0 - X.R ** 2) ** 3 / 8.0 * total / step ** 2)


def _aligned(frame: QMatrix, reference: QMatrix) -> QMatrix:
    """Right-multiply ``frame`` by the unitary making frame†·reference positive."""
    overlap = complex_embed(frame.dagger() @ reference)
    smallest = float(np.linalg.svd(overlap, compute_uv=False).min())
    if smallest < ALIGNMENT_FLOOR:
        raise GaugeAlignmentFailed(f"neighbouring frames overlap with singular value {smallest:.3e}")
    unitary, _ = polar(overlap)
    return frame @ complex_extract(unitary)


def connection_and_bogomolny(
    d: AdhmData, X: BallPoint, h: Optional[float] = None, tol: Optional[float] = None
) -> float:
    """
    ‖F + ⋆DΦ‖ at X with neighbouring frames continued from the frame at X.

    F_ij = ∂_iψ†·(I − ψψ†)·∂_jψ − (i ↔ j), D_iΦ = ∂_iΦ + [A_i, Φ] and
    (⋆DΦ)_ij = 2/(1 − R²)·Σ_l ε_ijl·D_lΦ.
    """
    step = _step(h, X)
    block = _higgs_block(d)
    center = kernel_frame(d, X, tol)
    phi = _frame_higgs(block, center)
    projector = QMatrix.identity(center.rows) - center @ center.dagger()

    derivatives: List[QMatrix] = []
    covariant: List[QMatrix] = []
    for axis in range(3):
        forward = _aligned(kernel_frame(d, X.shifted(axis, step), tol), center)
        backward = _aligned(kernel_frame(d, X.shifted(axis, -step), tol), center)
        derivative = (1.0 / (2.0 * step)) * (forward - backward)
        connection = center.dagger() @ derivative
        phi_derivative = (1.0 / (2.0 * step)) * (_frame_higgs(block, forward) - _frame_higgs(block, backward))
        derivatives.append(derivative)
        covariant.append(phi_derivative + connection @ phi - phi @ connection)

    factor = 2.0 / (1.0 - X.R ** 2)
    total = 0.0
    for i in range(3):
        for j in range(3):
            curvature = derivatives[i].dagger() @ projector @ derivatives[j] - derivatives[j].dagger() @ projector @ derivatives[i]
            for l in range(3):
                curvature = curvature + (factor * LEVI_CIVITA[i, j, l]) * covariant[l]
            total += curvature.norm() ** 2
    return float(np.sqrt(total))


def higgs_boundary_eigenvalues(
    d: AdhmData, direction: Sequence[float], radii: Sequence[float], tol: Optional[float] = None
) -> BoundaryLimit:
    """Spectrum of Φ along a ray, extrapolated to R = 1 by a quadratic fit in 1 − r."""
    radii = np.asarray(radii, dtype=float)
    spectra = np.array(
        [_imaginary_spectrum(higgs_matrix(d, BallPoint.on_ray(direction, r), tol)) for r in radii]
    )
    degree = min(2, len(radii) - 1)
    distances = 1.0 - radii
    limit = np.array(
        [np.polyval(np.polyfit(distances, spectra[:, column], degree), 0.0) for column in range(spectra.shape[1])]
    )
    return BoundaryLimit(radii, spectra, 1j * limit)


def ray_profile(
    d: AdhmData,
    radii: Sequence[float],
    direction: Sequence[float] = (0.0, 0.0, 1.0),
    energy: bool = True,
    h: Optional[float] = None,
    tol: Optional[float] = None,
) -> List[FieldSample]:
    """Field samples along a ray; the energy density is omitted where the stencil leaves the ball."""
    step = get_settings().FINITE_DIFFERENCE_STEP if h is None else h
    samples = []
    for r in radii:
        point = BallPoint.on_ray(direction, float(r))
        with_energy = energy and step <= (1.0 - point.R) / 4.0
        samples.append(higgs(d, point, with_energy, step, tol))
    logger.debug(f"sampled {len(samples)} points along {list(direction)}")
    return samples
