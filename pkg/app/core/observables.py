from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, Optional, Sequence

import numpy as np

from .adhm import AdhmData
from .errors import PreconditionFailed, RankZeroH, UnsupportedStructureGroup
from .quat import imaginary_parts
from .settings import resolve_tol
from .suirrep import complex_pairs

__all__ = ["SpectralCurve", "RationalMap", "spectral_polynomial", "spectral_curve", "rational_map"]

logger = getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectralCurve:
    """
    Coefficients c[p, q] of η^p·ζ^q, normalised so the first coefficient of
    largest modulus equals one. ``scale`` recovers the raw determinant.
    """

    coefficients: np.ndarray
    scale: complex

    def evaluate(self, eta: complex, zeta: complex) -> complex:
        degree = self.coefficients.shape[0]
        powers_eta = eta ** np.arange(degree)
        powers_zeta = zeta ** np.arange(degree)
        return complex(powers_eta @ self.coefficients @ powers_zeta)

    def to_dict(self) -> Dict[str, Any]:
        return {"coefficients": complex_pairs(self.coefficients), "scale": [self.scale.real, self.scale.imag]}


@dataclass(frozen=True, eq=False)
class RationalMap:
    eigenvalue: float
    vector: np.ndarray
    denominator: np.ndarray
    """K = (I − M₃)^(-1/2)·(M₁ + iM₂)·(I − M₃)^(-1/2); R(z) = λ·v†·(z − K)⁻¹·v̄"""

    rank: int

    def __call__(self, z: complex) -> complex:
        size = self.denominator.shape[0]
        solved = np.linalg.solve(z * np.eye(size) - self.denominator, self.vector.conj())
        return complex(self.eigenvalue * (self.vector.conj() @ solved))

    def evaluate(self, points: Sequence[complex]) -> np.ndarray:
        return np.array([self(z) for z in points])

    def to_dict(self) -> Dict[str, Any]:
        return {"eigenvalue": self.eigenvalue, "vector": complex_pairs(self.vector), "rank": self.rank}


def spectral_polynomial(d: AdhmData, eta: complex, zeta: complex, tol: Optional[float] = None) -> complex:
    """det(ηζ(M₁ − iM₂) + ζ(I − M₃) − η(I + M₃) − (M₁ + iM₂))"""
    M1, M2, M3 = imaginary_parts(d.M, tol).as_tuple()
    eye = np.eye(d.k)
    matrix = eta * zeta * (M1 - 1j * M2) + zeta * (eye - M3) - eta * (eye + M3) - (M1 + 1j * M2)
    return complex(np.linalg.det(matrix))


def spectral_curve(d: AdhmData, tol: Optional[float] = None) -> SpectralCurve:
    """Interpolate the determinant on a (k+1)×(k+1) grid of roots of unity."""
    size = d.k + 1
    roots = np.exp(2j * np.pi * np.arange(size) / size)
    values = np.array([[spectral_polynomial(d, eta, zeta, tol) for zeta in roots] for eta in roots])
    coefficients = np.fft.fft2(values) / size ** 2
    magnitudes = np.abs(coefficients).ravel()
    leading = int(np.argmax(magnitudes >= magnitudes.max() * (1.0 - 1e-9)))
    scale = complex(coefficients.ravel()[leading])
    return SpectralCurve(coefficients / scale, scale)


def rational_map(d: AdhmData, tol: Optional[float] = None) -> RationalMap:
    if d.n != 1:
        raise UnsupportedStructureGroup(f"rational maps are built for Sp(1) data, got n = {d.n}")
    tolerance = resolve_tol(tol)
    M1, M2, M3 = imaginary_parts(d.M, tol).as_tuple()
    eye = np.eye(d.k)
    values, vectors = np.linalg.eigh(eye - M3)
    if values.min() <= tolerance:
        raise PreconditionFailed(f"I − M₃ is not positive definite, smallest eigenvalue {values.min():.3e}")
    root_inverse = (vectors * values ** -0.5) @ vectors.T
    raising = M1 + 1j * M2
    lowering = M1 - 1j * M2
    H = root_inverse @ (eye + M3 - lowering @ np.linalg.solve(eye - M3, raising)) @ root_inverse
    H = 0.5 * (H + H.conj().T)
    eigenvalues, eigenvectors = np.linalg.eigh(H)
    rank = int(np.sum(np.abs(eigenvalues) > tolerance * max(1.0, float(np.abs(eigenvalues).max()))))
    if rank == 0:
        raise RankZeroH("H vanishes")
    pick = int(np.argmax(np.abs(eigenvalues)))
    vector = eigenvectors[:, pick]
    anchor = vector[-1] if abs(vector[-1]) > tolerance else vector[int(np.argmax(np.abs(vector)))]
    vector = vector * abs(anchor) / anchor
    logger.debug(f"rational map eigenvalue {eigenvalues[pick]:.15f} with H of rank {rank}")
    return RationalMap(float(eigenvalues[pick]), vector, root_inverse @ raising @ root_inverse, rank)
