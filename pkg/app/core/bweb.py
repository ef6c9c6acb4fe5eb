"""
Intertwiner triples B₁, B₂, B₃ : V_n → V_{n+2} spanning the unique trivial
summand of V_{n+2} ⊗ V_n* ⊗ V₃.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import minimize_scalar

from .errors import DimensionMismatch, NoRealForm, PhaseSearchFailed
from .settings import get_settings, resolve_tol
from .suirrep import LEVI_CIVITA, ReprTriple, complex_irrep, complex_pairs, ladder, real_irrep

__all__ = [
    "IntertwinerTriple",
    "IdentityReport",
    "IDENTITY_NAMES",
    "compute_B",
    "realize_B_real",
    "verify_identities",
    "triple_space_dimension",
]

logger = getLogger(__name__)

IDENTITY_NAMES = (
    "equivariance",
    "upper_gram",
    "lower_gram",
    "upper_commutator",
    "lower_commutator",
    "upper_mixed",
    "lower_mixed",
)


@dataclass(frozen=True, eq=False)
class IntertwinerTriple:
    n: int
    B1: np.ndarray
    B2: np.ndarray
    B3: np.ndarray
    phase: float
    upper: ReprTriple
    lower: ReprTriple

    @property
    def matrices(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.B1, self.B2, self.B3)

    @property
    def is_real(self) -> bool:
        return not any(np.iscomplexobj(B) for B in self.matrices)

    def scaled(self, factor: complex) -> "IntertwinerTriple":
        return IntertwinerTriple(
            self.n, *(factor * B for B in self.matrices), self.phase, self.upper, self.lower
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "phase": self.phase,
            "real": self.is_real,
            "B": [complex_pairs(B) for B in self.matrices],
        }


@dataclass(frozen=True)
class IdentityReport:
    """Frobenius residuals of the seven intertwiner identities, in IDENTITY_NAMES order."""

    residuals: Tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    def holds(self, tol: Optional[float] = None) -> bool:
        return self.max_residual <= (get_settings().IDENTITY_TOL if tol is None else tol)

    def to_dict(self) -> Dict[str, float]:
        return dict(zip(IDENTITY_NAMES, self.residuals))


def _ladder_frame(rep: ReprTriple) -> Tuple[np.ndarray, np.ndarray]:
    """Columns S^j v / |S^j v| and the norms |S^j v|."""
    steps = ladder(rep)
    vectors = [steps.highest_weight]
    for _ in range(rep.dim - 1):
        vectors.append(steps.lowering @ vectors[-1])
    norms = np.array([np.linalg.norm(vector) for vector in vectors])
    return np.column_stack([vector / norm for vector, norm in zip(vectors, norms)]), norms


def compute_B(
    n: int,
    theta: float = 0.0,
    upper: Optional[ReprTriple] = None,
    lower: Optional[ReprTriple] = None,
) -> IntertwinerTriple:
    """
    Build the triple in the ladder bases of the two representations and
    conjugate into the basis of the given generators.

    The coefficients a_j = (n−j)·a_{n−1} with |a_{n−1}| = √2/(n(n+1)) fix B₁;
    B₂ and B₃ follow from equivariance.
    """
    upper = upper if upper is not None else complex_irrep(n + 2)
    lower = lower if lower is not None else complex_irrep(n)
    if upper.dim != n + 2 or lower.dim != n:
        raise DimensionMismatch(f"expected representations of dimension {n + 2} and {n}")
    upper_frame, upper_norms = _ladder_frame(upper)
    lower_frame, lower_norms = _ladder_frame(lower)
    leading = np.sqrt(2.0) * np.exp(1j * theta) / (n * (n + 1))
    standard = np.zeros((n + 2, n), dtype=complex)
    for j in range(n):
        standard[j + 1, j] = leading * (n - j) * upper_norms[j + 1] / lower_norms[j]
    B1 = upper_frame @ standard @ lower_frame.conj().T
    B2 = upper.Y3 @ B1 - B1 @ lower.Y3
    B3 = B1 @ lower.Y2 - upper.Y2 @ B1
    return IntertwinerTriple(n, B1, B2, B3, theta, upper, lower)


def _imaginary_norm(triple: IntertwinerTriple, theta: float) -> float:
    rotation = np.exp(1j * theta)
    return float(np.sqrt(sum(np.linalg.norm((rotation * B).imag) ** 2 for B in triple.matrices)))


def realize_B_real(
    n: int,
    upper: Optional[ReprTriple] = None,
    lower: Optional[ReprTriple] = None,
    tol: Optional[float] = None,
) -> IntertwinerTriple:
    """The triple against real generators, rotated by a global phase to be real."""
    if n % 2 == 0:
        raise NoRealForm(f"real intertwiners need odd n, got {n}")
    upper = upper if upper is not None else real_irrep(n + 2)
    lower = lower if lower is not None else real_irrep(n)
    tolerance = resolve_tol(tol)
    triple = compute_B(n, 0.0, upper, lower)

    grid = np.linspace(0.0, np.pi, get_settings().PHASE_GRID, endpoint=False)
    coarse = np.array([_imaginary_norm(triple, theta) for theta in grid])
    start = float(grid[int(np.argmin(coarse))])
    step = grid[1] - grid[0]
    refined = minimize_scalar(
        lambda theta: _imaginary_norm(triple, theta),
        bounds=(start - step, start + step),
        method="bounded",
        options={"xatol": 1e-14},
    )
    theta = float(refined.x)
    residual = _imaginary_norm(triple, theta)
    if residual > tolerance:
        raise PhaseSearchFailed(f"imaginary norm {residual:.3e} remains above {tolerance:.1e}")

    rotation = np.exp(1j * theta)
    matrices = [(rotation * B).real for B in triple.matrices]
    pivot = np.unravel_index(int(np.argmax(np.abs(matrices[0]))), matrices[0].shape)
    if matrices[0][pivot] > 0:
        matrices = [-B for B in matrices]
        theta += np.pi
    logger.debug(f"real intertwiner for n={n} at phase {theta:.15f}, imaginary residual {residual:.2e}")
    return IntertwinerTriple(n, *matrices, theta, upper, lower)


def _antisymmetric_residual(left: Any, right: Any, scale: float) -> float:
    """sqrt Σ_ij ‖left(i, j) − scale·Σ_l ε_ijl right(l)‖²"""
    total = 0.0
    for i in range(3):
        for j in range(3):
            expected = sum(LEVI_CIVITA[i, j, l] * right(l) for l in range(3))
            total += float(np.linalg.norm(left(i, j) - scale * expected) ** 2)
    return float(np.sqrt(total))


def verify_identities(triple: IntertwinerTriple) -> IdentityReport:
    n = triple.n
    B = triple.matrices
    upper = triple.upper.generators
    lower = triple.lower.generators

    def dag(matrix: np.ndarray) -> np.ndarray:
        return matrix.conj().T

    residuals = (
        _antisymmetric_residual(lambda i, j: upper[i] @ B[j] - B[j] @ lower[i], lambda l: B[l], 1.0),
        float(np.linalg.norm(sum(b @ dag(b) for b in B) - np.eye(n + 2))),
        float(np.linalg.norm(sum(dag(b) @ b for b in B) - (n + 2) / n * np.eye(n))),
        _antisymmetric_residual(
            lambda i, j: B[i] @ dag(B[j]) - B[j] @ dag(B[i]), lambda l: upper[l], -2.0 / (n + 1)
        ),
        _antisymmetric_residual(
            lambda i, j: dag(B[i]) @ B[j] - dag(B[j]) @ B[i],
            lambda l: lower[l],
            2.0 * (n + 2) / (n * (n + 1)),
        ),
        _antisymmetric_residual(
            lambda i, j: upper[i] @ B[j] - upper[j] @ B[i], lambda l: B[l], 0.5 * (n + 3)
        ),
        _antisymmetric_residual(
            lambda i, j: B[i] @ lower[j] - B[j] @ lower[i], lambda l: B[l], -0.5 * (n - 1)
        ),
    )
    return IdentityReport(residuals)


def triple_space_dimension(upper: ReprTriple, lower: ReprTriple, tol: Optional[float] = None) -> int:
    """Complex dimension of the space of triples with Y⁺_iB_j − B_jY⁻_i = Σ_l ε_ijl B_l."""
    p, q = upper.dim, lower.dim
    size = p * q
    rows = []
    for i in range(3):
        for j in range(3):
            row = np.zeros((size, 3 * size), dtype=complex)
            row[:, j * size : (j + 1) * size] += np.kron(upper.generators[i], np.eye(q)) - np.kron(
                np.eye(p), lower.generators[i].T
            )
            for l in range(3):
                row[:, l * size : (l + 1) * size] -= LEVI_CIVITA[i, j, l] * np.eye(size)
            rows.append(row)
    return int(null_space(np.vstack(rows), rcond=resolve_tol(tol)).shape[1])
