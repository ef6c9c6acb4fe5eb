"""
Representations of sp(1) ≅ su(2).

Generators Y₁, Y₂, Y₃ are the images of υ₁ = i/2, υ₂ = j/2, υ₃ = k/2 and satisfy
[Y_a, Y_b] = Σ_c ε_abc Y_c. Complex irreducibles use the angular momentum basis
with i·Y₁ = J_z diagonal and weights in decreasing order.
"""
from collections import Counter
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import block_diag, expm, null_space

from .errors import InvalidRepresentation, NoRealForm, NotIrreducible
from .quat import QMatrix, complex_embed, complex_extract
from .settings import get_settings, resolve_tol

__all__ = [
    "ReprTriple",
    "WeightDecomposition",
    "Ladder",
    "LEVI_CIVITA",
    "complex_irrep",
    "real_irrep",
    "so3_generators",
    "left_multiplication_generators",
    "quaternionic_irrep",
    "restrict_scalars",
    "direct_sum",
    "ladder",
    "decompose",
    "commutant_basis",
    "intertwiner_space",
    "rotation",
    "complex_pairs",
    "from_complex_pairs",
]

logger = getLogger(__name__)

LEVI_CIVITA = np.zeros((3, 3, 3))
for _a, _b, _c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_a, _b, _c] = 1.0
    LEVI_CIVITA[_b, _a, _c] = -1.0


def complex_pairs(matrix: np.ndarray) -> List[Any]:
    """Nested lists with every complex entry written as [re, im]."""
    return np.stack([np.real(matrix), np.imag(matrix)], axis=-1).tolist()


def from_complex_pairs(entries: Sequence[Any]) -> np.ndarray:
    pairs = np.asarray(entries, dtype=float)
    return pairs[..., 0] + 1j * pairs[..., 1]


@dataclass(frozen=True, eq=False)
class ReprTriple:
    """
    Generators of a representation of sp(1).

    ``structure`` is the unitary U with Y_a = U†·diag(y_a, y_a)·U, present for
    the real irreducibles of dimension divisible by four.
    """

    Y1: np.ndarray
    Y2: np.ndarray
    Y3: np.ndarray
    realness: bool = False
    structure: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return int(self.Y1.shape[0])

    @property
    def generators(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.Y1, self.Y2, self.Y3)

    def casimir(self) -> np.ndarray:
        """−ΣY_a²"""
        return -sum(Y @ Y for Y in self.generators)

    def commutator_residual(self) -> float:
        residual = 0.0
        for a in range(3):
            for b in range(3):
                bracket = self.generators[a] @ self.generators[b] - self.generators[b] @ self.generators[a]
                expected = sum(LEVI_CIVITA[a, b, c] * self.generators[c] for c in range(3))
                residual = max(residual, float(np.linalg.norm(bracket - expected)))
        return residual

    def conjugated(self, Q: np.ndarray) -> "ReprTriple":
        """The equivalent representation Q·Y·Q† for unitary Q."""
        return ReprTriple(
            *(Q @ Y @ Q.conj().T for Y in self.generators),
            realness=self.realness and not np.iscomplexobj(Q),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "real": self.realness,
            "generators": [complex_pairs(Y) for Y in self.generators],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReprTriple":
        generators = [from_complex_pairs(entries) for entries in data["generators"]]
        realness = bool(data.get("real", False))
        if realness:
            generators = [Y.real for Y in generators]
        return cls(*generators, realness=realness)


@dataclass(frozen=True)
class WeightDecomposition:
    summands: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(self.summands)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.summands))


@dataclass(frozen=True, eq=False)
class Ladder:
    lowering: np.ndarray
    raising: np.ndarray
    highest_weight: np.ndarray


def complex_irrep(n: int) -> ReprTriple:
    if n < 1:
        raise InvalidRepresentation(f"dimension must be positive, got {n}")
    j = 0.5 * (n - 1)
    m = j - np.arange(n)
    raising = np.zeros((n, n))
    for a in range(n - 1):
        raising[a, a + 1] = np.sqrt(j * (j + 1) - m[a + 1] * (m[a + 1] + 1))
    lowering = raising.T
    Jz = np.diag(m).astype(complex)
    Jx = 0.5 * (raising + lowering).astype(complex)
    Jy = -0.5j * (raising - lowering)
    return ReprTriple(-1j * Jz, -1j * Jx, -1j * Jy)


def intertwiner_space(
    left: Sequence[np.ndarray], right: Sequence[np.ndarray], tol: Optional[float] = None
) -> List[np.ndarray]:
    """Basis of {X : L_a·X = X·R_a for every a}."""
    p, q = left[0].shape[0], right[0].shape[0]
    system = np.vstack(
        [np.kron(L, np.eye(q)) - np.kron(np.eye(p), R.T) for L, R in zip(left, right)]
    )
    basis = null_space(system, rcond=resolve_tol(tol))
    return [basis[:, column].reshape(p, q) for column in range(basis.shape[1])]


def _unitary_intertwiner(left: Sequence[np.ndarray], right: Sequence[np.ndarray]) -> np.ndarray:
    solutions = intertwiner_space(left, right)
    if len(solutions) != 1:
        raise NotIrreducible(f"expected a unique intertwiner, found {len(solutions)}")
    solution = solutions[0]
    return solution * np.sqrt(solution.shape[0]) / np.linalg.norm(solution)


def _realify(y: np.ndarray) -> np.ndarray:
    return np.block([[y.real, -y.imag], [y.imag, y.real]])


def real_irrep(n: int) -> ReprTriple:
    if n % 4 == 2:
        raise NoRealForm(f"no real irreducible representation of dimension {n}")
    if n == 1:
        return ReprTriple(np.zeros((1, 1)), np.zeros((1, 1)), np.zeros((1, 1)), realness=True)
    if n % 2:
        complex_rep = complex_irrep(n)
        T = _unitary_intertwiner(complex_rep.generators, [Y.conj() for Y in complex_rep.generators])
        _, O = np.linalg.eigh(T.real + 0.618 * T.imag)
        phases = np.diag(O.T @ T @ O)
        P = O * np.sqrt(phases)
        return ReprTriple(*((P.conj().T @ Y @ P).real for Y in complex_rep.generators), realness=True)
    m = n // 2
    complex_rep = complex_irrep(m)
    J = _unitary_intertwiner(complex_rep.generators, [Y.conj() for Y in complex_rep.generators])
    eye = np.eye(m)
    P = np.block([[eye, eye], [-1j * eye, 1j * eye]]) / np.sqrt(2.0)
    U = block_diag(eye, J) @ P.conj().T
    return ReprTriple(
        *(_realify(y) for y in complex_rep.generators),
        realness=True,
        structure=U,
    )


def so3_generators() -> ReprTriple:
    """The real 3-dimensional representation y₁ = E₁₂−E₂₁, y₂ = E₃₁−E₁₃, y₃ = E₂₃−E₃₂."""
    y1 = np.zeros((3, 3))
    y2 = np.zeros((3, 3))
    y3 = np.zeros((3, 3))
    y1[0, 1], y1[1, 0] = 1.0, -1.0
    y2[2, 0], y2[0, 2] = 1.0, -1.0
    y3[1, 2], y3[2, 1] = 1.0, -1.0
    return ReprTriple(y1, y2, y3, realness=True)


def left_multiplication_generators() -> ReprTriple:
    """Left multiplication by υ_a on ℍ ≅ ℝ⁴ in the basis (1, i, j, k)."""
    Y1 = 0.5 * np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float)
    Y2 = 0.5 * np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=float)
    Y3 = 0.5 * np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=float)
    return ReprTriple(Y1, Y2, Y3, realness=True)


def _symplectic_basis(J: np.ndarray) -> np.ndarray:
    """Unitary W = [e | f] with J = W·Ω·Wᵀ, where f_r = −J·ē_r."""
    size = J.shape[0]
    chosen = np.zeros((size, 0), dtype=complex)
    evens: List[np.ndarray] = []
    odds: List[np.ndarray] = []
    for _ in range(size // 2):
        candidates = np.eye(size) - chosen @ chosen.conj().T
        norms = np.linalg.norm(candidates, axis=0)
        e = candidates[:, int(np.argmax(norms))] / norms.max()
        f = -J @ e.conj()
        chosen = np.column_stack([chosen, e, f])
        evens.append(e)
        odds.append(f)
    return np.column_stack(evens + odds)


def quaternionic_irrep(i: int) -> Tuple[QMatrix, QMatrix, QMatrix]:
    """
    Quaternionic generators whose restriction of scalars is V_i for even i and
    V_i ⊕ V_i for odd i; the quaternionic dimension is i/2 or i respectively.
    """
    if i % 2:
        return tuple(QMatrix.from_real(Y) for Y in real_irrep(i).generators)  # type: ignore
    complex_rep = complex_irrep(i)
    J = _unitary_intertwiner(complex_rep.generators, [Y.conj() for Y in complex_rep.generators])
    W = _symplectic_basis(J)
    return tuple(complex_extract(W.conj().T @ y @ W) for y in complex_rep.generators)  # type: ignore


def restrict_scalars(generators: Sequence[QMatrix]) -> ReprTriple:
    """The complex representation on ℂ²ⁿ underlying quaternionic generators."""
    return ReprTriple(*(complex_embed(y) for y in generators))


def direct_sum(*reps: ReprTriple) -> ReprTriple:
    return ReprTriple(
        *(block_diag(*(rep.generators[a] for rep in reps)) for a in range(3)),
        realness=all(rep.realness for rep in reps),
    )


def ladder(rep: ReprTriple) -> Ladder:
    Y1, Y2, Y3 = (np.asarray(Y, dtype=complex) for Y in rep.generators)
    lowering = 1j * Y2 + Y3
    values, vectors = np.linalg.eigh(1j * Y1)
    top = 0.5 * (rep.dim - 1)
    snap = get_settings().SNAP_TOL
    if abs(values[-1] - top) > snap or (rep.dim > 1 and abs(values[-2] - top) <= snap):
        raise NotIrreducible(f"top weight space of i·Y₁ is not one dimensional at weight {top}")
    vector = vectors[:, -1]
    pivot = int(np.argmax(np.abs(vector)))
    vector = vector * abs(vector[pivot]) / vector[pivot]
    return Ladder(lowering, lowering.conj().T, vector)


def decompose(rep: ReprTriple) -> WeightDecomposition:
    settings = get_settings()
    scale = max(1.0, max(float(np.abs(Y).max(initial=0.0)) for Y in rep.generators))
    if rep.commutator_residual() > settings.SNAP_TOL * scale:
        raise InvalidRepresentation("generators do not satisfy the sp(1) commutation relations")
    doubled = 2.0 * np.linalg.eigvalsh(1j * np.asarray(rep.Y1, dtype=complex))
    snapped = np.rint(doubled)
    if np.abs(doubled - snapped).max(initial=0.0) > settings.SNAP_TOL:
        raise InvalidRepresentation("weights of i·Y₁ are not half-integers")
    weights = Counter(int(value) for value in snapped)
    summands: List[int] = []
    while weights:
        top = max(weights)
        if top < 0:
            raise InvalidRepresentation("weights are not symmetric about zero")
        for weight in range(top, -top - 1, -2):
            if weights[weight] == 0:
                raise InvalidRepresentation(f"weight {weight}/2 missing below highest weight {top}/2")
            weights[weight] -= 1
            if weights[weight] == 0:
                del weights[weight]
        summands.append(top + 1)
    logger.debug(f"decomposed representation of dimension {rep.dim} into {summands}")
    return WeightDecomposition(tuple(sorted(summands, reverse=True)))


def commutant_basis(rep: ReprTriple) -> List[np.ndarray]:
    """Real matrices commuting with every generator of a real representation."""
    if rep.structure is not None:
        U = rep.structure
        m = rep.dim // 2
        eye, zero = np.eye(m), np.zeros((m, m))
        blocks = [
            np.block([[1j * eye, zero], [zero, -1j * eye]]),
            np.block([[zero, eye], [-eye, zero]]),
            np.block([[zero, 1j * eye], [1j * eye, zero]]),
        ]
        return [np.eye(rep.dim)] + [(U.conj().T @ block @ U).real for block in blocks]
    if rep.dim % 2 and decompose(rep).summands == (rep.dim,):
        return [np.eye(rep.dim)]
    generators = [np.real(Y) for Y in rep.generators]
    return intertwiner_space(generators, generators)


def rotation(rep: ReprTriple, axis: Sequence[float], angle: float) -> np.ndarray:
    """exp(−angle·Σ a_c Y_c) for the unit axis a, matching Quaternion.rotation."""
    direction = np.asarray(axis, dtype=float)
    direction = direction / np.linalg.norm(direction)
    generator = sum(direction[c] * rep.generators[c] for c in range(3))
    result = expm(-angle * generator)
    return result.real if rep.realness else result
