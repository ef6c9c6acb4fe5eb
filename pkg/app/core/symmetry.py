"""
Axial and spherical symmetry of ADHM data.

The spherical ansatz assembles every symmetric, pure imaginary M commuting
with a real representation Y = ⊕ Y⁽ᵃ⁾ in the sense [Y_a, M_b] = Σ_c ε_abc M_c,
block by block over the irreducible summands. Families of complete data
(L, M) and the explicit examples live here as well.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from logging import getLogger
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import least_squares

from .adhm import AdhmData, Domain, ValidityReport, validate
from .bweb import compute_B, realize_B_real
from .errors import (
    ConstructionInvalid,
    DimensionMismatch,
    OutOfRange,
    PreconditionFailed,
    UnknownParameter,
    UnsupportedSummand,
    NotSymmetric,
)
from .quat import UNITS, QMatrix, Quaternion, hermitian_eigvalsh, inverse
from .settings import get_settings, resolve_tol
from .suirrep import (
    LEVI_CIVITA,
    ReprTriple,
    commutant_basis,
    direct_sum,
    intertwiner_space,
    quaternionic_irrep,
    real_irrep,
    restrict_scalars,
    so3_generators,
)

__all__ = [
    "Family",
    "FamilyInstance",
    "AnsatzSpec",
    "AnsatzResult",
    "StructureRep",
    "CandidateResult",
    "ExclusionResult",
    "StructureGroupBounds",
    "axial_residual",
    "spherical_residual",
    "structure_ansatz",
    "spherical_solution_space",
    "axial_family_data",
    "family_axial",
    "irrep_div4_coefficients",
    "irrep_div4_data",
    "family_irrep_div4",
    "n2n_coefficients",
    "n2n_data",
    "family_n2n",
    "nn_coefficients",
    "nn_data",
    "family_nn",
    "sp2_example",
    "sp4_example",
    "mzero_example",
    "explicit_examples",
    "build_family",
    "induced_structure_rep",
    "rank_exclusions",
    "structure_group_bounds",
]

logger = getLogger(__name__)

EXCLUSION_THRESHOLD = 0.1


class Family(str, Enum):
    AXIAL = "axial"
    IRREP4 = "irrep4"
    N2N = "n2n"
    NN = "nn"
    SP2 = "sp2"
    SP4 = "sp4"
    MZERO = "mzero"


@dataclass(frozen=True, eq=False)
class FamilyInstance:
    family: Family
    params: Dict[str, float]
    data: AdhmData
    generators: Optional[ReprTriple] = None
    """Spherical generators on ℝᵏ; None for the axial family"""

    axial_generator: Optional[np.ndarray] = None
    report: Optional[ValidityReport] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "params": dict(self.params),
            "data": self.data.to_dict(),
            "generators": self.generators.to_dict() if self.generators is not None else None,
            "report": self.report.to_dict() if self.report is not None else None,
        }


@dataclass(frozen=True)
class AnsatzSpec:
    summands: Tuple[int, ...]
    parameters: Mapping[str, float] = field(default_factory=dict)
    generators: Optional[Tuple[Optional[ReprTriple], ...]] = None
    """Per-summand real generators replacing the default real irreducibles"""


@dataclass(frozen=True, eq=False)
class AnsatzResult:
    summands: Tuple[int, ...]
    labels: Tuple[str, ...]
    directions: Tuple[QMatrix, ...]
    generators: ReprTriple
    M: QMatrix

    @property
    def k(self) -> int:
        return self.generators.dim

    def at(self, parameters: Mapping[str, float]) -> QMatrix:
        values = _resolve_parameters(self.labels, parameters)
        result = QMatrix.zeros(self.k, self.k)
        for label, direction in zip(self.labels, self.directions):
            result = result + values[label] * direction
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "summands": list(self.summands),
            "labels": list(self.labels),
            "M": self.M.to_dict(),
            "directions": [direction.to_dict() for direction in self.directions],
        }


def _resolve_parameters(labels: Sequence[str], parameters: Mapping[str, float]) -> Dict[str, float]:
    values = dict.fromkeys(labels, 0.0)
    for name, value in parameters.items():
        if name == "a" and len(labels) == 1:
            name = labels[0]
        if name not in values:
            raise UnknownParameter(f"unknown ansatz parameter {name!r}; expected one of {list(labels)}")
        values[name] = float(value)
    return values


def _commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return A @ B - B @ A


def axial_residual(d: AdhmData, Y: np.ndarray) -> float:
    """Norm of the system M₁ = [M₂, Y], M₂ = [Y, M₁], [Y, M₃] = 0."""
    Y = np.asarray(Y, dtype=float)
    if Y.shape != (d.k, d.k):
        raise DimensionMismatch(f"expected a {d.k}×{d.k} generator, got {Y.shape}")
    M1, M2, M3 = d.M.x, d.M.y, d.M.z
    return float(
        np.sqrt(
            np.linalg.norm(M1 - _commutator(M2, Y)) ** 2
            + np.linalg.norm(M2 - _commutator(Y, M1)) ** 2
            + np.linalg.norm(_commutator(Y, M3)) ** 2
        )
    )


def spherical_residual(d: AdhmData, rep: ReprTriple) -> float:
    """Σ_ab ‖[Y_a, M_b] − Σ_c ε_abc M_c‖"""
    if rep.dim != d.k:
        raise DimensionMismatch(f"representation of dimension {rep.dim} on data with k={d.k}")
    parts = (d.M.x, d.M.y, d.M.z)
    generators = [np.real(Y) for Y in rep.generators]
    total = 0.0
    for a in range(3):
        for b in range(3):
            expected = sum(LEVI_CIVITA[a, b, c] * parts[c] for c in range(3))
            total += float(np.linalg.norm(_commutator(generators[a], parts[b]) - expected))
    return total


def _block_solutions(upper: Sequence[np.ndarray], lower: Sequence[np.ndarray], symmetric: bool) -> List[np.ndarray]:
    """Real triples X with Y⁺_j X_i − X_i Y⁻_j = Σ_c ε_jic X_c, shape (3, p, q) each."""
    p, q = upper[0].shape[0], lower[0].shape[0]
    size = p * q
    rows = []
    for j in range(3):
        for i in range(3):
            row = np.zeros((size, 3 * size))
            row[:, i * size : (i + 1) * size] += np.kron(upper[j], np.eye(q)) - np.kron(np.eye(p), lower[j].T)
            for c in range(3):
                row[:, c * size : (c + 1) * size] -= LEVI_CIVITA[j, i, c] * np.eye(size)
            rows.append(row)
    if symmetric:
        transpose = np.eye(size).reshape(p, q, p, q).transpose(0, 1, 3, 2).reshape(size, size)
        for i in range(3):
            row = np.zeros((size, 3 * size))
            row[:, i * size : (i + 1) * size] = np.eye(size) - transpose
            rows.append(row)
    basis = null_space(np.vstack(rows), rcond=resolve_tol())
    return [basis[:, column].reshape(3, p, q) for column in range(basis.shape[1])]


def _same_generators(first: ReprTriple, second: ReprTriple) -> bool:
    return all(np.array_equal(a, b) for a, b in zip(first.generators, second.generators))


def _recover_complex(rep: ReprTriple) -> ReprTriple:
    """The generators y_a of V_{n/2} with Y_a = U†·diag(y_a, y_a)·U."""
    U = rep.structure
    half = rep.dim // 2
    return ReprTriple(*((U @ Y @ U.conj().T)[:half, :half] for Y in rep.generators))  # type: ignore


def _gap_four_blocks(upper: ReprTriple, lower: ReprTriple) -> List[np.ndarray]:
    if upper.structure is None or lower.structure is None:
        return _block_solutions(
            [np.real(Y) for Y in upper.generators], [np.real(Y) for Y in lower.generators], symmetric=False
        )
    m_upper, m_lower = upper.dim // 2, lower.dim // 2
    triple = compute_B(m_lower, 0.0, _recover_complex(upper), _recover_complex(lower))
    candidates = []
    for row, col, factor in product(range(2), range(2), (1.0, 1j)):
        blocks = []
        for B in triple.matrices:
            block = np.zeros((upper.dim, lower.dim), dtype=complex)
            block[row * m_upper : (row + 1) * m_upper, col * m_lower : (col + 1) * m_lower] = factor * B
            blocks.append(upper.structure.conj().T @ block @ lower.structure)
        stacked = np.stack(blocks).ravel()
        candidates.extend([stacked.real, stacked.imag])
    _, singular, rows = np.linalg.svd(np.array(candidates), full_matrices=False)
    rank = int(np.sum(singular > resolve_tol() * singular[0]))
    return [rows[r].reshape(3, upper.dim, lower.dim) for r in range(rank)]


def _embed_direction(
    k: int, offsets: Sequence[int], a: int, b: int, blocks: np.ndarray, sizes: Sequence[int]
) -> QMatrix:
    parts = np.zeros((3, k, k))
    rows = slice(offsets[a], offsets[a] + sizes[a])
    cols = slice(offsets[b], offsets[b] + sizes[b])
    for c in range(3):
        parts[c][rows, cols] = blocks[c]
        if a != b:
            parts[c][cols, rows] = blocks[c].T
    return QMatrix.from_imaginary(*parts)


def structure_ansatz(spec: AnsatzSpec) -> AnsatzResult:
    """
    Every spherically symmetric M for the given real summands.

    Diagonal blocks of dimension divisible by four carry Y_i·C_l for the
    skew elements C_l of the commutant. Equal summands pair through Y_i·T for
    intertwiners T. Odd summands differing by two pair through the real
    intertwiner triple, and summands divisible by four differing by four through
    the complex triple conjugated by the structure unitaries. All other blocks
    vanish.
    """
    summands = list(spec.summands)
    overrides = list(spec.generators) if spec.generators is not None else [None] * len(summands)
    if len(overrides) != len(summands):
        raise DimensionMismatch("one generator override per summand is required")
    for dim in summands:
        if dim < 1 or dim % 4 == 2:
            raise UnsupportedSummand(f"summand of dimension {dim} has no real irreducible form")
    order = sorted(range(len(summands)), key=lambda index: -summands[index])
    summands = [summands[index] for index in order]
    reps: List[ReprTriple] = []
    for index in order:
        override = overrides[index]
        rep = override if override is not None else real_irrep(spec.summands[index])
        if rep.dim != spec.summands[index]:
            raise DimensionMismatch(f"override of dimension {rep.dim} for summand {spec.summands[index]}")
        reps.append(rep)

    k = sum(summands)
    offsets = list(np.cumsum([0] + summands[:-1]))
    labels: List[str] = []
    directions: List[QMatrix] = []

    def add(label: str, a: int, b: int, blocks: np.ndarray) -> None:
        if np.abs(blocks).max(initial=0.0) <= resolve_tol():
            return
        labels.append(label)
        directions.append(_embed_direction(k, offsets, a, b, blocks, summands))

    for a, rep in enumerate(reps):
        dim = summands[a]
        if dim % 4:
            continue
        generators = [np.real(Y) for Y in rep.generators]
        if rep.structure is not None:
            skews = commutant_basis(rep)[1:]
            for l, C in enumerate(skews, start=1):
                add(f"kappa_{a + 1}_{l}", a, a, np.stack([Y @ C for Y in generators]))
        else:
            for l, blocks in enumerate(_block_solutions(generators, generators, symmetric=True), start=1):
                add(f"kappa_{a + 1}_{l}", a, a, blocks)

    for a, b in ((a, b) for a in range(len(reps)) for b in range(a + 1, len(reps))):
        upper, lower = reps[a], reps[b]
        gap = summands[a] - summands[b]
        upper_generators = [np.real(Y) for Y in upper.generators]
        if gap == 0:
            if _same_generators(upper, lower):
                intertwiners = commutant_basis(upper)
            else:
                intertwiners = intertwiner_space(upper_generators, [np.real(Y) for Y in lower.generators])
            odd = summands[a] % 2 == 1
            for l, T in enumerate(intertwiners):
                label = f"lambda_{a + 1}_{b + 1}" if odd else f"kappa_{a + 1}_{b + 1}_{l}"
                add(label, a, b, np.stack([Y @ T for Y in upper_generators]))
        elif gap == 2 and summands[b] % 2:
            triple = realize_B_real(summands[b], upper, lower)
            add(f"lambda_{a + 1}_{b + 1}", a, b, np.stack(triple.matrices))
        elif gap == 4 and summands[b] % 4 == 0:
            for r, blocks in enumerate(_gap_four_blocks(upper, lower)):
                add(f"kappa_{a + 1}_{b + 1}_{r}", a, b, blocks)

    generators = direct_sum(*reps)
    result = AnsatzResult(tuple(summands), tuple(labels), tuple(directions), generators, QMatrix.zeros(k, k))
    M = result.at(spec.parameters)
    logger.debug(f"ansatz {summands} has {len(labels)} directions: {labels}")
    return AnsatzResult(result.summands, result.labels, result.directions, generators, M)


def spherical_solution_space(generators: ReprTriple, symmetric: bool = True) -> List[QMatrix]:
    """Brute-force basis of pure imaginary M with [Y_a, M_b] = Σ_c ε_abc M_c."""
    real_generators = [np.real(Y) for Y in generators.generators]
    return [
        QMatrix.from_imaginary(*blocks)
        for blocks in _block_solutions(real_generators, real_generators, symmetric=symmetric)
    ]


def _spin_matrix(rep: ReprTriple, alpha: float, beta: float) -> QMatrix:
    """α·I + β·(Y₁i + Y₂j + Y₃k)"""
    Y1, Y2, Y3 = (np.real(Y) for Y in rep.generators)
    return QMatrix.from_parts(w=alpha * np.eye(rep.dim), x=beta * Y1, y=beta * Y2, z=beta * Y3)


def _checked_instance(
    family: Family,
    params: Dict[str, float],
    data: AdhmData,
    domain: Domain,
    generators: Optional[ReprTriple] = None,
    axial_generator: Optional[np.ndarray] = None,
) -> FamilyInstance:
    report = validate(data, domain)
    if not report.valid:
        raise ConstructionInvalid(f"{family.value} data with {params} is not valid", report)
    return FamilyInstance(family, params, data, generators, axial_generator, report)


def _axial_generator(s2: int) -> np.ndarray:
    return 0.5 * s2 * np.array([[0.0, 1.0], [-1.0, 0.0]])


def axial_family_data(A: float, s2: int = 1, s3: int = 1) -> AdhmData:
    """The axial Sp(1) data without validation, so A = 0 can be inspected."""
    if abs(A) > 0.5:
        raise OutOfRange(f"A = {A} lies outside [-1/2, 1/2]")
    root = np.sqrt(max(0.0, 1.0 - 4.0 * A * A))
    M = QMatrix.from_imaginary(
        A * np.array([[0.0, 1.0], [1.0, 0.0]]),
        s2 * A * np.array([[1.0, 0.0], [0.0, -1.0]]),
        s3 * root * np.eye(2),
    )
    L = QMatrix.from_rows([[np.sqrt(2.0) * A, Quaternion(z=-s2 * np.sqrt(2.0) * A)]])
    return AdhmData(L, M)


def family_axial(A: float, s2: int = 1, s3: int = 1) -> FamilyInstance:
    """Axially symmetric Sp(1) monopoles generated by Y = (s₂/2)·[[0, 1], [−1, 0]]."""
    data = axial_family_data(A, s2, s3)
    return _checked_instance(
        Family.AXIAL,
        {"A": float(A), "s2": float(s2), "s3": float(s3)},
        data,
        Domain.AXIAL,
        axial_generator=_axial_generator(s2),
    )


def irrep_div4_coefficients(k: int, kappa: float, sign: int = 1) -> Tuple[float, float]:
    if k % 4 or k < 4:
        raise UnsupportedSummand(f"irreducible family needs k divisible by four, got {k}")
    if not 0.0 < kappa <= 4.0 / (k + 2):
        raise OutOfRange(f"κ = {kappa} lies outside (0, {4.0 / (k + 2)}]")
    base = 16.0 - (k * k + 4.0) * kappa ** 2
    discriminant = np.sqrt(max(0.0, base ** 2 - 16.0 * k * k * kappa ** 4))
    beta = np.sqrt((base + sign * discriminant) / (2.0 * k * k))
    alpha = -(beta ** 2 + kappa ** 2) / (2.0 * beta)
    return float(alpha), float(beta)


def irrep_div4_data(k: int, kappa: float, sign: int = 1) -> Tuple[AdhmData, ReprTriple]:
    alpha, beta = irrep_div4_coefficients(k, kappa, sign)
    ansatz = structure_ansatz(AnsatzSpec((k,), {"kappa_1_1": kappa}))
    return AdhmData(_spin_matrix(ansatz.generators, alpha, beta), ansatz.M), ansatz.generators


def family_irrep_div4(k: int, kappa: float, sign: int = 1) -> FamilyInstance:
    if not 0.0 < kappa < 4.0 / (k + 2):
        raise OutOfRange(f"κ = {kappa} lies outside (0, {4.0 / (k + 2)})")
    data, generators = irrep_div4_data(k, kappa, sign)
    return _checked_instance(
        Family.IRREP4, {"k": float(k), "kappa": float(kappa), "sign": float(sign)}, data, Domain.RAY, generators
    )


def _n2n_bound(n: int) -> float:
    return float(np.sqrt((n + 1) / (2.0 * (n + 2))))


def n2n_coefficients(n: int, a: float, sign: int = 1, lower_sign: int = 1) -> Tuple[float, float, float, float]:
    """(α, β, γ, δ) of the (n+2) ⊕ n family; the boundary value of a is accepted."""
    if n < 1 or n % 2 == 0:
        raise UnsupportedSummand(f"(n+2) ⊕ n family needs odd n, got {n}")
    if not 0.0 < a <= _n2n_bound(n) + 1e-15:
        raise OutOfRange(f"a = {a} lies outside (0, {_n2n_bound(n)}]")
    root = np.sqrt(max(0.0, (n + 1) * (n + 1 - 2.0 * (n + 2) * a * a)))
    beta = (n + 1 + sign * root) / ((n + 1) * (n + 2))
    alpha = -(beta ** 2 + 2.0 * a * a / (n + 1)) / (2.0 * beta)
    delta = (n + 1 + lower_sign * root) / (n * (n + 1))
    gamma = (2.0 * (n + 2) / (n * (n + 1)) * a * a - delta ** 2) / (2.0 * delta)
    return float(alpha), float(beta), float(gamma), float(delta)


def n2n_data(n: int, a: float, sign: int = 1, lower_sign: int = 1) -> Tuple[AdhmData, ReprTriple]:
    alpha, beta, gamma, delta = n2n_coefficients(n, a, sign, lower_sign)
    upper, lower = real_irrep(n + 2), real_irrep(n)
    ansatz = structure_ansatz(AnsatzSpec((n + 2, n), {"a": a}, (upper, lower)))
    upper_block = _spin_matrix(upper, alpha, beta)
    lower_block = _spin_matrix(lower, gamma, delta)
    L = QMatrix.block(
        [[upper_block, QMatrix.zeros(n + 2, n)], [QMatrix.zeros(n, n + 2), lower_block]]
    )
    return AdhmData(L, ansatz.M), ansatz.generators


def family_n2n(n: int, a: float, sign: int = 1, lower_sign: int = 1) -> FamilyInstance:
    if not 0.0 < a < _n2n_bound(n):
        raise OutOfRange(f"a = {a} lies outside (0, {_n2n_bound(n)})")
    data, generators = n2n_data(n, a, sign, lower_sign)
    params = {"n": float(n), "a": float(a), "sign": float(sign), "lower_sign": float(lower_sign)}
    return _checked_instance(Family.N2N, params, data, Domain.RAY, generators)


def nn_coefficients(n: int, a: float, sign: int = 1) -> Tuple[float, float]:
    if n < 3 or n % 2 == 0:
        raise UnsupportedSummand(f"n ⊕ n family needs odd n > 1, got {n}")
    if not 0.0 < a <= 2.0 / (n + 1):
        raise OutOfRange(f"a = {a} lies outside (0, {2.0 / (n + 1)}]")
    discriminant = np.sqrt(max(0.0, 16.0 + (n * n - 1.0) ** 2 * a ** 4 - 8.0 * (n * n + 1.0) * a * a))
    beta = np.sqrt((4.0 - a * a * (n * n + 1.0) + sign * discriminant) / (2.0 * n * n))
    alpha = -(beta ** 2 + a * a) / (2.0 * beta)
    return float(alpha), float(beta)


def nn_data(n: int, a: float, sign: int = 1) -> Tuple[AdhmData, ReprTriple]:
    alpha, beta = nn_coefficients(n, a, sign)
    rep = real_irrep(n)
    ansatz = structure_ansatz(AnsatzSpec((n, n), {"a": a}, (rep, rep)))
    L = _spin_matrix(ansatz.generators, alpha, beta)
    return AdhmData(L, ansatz.M), ansatz.generators


def family_nn(n: int, a: float, sign: int = 1) -> FamilyInstance:
    if not 0.0 < a < 2.0 / (n + 1):
        raise OutOfRange(f"a = {a} lies outside (0, {2.0 / (n + 1)})")
    data, generators = nn_data(n, a, sign)
    return _checked_instance(
        Family.NN, {"n": float(n), "a": float(a), "sign": float(sign)}, data, Domain.RAY, generators
    )


def _sp2_row_block() -> List[List[Any]]:
    return [
        [np.sqrt(2.0), Quaternion(x=-1.0 / np.sqrt(2.0)), Quaternion(y=1.0 / np.sqrt(2.0))],
        [0.0, np.sqrt(1.5), Quaternion(z=-np.sqrt(1.5))],
    ]


def sp2_example() -> FamilyInstance:
    scale = 1.0 / np.sqrt(3.0)
    rows = [row + [0.0] for row in _sp2_row_block()]
    L = scale * QMatrix.from_rows(rows)
    i, j, k = UNITS
    M = scale * QMatrix.from_rows(
        [[0.0, 0.0, 0.0, k], [0.0, 0.0, 0.0, j], [0.0, 0.0, 0.0, i], [k, j, i, 0.0]]
    )
    generators = direct_sum(so3_generators(), real_irrep(1))
    return _checked_instance(Family.SP2, {}, AdhmData(L, M), Domain.RAY, generators)


def sp4_example() -> FamilyInstance:
    l = QMatrix.from_rows(_sp2_row_block())
    zero = QMatrix.zeros(2, 3)
    L = 0.5 * QMatrix.block([[l, zero], [zero, l]])
    i, j, k = UNITS
    Y = QMatrix.from_rows([[0.0, i, -j], [-i, 0.0, k], [j, -k, 0.0]])
    M = 0.5 * QMatrix.block([[QMatrix.zeros(3, 3), Y], [-Y, QMatrix.zeros(3, 3)]])
    rep = so3_generators()
    return _checked_instance(Family.SP4, {}, AdhmData(L, M), Domain.RAY, direct_sum(rep, rep))


def mzero_example(k: int = 1) -> FamilyInstance:
    """L = I_k, M = 0; symmetric for every representation, here the trivial one."""
    zero = np.zeros((k, k))
    return _checked_instance(
        Family.MZERO,
        {"k": float(k)},
        AdhmData(QMatrix.identity(k), QMatrix.zeros(k, k)),
        Domain.RAY,
        ReprTriple(zero, zero.copy(), zero.copy(), realness=True),
    )


def explicit_examples(k: int = 1) -> Dict[Family, FamilyInstance]:
    return {Family.SP2: sp2_example(), Family.SP4: sp4_example(), Family.MZERO: mzero_example(k)}


def build_family(family: Family, params: Mapping[str, float]) -> FamilyInstance:
    """Dispatch by family name; missing parameters fall back to the family defaults."""
    values = dict(params)

    def pop_int(name: str, default: int) -> int:
        return int(round(values.pop(name, default)))

    if family == Family.AXIAL:
        A = float(values.pop("A", 0.25))
        instance = family_axial(A, pop_int("s2", 1), pop_int("s3", 1))
    elif family == Family.IRREP4:
        k = pop_int("k", 4)
        instance = family_irrep_div4(k, float(values.pop("kappa", 0.4)), pop_int("sign", 1))
    elif family == Family.N2N:
        n = pop_int("n", 1)
        a = float(values.pop("a", 0.5))
        instance = family_n2n(n, a, pop_int("sign", 1), pop_int("lower_sign", 1))
    elif family == Family.NN:
        n = pop_int("n", 3)
        instance = family_nn(n, float(values.pop("a", 0.3)), pop_int("sign", 1))
    elif family == Family.SP2:
        instance = sp2_example()
    elif family == Family.SP4:
        instance = sp4_example()
    else:
        instance = mzero_example(pop_int("k", 1))
    if values:
        raise UnknownParameter(f"unknown parameters for {family.value}: {sorted(values)}")
    return instance


@dataclass(frozen=True, eq=False)
class StructureRep:
    """Quaternionic generators y_a on ℍⁿ induced by symmetric data."""

    generators: Tuple[QMatrix, QMatrix, QMatrix]
    constraint_residual: float

    def restricted(self) -> ReprTriple:
        return restrict_scalars(self.generators)


def _upsilon(a: int, k: int) -> QMatrix:
    return QMatrix.from_scalar(0.5 * UNITS[a], k)


def induced_structure_rep(
    data: AdhmData, generators: ReprTriple, tol: Optional[float] = None
) -> StructureRep:
    """y_a = (L·L†)⁻¹·L·(υ_a·I + Y_a)·L†"""
    tolerance = resolve_tol(tol)
    residual = spherical_residual(data, generators)
    if residual > tolerance:
        raise NotSymmetric(f"spherical residual {residual:.3e} exceeds {tolerance:.1e}")
    L = data.L
    gram_inverse = inverse(L @ L.dagger())
    induced = tuple(
        gram_inverse @ L @ (_upsilon(a, data.k) + QMatrix.from_real(np.real(generators.generators[a]))) @ L.dagger()
        for a in range(3)
    )
    for a in range(3):
        skew = (induced[a].dagger() + induced[a]).max_abs()
        if skew > tolerance:
            raise PreconditionFailed(f"induced generator {a + 1} is not skew-Hermitian ({skew:.3e})")
        for b in range(3):
            bracket = induced[a] @ induced[b] - induced[b] @ induced[a]
            for c in range(3):
                bracket = bracket - LEVI_CIVITA[a, b, c] * induced[c]
            if bracket.max_abs() > tolerance:
                raise PreconditionFailed("induced generators do not close into sp(1)")
    constraint = float(
        np.sqrt(
            sum(
                (
                    induced[a] @ L
                    - L @ QMatrix.from_real(np.real(generators.generators[a]))
                    - L @ _upsilon(a, data.k)
                ).norm()
                ** 2
                for a in range(3)
            )
        )
    )
    return StructureRep(induced, constraint)  # type: ignore


@dataclass(frozen=True)
class CandidateResult:
    irreps: Tuple[int, ...]
    """Quaternionic irreducibles of W, labelled by the dimension of their complex restriction"""

    solution_dim: int
    min_residual: float
    lldagger_min_eig: float


@dataclass(frozen=True)
class ExclusionResult:
    n: int
    excluded: bool
    candidates: Tuple[CandidateResult, ...]


@dataclass(frozen=True)
class StructureGroupBounds:
    n_min: int
    n_max: int
    weights: Tuple[int, ...]
    exclusions: Tuple[ExclusionResult, ...]

    @property
    def excluded_ranks(self) -> Tuple[int, ...]:
        return tuple(result.n for result in self.exclusions if result.excluded)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "weights": list(self.weights),
            "excluded": list(self.excluded_ranks),
            "exclusions": [
                {
                    "n": result.n,
                    "excluded": result.excluded,
                    "candidates": [
                        {
                            "irreps": list(candidate.irreps),
                            "solution_dim": candidate.solution_dim,
                            "min_residual": candidate.min_residual
                            if np.isfinite(candidate.min_residual)
                            else None,
                            "lldagger_min_eig": candidate.lldagger_min_eig,
                        }
                        for candidate in result.candidates
                    ],
                }
                for result in self.exclusions
            ],
        }


def _quaternionic_cost(i: int) -> int:
    return i // 2 if i % 2 == 0 else i


def _complex_weights(summands: Sequence[int]) -> Tuple[int, ...]:
    """Dimensions j of the complex irreducibles in V ⊗ V₂ for the complexified summands."""
    weights = set()
    for dim in summands:
        if dim % 4 == 2:
            raise UnsupportedSummand(f"summand of dimension {dim} has no real irreducible form")
        m = dim if dim % 2 else dim // 2
        weights.add(m + 1)
        if m > 1:
            weights.add(m - 1)
    return tuple(sorted(weights))


def _quaternionic_partitions(n: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    largest = 2 * n if largest is None else largest
    if n == 0:
        return [()]
    partitions = []
    for i in range(min(largest, 2 * n), 0, -1):
        cost = _quaternionic_cost(i)
        if cost <= n:
            partitions.extend((i,) + rest for rest in _quaternionic_partitions(n - cost, i))
    return partitions


def _block_diagonal(blocks: Sequence[QMatrix]) -> QMatrix:
    size = sum(block.rows for block in blocks)
    result = QMatrix.zeros(size, size)
    components = result.components.copy()
    offset = 0
    for block in blocks:
        components[:, offset : offset + block.rows, offset : offset + block.cols] = block.components
        offset += block.rows
    return QMatrix(components)


def _intertwining_maps(W: Sequence[QMatrix], generators: ReprTriple, n: int, k: int) -> np.ndarray:
    """Real basis of {L : y_a·L − L·Y_a − L·υ_a = 0}, shape (4nk, s)."""
    real_generators = [QMatrix.from_real(np.real(Y)) for Y in generators.generators]
    columns = []
    for index in range(4 * n * k):
        unit = np.zeros(4 * n * k)
        unit[index] = 1.0
        L = QMatrix(unit.reshape(4, n, k))
        images = [
            (W[a] @ L - L @ real_generators[a] - L.right(0.5 * UNITS[a])).components.ravel() for a in range(3)
        ]
        columns.append(np.concatenate(images))
    return null_space(np.column_stack(columns), rcond=resolve_tol())


def rank_exclusions(
    summands: Sequence[int], n: int, seed: int = 0, starts: Optional[int] = None
) -> ExclusionResult:
    """
    Decide whether the ansatz over ``summands`` can carry a structure group of rank n.

    For every quaternionic W of rank n sharing a complex weight with V ⊗ V₂,
    solve the linear intertwining equations for L, then minimise
    ‖L†L − M² − I‖ over the L-solutions and the ansatz parameters.
    """
    starts = starts or get_settings().EXCLUSION_STARTS
    ansatz = structure_ansatz(AnsatzSpec(tuple(summands)))
    k = ansatz.k
    weights = set(_complex_weights(summands))
    rng = np.random.default_rng(seed)
    candidates: List[CandidateResult] = []
    for irreps in _quaternionic_partitions(n):
        if not weights.intersection(irreps):
            continue
        W = [_block_diagonal([quaternionic_irrep(i)[a] for i in irreps]) for a in range(3)]
        basis = _intertwining_maps(W, ansatz.generators, n, k)
        if basis.shape[1] == 0:
            candidates.append(CandidateResult(irreps, 0, float("inf"), 0.0))
            continue
        directions = ansatz.directions
        s = basis.shape[1]

        def assemble(x: np.ndarray) -> Tuple[QMatrix, QMatrix]:
            L = QMatrix((basis @ x[:s]).reshape(4, n, k))
            M = QMatrix.zeros(k, k)
            for weight, direction in zip(x[s:], directions):
                M = M + float(weight) * direction
            return L, M

        def residual(x: np.ndarray) -> np.ndarray:
            L, M = assemble(x)
            return (L.dagger() @ L - M @ M - QMatrix.identity(k)).components.ravel()

        best_norm, best_x = float("inf"), None
        for _ in range(starts):
            fit = least_squares(residual, rng.standard_normal(s + len(directions)))
            norm = float(np.linalg.norm(fit.fun))
            if norm < best_norm:
                best_norm, best_x = norm, fit.x
        L, _ = assemble(best_x)  # type: ignore
        smallest = float(hermitian_eigvalsh(L @ L.dagger()).min())
        logger.debug(f"rank {n} candidate {irreps}: {s} maps, min residual {best_norm:.4f}")
        candidates.append(CandidateResult(irreps, s, best_norm, smallest))

    margin = get_settings().MARGIN
    excluded = all(
        candidate.min_residual > EXCLUSION_THRESHOLD or candidate.lldagger_min_eig <= margin
        for candidate in candidates
    )
    return ExclusionResult(n, excluded, tuple(candidates))


def structure_group_bounds(summands: Sequence[int], seed: int = 0) -> StructureGroupBounds:
    """Bounds n_min ≤ n ≤ k on the rank of Sp(n) for data generated by the summands."""
    weights = _complex_weights(summands)
    n_max = int(sum(summands))
    n_min = max(1, min(_quaternionic_cost(j) for j in weights))
    upper = min(n_max, get_settings().EXCLUSION_MAX_RANK)
    exclusions = tuple(rank_exclusions(summands, n, seed) for n in range(n_min, upper + 1))
    return StructureGroupBounds(n_min, n_max, weights, exclusions)
