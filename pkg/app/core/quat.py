"""
Quaternionic scalars and dense quaternionic matrices.

Matrices are stored as four real component arrays ``(w, x, y, z)`` so that all
products reduce to real matrix products. Quaternionic scalars act on the right
of column vectors, which makes kernels right modules; the complex embedding
``q = a + b·j ↦ [[a, b], [−b̄, ā]]`` is used for every spectral computation.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import null_space

from .errors import (
    DimensionMismatch,
    KernelDimensionMismatch,
    NotPureImaginary,
    RankDeficient,
)
from .settings import resolve_tol

__all__ = [
    "Quaternion",
    "QMatrix",
    "ImaginaryParts",
    "ONE",
    "I",
    "J",
    "K",
    "UNITS",
    "dagger",
    "mul",
    "imaginary_parts",
    "complex_embed",
    "complex_extract",
    "quaternionic_orthonormalize",
    "inverse",
    "hermitian_eigvalsh",
    "kernel_basis",
    "unitarity_residual",
    "random_qmatrix",
    "random_symplectic",
]

logger = getLogger(__name__)

Scalar = Union[float, int]


def _hamilton(a: Sequence[Any], b: Sequence[Any], product: Callable) -> np.ndarray:
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.stack(
        [
            product(aw, bw) - product(ax, bx) - product(ay, by) - product(az, bz),
            product(aw, bx) + product(ax, bw) + product(ay, bz) - product(az, by),
            product(aw, by) - product(ax, bz) + product(ay, bw) + product(az, bx),
            product(aw, bz) + product(ax, by) - product(ay, bx) + product(az, bw),
        ]
    )


@dataclass(frozen=True)
class Quaternion:
    """The quaternion w + xi + yj + zk."""

    __array_ufunc__ = None

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "Quaternion":
        w, x, y, z = (float(value) for value in values)
        return cls(w, x, y, z)

    @classmethod
    def imaginary(cls, vector: Sequence[float]) -> "Quaternion":
        """X₁i + X₂j + X₃k"""
        x, y, z = (float(value) for value in vector)
        return cls(0.0, x, y, z)

    @classmethod
    def rotation(cls, axis: Sequence[float], angle: float) -> "Quaternion":
        """
        exp(angle·υ) for the unit axis υ = (a₁i + a₂j + a₃k)/2.

        Conjugation by the result rotates imaginary quaternions by ``angle``
        about ``axis``.
        """
        direction = np.asarray(axis, dtype=float)
        direction = direction / np.linalg.norm(direction)
        half = 0.5 * angle
        return cls(np.cos(half), *(np.sin(half) * direction))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def is_pure_imaginary(self, tol: Optional[float] = None) -> bool:
        return abs(self.w) <= resolve_tol(tol)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.as_array() + other.as_array())

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.as_array() - other.as_array())

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_array(-self.as_array())

    def __mul__(self, other: Union["Quaternion", Scalar]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion.from_array(
                _hamilton(self.as_array(), other.as_array(), np.multiply)
            )
        return Quaternion.from_array(self.as_array() * float(other))

    def __rmul__(self, other: Scalar) -> "Quaternion":
        return Quaternion.from_array(self.as_array() * float(other))


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
UNITS = (I, J, K)


@dataclass(frozen=True, eq=False)
class QMatrix:
    """
    A dense rows×cols matrix over the quaternions.

    ``components`` has shape (4, rows, cols) holding the w, x, y, z parts.
    """

    __array_ufunc__ = None

    components: np.ndarray

    def __post_init__(self) -> None:
        components = np.array(self.components, dtype=float)
        if components.ndim != 3 or components.shape[0] != 4:
            raise DimensionMismatch(
                f"expected components of shape (4, rows, cols), got {components.shape}"
            )
        object.__setattr__(self, "components", components)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(np.zeros((4, rows, cols)))

    @classmethod
    def identity(cls, size: int) -> "QMatrix":
        return cls.from_real(np.eye(size))

    @classmethod
    def from_parts(
        cls,
        w: Optional[np.ndarray] = None,
        x: Optional[np.ndarray] = None,
        y: Optional[np.ndarray] = None,
        z: Optional[np.ndarray] = None,
    ) -> "QMatrix":
        parts = [part for part in (w, x, y, z) if part is not None]
        if not parts:
            raise DimensionMismatch("at least one component is required")
        shape = np.shape(parts[0])
        return cls(
            np.stack(
                [np.zeros(shape) if part is None else np.asarray(part, dtype=float) for part in (w, x, y, z)]
            )
        )

    @classmethod
    def from_real(cls, matrix: np.ndarray) -> "QMatrix":
        return cls.from_parts(w=np.atleast_2d(np.asarray(matrix, dtype=float)))

    @classmethod
    def from_imaginary(cls, m1: np.ndarray, m2: np.ndarray, m3: np.ndarray) -> "QMatrix":
        """M₁i + M₂j + M₃k"""
        return cls.from_parts(x=m1, y=m2, z=m3)

    @classmethod
    def from_scalar(cls, q: Quaternion, size: int) -> "QMatrix":
        eye = np.eye(size)
        return cls(np.stack([value * eye for value in q.as_array()]))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[Quaternion, Scalar]]]) -> "QMatrix":
        entries = [
            [entry.as_array() if isinstance(entry, Quaternion) else [float(entry), 0.0, 0.0, 0.0] for entry in row]
            for row in rows
        ]
        return cls(np.asarray(entries, dtype=float).transpose(2, 0, 1))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["QMatrix"]]) -> "QMatrix":
        return cls(
            np.stack(
                [np.block([[entry.components[c] for entry in row] for row in blocks]) for c in range(4)]
            )
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QMatrix":
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = np.asarray(data["entries"], dtype=float)
        if entries.shape != (rows * cols, 4):
            raise DimensionMismatch(
                f"expected {rows * cols} entries of 4 components, got {entries.shape}"
            )
        return cls(entries.reshape(rows, cols, 4).transpose(2, 0, 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.components.transpose(1, 2, 0).reshape(-1, 4).tolist(),
        }

    @property
    def rows(self) -> int:
        return int(self.components.shape[1])

    @property
    def cols(self) -> int:
        return int(self.components.shape[2])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def w(self) -> np.ndarray:
        return self.components[0]

    @property
    def x(self) -> np.ndarray:
        return self.components[1]

    @property
    def y(self) -> np.ndarray:
        return self.components[2]

    @property
    def z(self) -> np.ndarray:
        return self.components[3]

    def __getitem__(self, index: Tuple[int, int]) -> Quaternion:
        row, col = index
        return Quaternion.from_array(self.components[:, row, col])

    def submatrix(self, rows: slice, cols: slice) -> "QMatrix":
        return QMatrix(self.components[:, rows, cols])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return mul(self, other)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.components + other.components)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.components - other.components)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self.components)

    def __mul__(self, factor: Scalar) -> "QMatrix":
        return QMatrix(self.components * float(factor))

    def __rmul__(self, factor: Scalar) -> "QMatrix":
        return QMatrix(self.components * float(factor))

    def left(self, q: Quaternion) -> "QMatrix":
        """Entrywise q·A."""
        return QMatrix(_hamilton(q.as_array(), self.components, np.multiply))

    def right(self, q: Quaternion) -> "QMatrix":
        """Entrywise A·q."""
        return QMatrix(_hamilton(self.components, q.as_array(), np.multiply))

    def conjugate_by(self, p: Quaternion) -> "QMatrix":
        """Entrywise p·A·p̄."""
        return self.left(p).right(p.conjugate())

    def transpose(self) -> "QMatrix":
        return QMatrix(self.components.transpose(0, 2, 1))

    def conjugate(self) -> "QMatrix":
        return QMatrix(self.components * np.array([1.0, -1.0, -1.0, -1.0])[:, None, None])

    def dagger(self) -> "QMatrix":
        return self.conjugate().transpose()

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.components))

    def max_abs(self) -> float:
        return float(np.abs(self.components).max(initial=0.0))

    def allclose(self, other: "QMatrix", tol: Optional[float] = None) -> bool:
        return self.shape == other.shape and (self - other).max_abs() <= resolve_tol(tol)

    def _check_same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")


@dataclass(frozen=True, eq=False)
class ImaginaryParts:
    """The real component matrices of M = M₁i + M₂j + M₃k."""

    M1: np.ndarray
    M2: np.ndarray
    M3: np.ndarray

    def as_tuple(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.M1, self.M2, self.M3)

    def assemble(self) -> QMatrix:
        return QMatrix.from_imaginary(self.M1, self.M2, self.M3)


def dagger(A: QMatrix) -> QMatrix:
    return A.dagger()


def mul(A: QMatrix, B: QMatrix) -> QMatrix:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return QMatrix(_hamilton(A.components, B.components, np.matmul))


def imaginary_parts(M: QMatrix, tol: Optional[float] = None) -> ImaginaryParts:
    real_part = float(np.abs(M.w).max(initial=0.0))
    if real_part > resolve_tol(tol):
        raise NotPureImaginary(f"real part of size {real_part:.3e} exceeds tolerance")
    return ImaginaryParts(M.x.copy(), M.y.copy(), M.z.copy())


def complex_embed(A: QMatrix) -> np.ndarray:
    a = A.w + 1j * A.x
    b = A.y + 1j * A.z
    return np.block([[a, b], [-b.conj(), a.conj()]])


def complex_extract(C: np.ndarray) -> QMatrix:
    """Inverse of complex_embed, projecting onto the embedded image."""
    rows, cols = C.shape
    if rows % 2 or cols % 2:
        raise DimensionMismatch(f"embedded matrices have even shape, got {C.shape}")
    m, n = rows // 2, cols // 2
    a = 0.5 * (C[:m, :n] + C[m:, n:].conj())
    b = 0.5 * (C[:m, n:] - C[m:, :n].conj())
    return QMatrix(np.stack([a.real, a.imag, b.real, b.imag]))


def _structure(vector: np.ndarray) -> np.ndarray:
    """The antiunitary map (x; y) ↦ (−ȳ; x̄) commuting with every embedded matrix."""
    half = vector.shape[0] // 2
    return np.concatenate([-vector[half:].conj(), vector[:half].conj()])


def _columns_to_qmatrix(columns: List[np.ndarray]) -> QMatrix:
    stacked = np.column_stack(columns)
    half = stacked.shape[0] // 2
    upper = stacked[:half]
    lower = -stacked[half:].conj()
    return QMatrix(np.stack([upper.real, upper.imag, lower.real, lower.imag]))


def quaternionic_orthonormalize(V: QMatrix, tol: Optional[float] = None) -> QMatrix:
    """
    Symmetric orthonormalization W = V·(V†V)^(-1/2).

    The right ℍ-span of the columns is preserved and W†W = I.
    """
    gram = complex_embed(V.dagger() @ V)
    values, vectors = np.linalg.eigh(gram)
    if values.min() <= resolve_tol(tol):
        raise RankDeficient(f"gram matrix has eigenvalue {values.min():.3e}")
    inverse_root = (vectors * values ** -0.5) @ vectors.conj().T
    return V @ complex_extract(inverse_root)


def inverse(A: QMatrix) -> QMatrix:
    if A.rows != A.cols:
        raise DimensionMismatch(f"cannot invert a {A.shape} matrix")
    try:
        return complex_extract(np.linalg.inv(complex_embed(A)))
    except np.linalg.LinAlgError as error:
        raise RankDeficient("matrix is singular") from error


def hermitian_eigvalsh(A: QMatrix) -> np.ndarray:
    """Eigenvalues of the embedding of a quaternionic Hermitian matrix, each appearing twice."""
    return np.linalg.eigvalsh(complex_embed(A))


def unitarity_residual(A: QMatrix) -> float:
    return (A.dagger() @ A - QMatrix.identity(A.cols)).max_abs()


def kernel_basis(A: QMatrix, dimension: int, tol: Optional[float] = None) -> QMatrix:
    """
    Orthonormal quaternionic basis of {u : A·u = 0}, returned as columns.

    The complex null space of the embedding is paired with its image under the
    quaternionic structure, one greedy pivot at a time.
    """
    tolerance = resolve_tol(tol)
    basis = null_space(complex_embed(A), rcond=tolerance)
    if basis.shape[1] != 2 * dimension:
        raise KernelDimensionMismatch(
            f"expected a kernel of complex dimension {2 * dimension}, found {basis.shape[1]}"
        )
    chosen = np.zeros((basis.shape[0], 0), dtype=complex)
    columns: List[np.ndarray] = []
    for _ in range(dimension):
        residual = basis - chosen @ (chosen.conj().T @ basis)
        norms = np.linalg.norm(residual, axis=0)
        pivot = residual[:, int(np.argmax(norms))] / norms.max()
        chosen = np.column_stack([chosen, pivot, _structure(pivot)])
        columns.append(pivot)
    logger.debug(f"kernel of {A.shape} matrix has quaternionic dimension {dimension}")
    return quaternionic_orthonormalize(_columns_to_qmatrix(columns), tol)


def random_qmatrix(rows: int, cols: int, rng: np.random.Generator) -> QMatrix:
    return QMatrix(rng.standard_normal((4, rows, cols)))


def random_symplectic(size: int, rng: np.random.Generator) -> QMatrix:
    """A random element of Sp(size)."""
    return quaternionic_orthonormalize(random_qmatrix(size, size, rng))
