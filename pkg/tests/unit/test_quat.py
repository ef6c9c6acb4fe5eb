import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from app.core.errors import DimensionMismatch, KernelDimensionMismatch, NotPureImaginary
from app.core.quat import (
    I,
    J,
    K,
    ONE,
    QMatrix,
    Quaternion,
    complex_embed,
    complex_extract,
    imaginary_parts,
    inverse,
    kernel_basis,
    random_qmatrix,
    random_symplectic,
    unitarity_residual,
)

components = arrays(np.float64, (4,), elements=st.floats(min_value=-10.0, max_value=10.0))


def test_hamilton_units() -> None:
    """
    The imaginary units multiply cyclically and square to minus one
    """
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    for unit in (I, J, K):
        assert unit * unit == -ONE


@settings(deadline=None, max_examples=50)
@given(first=components, second=components)
def test_norm_is_multiplicative(first: np.ndarray, second: np.ndarray) -> None:
    p, q = Quaternion.from_array(first), Quaternion.from_array(second)
    assert (p * q).norm() == pytest.approx(p.norm() * q.norm(), rel=1e-9, abs=1e-9)


@settings(deadline=None, max_examples=50)
@given(first=components, second=components)
def test_conjugate_reverses_products(first: np.ndarray, second: np.ndarray) -> None:
    p, q = Quaternion.from_array(first), Quaternion.from_array(second)
    left = (p * q).conjugate().as_array()
    right = (q.conjugate() * p.conjugate()).as_array()
    assert np.allclose(left, right, atol=1e-9)


def test_rotation_turns_i_into_j() -> None:
    """
    Conjugation by the rotation about the third axis through a right angle maps i to j
    """
    p = Quaternion.rotation([0.0, 0.0, 1.0], 0.5 * np.pi)
    rotated = p * I * p.conjugate()
    assert np.allclose(rotated.as_array(), J.as_array(), atol=1e-15)


def test_numpy_scalars_scale_quaternions() -> None:
    scaled = np.float64(2.0) * I
    assert isinstance(scaled, Quaternion)
    assert scaled == Quaternion(x=2.0)
    matrix = np.float64(3.0) * QMatrix.identity(2)
    assert isinstance(matrix, QMatrix)
    assert np.allclose(matrix.w, 3.0 * np.eye(2))


def test_embedding_is_multiplicative() -> None:
    """
    The complex embedding turns quaternionic products and adjoints into complex ones
    """
    rng = np.random.default_rng(7)
    A = random_qmatrix(3, 4, rng)
    B = random_qmatrix(4, 2, rng)
    assert np.allclose(complex_embed(A @ B), complex_embed(A) @ complex_embed(B), atol=1e-12)
    assert np.allclose(complex_embed(A.dagger()), complex_embed(A).conj().T, atol=1e-12)
    assert complex_extract(complex_embed(A)).allclose(A, 1e-14)


def test_mismatched_product_is_refused() -> None:
    with pytest.raises(DimensionMismatch):
        QMatrix.zeros(2, 3) @ QMatrix.zeros(2, 3)


def test_row_major_serialization() -> None:
    matrix = QMatrix.from_rows([[I, J], [1.0, K]])
    payload = matrix.to_dict()
    assert payload["rows"] == 2 and payload["cols"] == 2
    assert payload["entries"] == [
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]
    assert matrix[1, 1] == K


def test_left_and_right_scalars_differ() -> None:
    matrix = QMatrix.from_rows([[I]])
    assert matrix.left(J)[0, 0] == -K
    assert matrix.right(J)[0, 0] == K


def test_imaginary_parts() -> None:
    rng = np.random.default_rng(3)
    parts = [rng.standard_normal((3, 3)) for _ in range(3)]
    M = QMatrix.from_imaginary(*parts)
    recovered = imaginary_parts(M)
    for original, found in zip(parts, recovered.as_tuple()):
        assert np.array_equal(original, found)
    assert recovered.assemble().allclose(M, 0.0)
    with pytest.raises(NotPureImaginary):
        imaginary_parts(QMatrix.identity(2))


def test_inverse() -> None:
    rng = np.random.default_rng(11)
    A = random_qmatrix(3, 3, rng) + 3.0 * QMatrix.identity(3)
    assert (A @ inverse(A)).allclose(QMatrix.identity(3), 1e-10)
    assert (inverse(A) @ A).allclose(QMatrix.identity(3), 1e-10)


def test_random_symplectic_is_unitary() -> None:
    q = random_symplectic(4, np.random.default_rng(5))
    assert unitarity_residual(q) < 1e-12


@pytest.mark.parametrize("rows,cols", [(1, 3), (2, 5), (3, 4)])
def test_kernel_basis(rows: int, cols: int) -> None:
    """
    A generic rows×cols matrix has a right kernel of quaternionic dimension cols − rows
    """
    A = random_qmatrix(rows, cols, np.random.default_rng(rows * 10 + cols))
    basis = kernel_basis(A, cols - rows)
    assert basis.shape == (cols, cols - rows)
    assert (A @ basis).max_abs() < 1e-10
    assert unitarity_residual(basis) < 1e-10


def test_kernel_dimension_is_checked() -> None:
    A = random_qmatrix(1, 3, np.random.default_rng(0))
    with pytest.raises(KernelDimensionMismatch):
        kernel_basis(A, 1)
