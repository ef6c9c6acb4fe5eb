import numpy as np
import pytest

from app.core.bweb import (
    IDENTITY_NAMES,
    compute_B,
    realize_B_real,
    triple_space_dimension,
    verify_identities,
)
from app.core.errors import DimensionMismatch, NoRealForm
from app.core.suirrep import complex_irrep, real_irrep, so3_generators


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8])
def test_complex_triple_satisfies_identities(n: int) -> None:
    """
    All seven identities hold in the standard complex basis
    """
    report = verify_identities(compute_B(n))
    assert len(report.residuals) == len(IDENTITY_NAMES)
    assert report.max_residual <= (1e-12 if n <= 6 else 1e-10)
    assert report.holds(tol=1e-10)
    assert not report.holds(tol=-1.0)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_phase_rotates_the_triple(n: int) -> None:
    base = compute_B(n)
    rotated = compute_B(n, 0.7)
    for first, second in zip(base.matrices, rotated.matrices):
        assert np.allclose(second, np.exp(0.7j) * first, atol=1e-12)
    assert verify_identities(rotated).max_residual < 1e-10


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_real_triple(n: int) -> None:
    triple = realize_B_real(n)
    assert triple.is_real
    assert verify_identities(triple).max_residual < 1e-9
    pivot = np.unravel_index(int(np.argmax(np.abs(triple.B1))), triple.B1.shape)
    assert triple.B1[pivot] < 0


def test_real_triple_against_so3() -> None:
    """
    With the so(3) generators on ℝ³ the triple is −(e₃, e₂, e₁)
    """
    triple = realize_B_real(1, upper=so3_generators(), lower=real_irrep(1))
    expected = -np.eye(3)[:, ::-1]
    for column, B in enumerate(triple.matrices):
        assert np.allclose(B[:, 0], expected[:, column], atol=1e-10)


def test_real_triple_needs_odd_dimension() -> None:
    with pytest.raises(NoRealForm):
        realize_B_real(2)


def test_representation_dimensions_are_checked() -> None:
    with pytest.raises(DimensionMismatch):
        compute_B(3, upper=complex_irrep(4))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triple_is_unique_up_to_scale(n: int) -> None:
    assert triple_space_dimension(complex_irrep(n + 2), complex_irrep(n)) == 1


def test_scaled_triple_breaks_normalization() -> None:
    triple = compute_B(3).scaled(2.0)
    residuals = dict(zip(IDENTITY_NAMES, verify_identities(triple).residuals))
    assert residuals["equivariance"] < 1e-10
    assert residuals["upper_gram"] > 1.0
