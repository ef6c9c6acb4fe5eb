import numpy as np
import pytest

from app.core.errors import NotPureImaginary, PreconditionFailed, UnsupportedStructureGroup
from app.core.adhm import AdhmData
from app.core.observables import rational_map, spectral_curve, spectral_polynomial
from app.core.profiles import axial_rational_map, axial_spectral_coefficients
from app.core.quat import QMatrix
from app.core.symmetry import family_axial, mzero_example, sp2_example, sp4_example


def _normalized(coefficients: np.ndarray) -> np.ndarray:
    magnitudes = np.abs(coefficients).ravel()
    leading = int(np.argmax(magnitudes >= magnitudes.max() * (1.0 - 1e-9)))
    return coefficients / coefficients.ravel()[leading]


@pytest.mark.parametrize("A", [0.1, 0.25, 0.4, 0.5])
def test_axial_spectral_curve(A: float) -> None:
    """
    The interpolated curve of the axial family matches its closed form
    """
    curve = spectral_curve(family_axial(A).data)
    assert curve.coefficients.shape == (3, 3)
    assert np.allclose(curve.coefficients, _normalized(axial_spectral_coefficients(A)), atol=1e-10)


def test_spectral_curve_does_not_depend_on_orientation_sign() -> None:
    first = spectral_curve(family_axial(0.3, 1).data)
    second = spectral_curve(family_axial(0.3, -1).data)
    assert np.allclose(first.coefficients, second.coefficients, atol=1e-10)


@pytest.mark.parametrize("build", [sp2_example, sp4_example])
def test_curve_reproduces_the_determinant(build) -> None:
    data = build().data
    curve = spectral_curve(data)
    rng = np.random.default_rng(17)
    for eta, zeta in rng.standard_normal((5, 2)) + 1j * rng.standard_normal((5, 2)):
        expected = spectral_polynomial(data, eta, zeta)
        assert curve.scale * curve.evaluate(eta, zeta) == pytest.approx(expected, rel=1e-8, abs=1e-8)
    assert np.abs(curve.coefficients).max() == pytest.approx(1.0)


def test_spectral_curve_needs_imaginary_m() -> None:
    data = AdhmData(QMatrix.identity(1), QMatrix.identity(1))
    with pytest.raises(NotPureImaginary):
        spectral_curve(data)


@pytest.mark.parametrize("A", [0.15, 0.25, 0.45, 0.5])
def test_axial_rational_map(A: float) -> None:
    mapping = rational_map(family_axial(A).data)
    assert mapping.rank == 1
    points = [0.3 + 0.4j, -1.2 + 0.1j, 2.0j]
    assert np.allclose(mapping.evaluate(points), axial_rational_map(A, np.array(points)), rtol=1e-8)


def test_rational_map_of_trivial_data() -> None:
    mapping = rational_map(mzero_example(1).data)
    assert mapping.eigenvalue == pytest.approx(1.0)
    assert mapping(2.0) == pytest.approx(0.5)
    assert mapping.to_dict()["rank"] == 1


def test_rational_map_needs_sp1() -> None:
    with pytest.raises(UnsupportedStructureGroup):
        rational_map(sp2_example().data)


def test_rational_map_needs_positive_denominator() -> None:
    """
    M₃ = I makes I − M₃ singular
    """
    M = QMatrix.from_imaginary(np.zeros((1, 1)), np.zeros((1, 1)), np.eye(1))
    data = AdhmData(np.sqrt(2.0) * QMatrix.identity(1), M)
    with pytest.raises(PreconditionFailed):
        rational_map(data)
