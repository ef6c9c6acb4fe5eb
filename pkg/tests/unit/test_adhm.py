import numpy as np
import pytest

from app.core.adhm import (
    AdhmData,
    Domain,
    delta_gram_eigenvalues,
    domain_points,
    equivariance_q,
    gauge_act,
    mu,
    rotate_act,
    validate,
)
from app.core.errors import (
    DimensionMismatch,
    NotOrthogonal,
    NotUnitary,
    NotUnitQuaternion,
    PreconditionFailed,
    SingularGram,
)
from app.core.fields import BallPoint, delta, higgs
from app.core.observables import spectral_curve
from app.core.quat import (
    QMatrix,
    Quaternion,
    hermitian_eigvalsh,
    random_qmatrix,
    random_symplectic,
    unitarity_residual,
)
from app.core.suirrep import rotation
from app.core.symmetry import axial_family_data, family_axial, mzero_example, sp2_example, sp4_example


def _random_orthogonal(size: int, seed: int) -> np.ndarray:
    Q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((size, size)))
    return Q


def test_shapes_are_checked() -> None:
    with pytest.raises(DimensionMismatch):
        AdhmData(QMatrix.zeros(1, 2), QMatrix.zeros(3, 3))


@pytest.mark.parametrize("build", [sp2_example, sp4_example, lambda: mzero_example(2)])
def test_examples_are_valid(build) -> None:
    instance = build()
    assert instance.report.valid
    assert instance.data.algebraic_residual() < 1e-12


def test_mu() -> None:
    """
    μ is skew-Hermitian, intertwines L and M, and satisfies L·L† − μ² = I
    """
    data = sp2_example().data
    value = mu(data)
    assert (value.dagger() + value).max_abs() < 1e-12
    assert (value @ data.L - data.L @ data.M).max_abs() < 1e-12
    assert (data.L @ data.L.dagger() - value @ value - QMatrix.identity(data.n)).max_abs() < 1e-12
    assert data.mu.allclose(value, 1e-15)


def test_mu_needs_invertible_gram() -> None:
    with pytest.raises(SingularGram):
        mu(axial_family_data(0.0))


def test_mu_checks_the_algebraic_condition() -> None:
    data = AdhmData(2.0 * QMatrix.identity(1), QMatrix.zeros(1, 1))
    with pytest.raises(PreconditionFailed):
        mu(data)


def test_gauge_action_preserves_validity() -> None:
    data = family_axial(0.25).data
    q = random_symplectic(1, np.random.default_rng(1))
    moved = gauge_act(q, _random_orthogonal(2, 2), data)
    assert moved.algebraic_residual() < 1e-12
    assert validate(moved, Domain.AXIAL).valid


def test_gauge_action_checks_its_arguments() -> None:
    data = family_axial(0.25).data
    with pytest.raises(NotUnitary):
        gauge_act(2.0 * QMatrix.identity(1), np.eye(2), data)
    with pytest.raises(NotOrthogonal):
        gauge_act(QMatrix.identity(1), 2.0 * np.eye(2), data)
    with pytest.raises(DimensionMismatch):
        gauge_act(QMatrix.identity(2), np.eye(2), data)


def test_rotation_preserves_the_algebraic_condition() -> None:
    data = sp2_example().data
    rotated = rotate_act(Quaternion.rotation([1.0, 1.0, 0.0], 0.4), data)
    assert rotated.algebraic_residual() < 1e-12
    with pytest.raises(NotUnitQuaternion):
        rotate_act(Quaternion(2.0), data)


@pytest.mark.parametrize("build", [sp2_example, sp4_example])
def test_equivariance_gauge(build) -> None:
    """
    A spatial rotation of spherically symmetric data is undone by a gauge transformation
    """
    instance = build()
    axis, angle = [0.2, -0.5, 1.0], 0.9
    Q = rotation(instance.generators, axis, angle)
    p = Quaternion.rotation(axis, angle)
    q = equivariance_q(p, Q, instance.data)
    assert unitarity_residual(q) < 1e-10
    assert gauge_act(q, Q, instance.data).L.allclose(instance.data.L.conjugate_by(p), 1e-10)


def test_equivariance_needs_symmetric_m() -> None:
    instance = sp2_example()
    with pytest.raises(PreconditionFailed):
        equivariance_q(Quaternion.rotation([0.0, 0.0, 1.0], 0.9), np.eye(4), instance.data)


def test_validation_flags_each_failure() -> None:
    rng = np.random.default_rng(9)
    report = validate(AdhmData(random_qmatrix(1, 2, rng), random_qmatrix(2, 2, rng)), Domain.RAY, 11)
    assert not report.valid
    assert not report.symmetric_ok
    assert not report.imaginary_ok
    assert report.algebraic_residual > 1e-3

    degenerate = validate(axial_family_data(0.0), Domain.AXIAL)
    assert not degenerate.valid
    assert degenerate.lldagger_min_eig == pytest.approx(0.0, abs=1e-14)


def test_validation_report_serializes() -> None:
    report = sp2_example().report
    payload = report.to_dict()
    assert payload["valid"] is True
    assert payload["domain"] == Domain.RAY.value
    assert len(payload["worst_point"]) == 3


@pytest.mark.parametrize("domain,samples", [(Domain.RAY, 7), (Domain.AXIAL, 5), (Domain.BALL, 9)])
def test_domain_points_lie_in_the_closed_ball(domain: Domain, samples: int) -> None:
    points = domain_points(domain, samples)
    assert points.shape[1] == 3
    assert np.all(np.einsum("ij,ij->i", points, points) <= 1.0 + 1e-12)
    if domain == Domain.RAY:
        assert points.shape[0] == samples
        assert np.allclose(points[:, :2], 0.0)
    if domain == Domain.AXIAL:
        assert np.allclose(points[:, 0], 0.0)


def test_delta_gram_eigenvalues_match_direct_evaluation() -> None:
    """
    The batched evaluation agrees with Δ(X)†Δ(X) built point by point, and pairs
    """
    data = sp2_example().data
    points = np.array([[0.1, 0.2, 0.3], [0.0, 0.0, 0.9], [-0.5, 0.4, 0.1]])
    batched = delta_gram_eigenvalues(data, points, chunk=2)
    for row, point in zip(batched, points):
        matrix = delta(data, BallPoint.from_array(point))
        assert np.allclose(row, hermitian_eigvalsh(matrix.dagger() @ matrix), atol=1e-12)
        assert np.allclose(row[0::2], row[1::2], atol=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_gauge_invariants_of_spherical_data(seed: int) -> None:
    """
    |Φ|², the Higgs spectrum, the validity scalars and the spectral curve are
    unchanged by a random (q, Q)
    """
    data = sp2_example().data
    rng = np.random.default_rng(seed)
    moved = gauge_act(random_symplectic(data.n, rng), _random_orthogonal(data.k, 100 + seed), data)
    X = BallPoint.from_array(0.8 * rng.random(3) - 0.4)

    before, after = higgs(data, X), higgs(moved, X)
    assert after.higgs_norm_sq == pytest.approx(before.higgs_norm_sq, abs=1e-12)
    assert np.allclose(after.higgs_eigenvalues, before.higgs_eigenvalues, atol=1e-12)

    report, moved_report = validate(data, Domain.RAY, 101), validate(moved, Domain.RAY, 101)
    assert moved_report.valid
    assert moved_report.algebraic_residual < 1e-12
    assert moved_report.lldagger_min_eig == pytest.approx(report.lldagger_min_eig, abs=1e-12)
    assert moved_report.delta_min_eig_over_domain == pytest.approx(report.delta_min_eig_over_domain, abs=1e-12)

    assert np.allclose(spectral_curve(moved).coefficients, spectral_curve(data).coefficients, atol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_rotation_covariance(seed: int) -> None:
    """
    The data at X and the rotated data at pXp̄ have the same Δ†Δ spectrum and |Φ|²
    """
    rng = np.random.default_rng(seed)
    data = family_axial(0.25).data
    p = Quaternion.rotation(rng.standard_normal(3), float(rng.uniform(0.2, 3.0)))
    rotated = rotate_act(p, data)
    points = 0.8 * rng.random((4, 3)) - 0.4
    moved = np.array([(p * Quaternion.imaginary(X) * p.conjugate()).as_array()[1:] for X in points])

    assert np.allclose(delta_gram_eigenvalues(rotated, moved), delta_gram_eigenvalues(data, points), atol=1e-12)
    for X, Y in zip(points, moved):
        expected = higgs(data, BallPoint.from_array(X)).higgs_norm_sq
        assert higgs(rotated, BallPoint.from_array(Y)).higgs_norm_sq == pytest.approx(expected, abs=1e-12)
