import numpy as np
import pytest

from app.core.errors import OutOfRange, StencilOutsideBall
from app.core.fields import (
    BallPoint,
    connection_and_bogomolny,
    energy_density,
    higgs,
    higgs_boundary_eigenvalues,
    kernel_frame,
    delta,
    ray_profile,
)
from app.core.profiles import (
    mzero_higgs_norm,
    sp2_energy_density,
    sp2_higgs_norm_sq,
    sp4_energy_density,
    sp4_higgs_norm_sq,
)
from app.core.quat import unitarity_residual
from app.core.symmetry import family_axial, mzero_example, sp2_example, sp4_example

RADII = [0.1, 0.3, 0.5, 0.7, 0.9]


def test_ball_points() -> None:
    point = BallPoint.on_ray([0.0, 3.0, 4.0], 0.5)
    assert point.R == pytest.approx(0.5)
    assert np.allclose(point.as_array(), [0.0, 0.3, 0.4])
    with pytest.raises(OutOfRange):
        BallPoint(0.6, 0.6, 0.6)
    with pytest.raises(OutOfRange):
        point.shifted(2, 0.7)


def test_kernel_frame_is_orthonormal() -> None:
    data = sp2_example().data
    X = BallPoint(0.1, -0.2, 0.3)
    frame = kernel_frame(data, X)
    assert frame.shape == (data.n + data.k, data.n)
    assert unitarity_residual(frame) < 1e-10
    assert (delta(data, X).dagger() @ frame).max_abs() < 1e-10


@pytest.mark.parametrize("k", [1, 2, 3])
def test_trivial_data_higgs_norm(k: int) -> None:
    """
    With M = 0 the Higgs field has |Φ| = R/(1 + R²) everywhere in the ball
    """
    data = mzero_example(k).data
    rng = np.random.default_rng(k)
    directions = rng.standard_normal((200, 3))
    radii = 0.99 * rng.random(200) ** (1.0 / 3.0)
    for direction, r in zip(directions, radii):
        sample = higgs(data, BallPoint.on_ray(direction, r))
        assert np.sqrt(sample.higgs_norm_sq) == pytest.approx(mzero_higgs_norm(r), abs=1e-10)


@pytest.mark.parametrize(
    "build,reference", [(sp2_example, sp2_higgs_norm_sq), (sp4_example, sp4_higgs_norm_sq)]
)
def test_higgs_norm_matches_closed_form(build, reference) -> None:
    data = build().data
    for r in RADII:
        sample = higgs(data, BallPoint.on_ray([0.0, 0.0, 1.0], r))
        assert sample.higgs_norm_sq == pytest.approx(reference(r), rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("direction", [[1.0, 0.0, 0.0], [0.3, -0.4, 0.5]])
def test_spherical_higgs_norm_is_isotropic(direction) -> None:
    data = sp2_example().data
    sample = higgs(data, BallPoint.on_ray(direction, 0.6))
    assert sample.higgs_norm_sq == pytest.approx(sp2_higgs_norm_sq(0.6), rel=1e-8)


@pytest.mark.parametrize(
    "build,reference", [(sp2_example, sp2_energy_density), (sp4_example, sp4_energy_density)]
)
def test_energy_density_matches_closed_form(build, reference) -> None:
    """
    The finite difference Laplacian of |Φ|² reproduces the energy density profile
    """
    data = build().data
    for r in (0.2, 0.5, 0.7):
        value = energy_density(data, BallPoint.on_ray([0.0, 0.0, 1.0], r))
        assert value == pytest.approx(reference(r), rel=1e-4)


def test_profiles_approach_the_boundary_value() -> None:
    for profile in (sp2_higgs_norm_sq, sp4_higgs_norm_sq):
        assert profile(1.0) == pytest.approx(0.25)
        assert profile(0.0) == pytest.approx(0.0)


def test_higgs_spectrum_is_imaginary_and_paired() -> None:
    sample = higgs(sp4_example().data, BallPoint(0.2, 0.1, -0.3))
    spectrum = sample.higgs_eigenvalues
    assert np.allclose(spectrum.real, 0.0)
    assert len(spectrum) == 8
    assert np.allclose(np.sort(spectrum.imag), -np.sort(spectrum.imag)[::-1], atol=1e-10)
    assert sample.energy_density is None


def test_stencil_must_fit_inside_the_ball() -> None:
    data = sp2_example().data
    with pytest.raises(StencilOutsideBall):
        energy_density(data, BallPoint(0.0, 0.0, 0.99), h=0.01)


def test_ray_profile_omits_energy_near_the_boundary() -> None:
    samples = ray_profile(sp2_example().data, [0.5, 0.999])
    assert samples[0].energy_density is not None
    assert samples[1].energy_density is None
    assert samples[1].to_dict()["energy_density"] is None


@pytest.mark.parametrize("build,rank", [(sp2_example, 2), (sp4_example, 4)])
def test_boundary_eigenvalues(build, rank: int) -> None:
    """
    Φ tends to ±i/2, each with multiplicity n, at the boundary
    """
    limit = higgs_boundary_eigenvalues(build().data, [0.0, 0.6, 0.8], [0.997, 0.998, 0.999])
    groups = limit.multiplicities(tol=1e-4)
    assert [count for _, count in groups] == [rank, rank]
    assert groups[0][0] == pytest.approx(-0.5j, abs=1e-4)
    assert groups[1][0] == pytest.approx(0.5j, abs=1e-4)


@pytest.mark.parametrize(
    "data,point",
    [
        (sp2_example().data, BallPoint(0.1, 0.2, 0.2)),
        (family_axial(0.25).data, BallPoint(0.0, 0.3, -0.2)),
    ],
)
def test_bogomolny_equation(data, point: BallPoint) -> None:
    assert connection_and_bogomolny(data, point) < 1e-4


@pytest.mark.parametrize("build", [lambda: mzero_example(1), sp2_example])
@pytest.mark.parametrize("point", [(0.0, 0.0, 0.3), (0.2, -0.1, 0.4), (-0.3, 0.25, 0.1)])
def test_bogomolny_residual_converges_quadratically(build, point) -> None:
    """
    Halving the stencil step divides the residual by four
    """
    data = build().data
    X = BallPoint(*point)
    residuals = [connection_and_bogomolny(data, X, h) for h in (4e-3, 2e-3, 1e-3)]
    assert residuals[-1] <= 1e-3
    for coarse, fine in zip(residuals, residuals[1:]):
        assert coarse / fine == pytest.approx(4.0, rel=0.1)
