import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import block_diag

from app.core.errors import InvalidRepresentation, NoRealForm, NotIrreducible
from app.core.quat import complex_embed
from app.core.suirrep import (
    LEVI_CIVITA,
    ReprTriple,
    commutant_basis,
    complex_irrep,
    decompose,
    direct_sum,
    intertwiner_space,
    ladder,
    left_multiplication_generators,
    quaternionic_irrep,
    real_irrep,
    restrict_scalars,
    rotation,
    so3_generators,
)


def _commutes(matrix: np.ndarray, rep: ReprTriple) -> bool:
    return all(np.allclose(Y @ matrix, matrix @ Y, atol=1e-10) for Y in rep.generators)


@settings(deadline=None, max_examples=12)
@given(n=st.integers(min_value=1, max_value=12))
def test_complex_irrep_relations(n: int) -> None:
    """
    [Y_a, Y_b] = ε_abc Y_c with skew-Hermitian generators and Casimir (n² − 1)/4
    """
    rep = complex_irrep(n)
    assert rep.commutator_residual() < 1e-12
    for Y in rep.generators:
        assert np.allclose(Y.conj().T, -Y)
    assert np.allclose(rep.casimir(), (n * n - 1) / 4.0 * np.eye(n))


@pytest.mark.parametrize("n", [1, 3, 4, 5, 7, 8, 9, 12])
def test_real_irrep(n: int) -> None:
    rep = real_irrep(n)
    assert rep.realness
    assert all(not np.iscomplexobj(Y) for Y in rep.generators)
    assert rep.commutator_residual() < 1e-10
    for Y in rep.generators:
        assert np.allclose(Y.T, -Y, atol=1e-12)
    expected = (n,) if n % 2 else (n // 2, n // 2)
    assert decompose(rep).summands == expected


@pytest.mark.parametrize("n", [2, 6, 10])
def test_real_irrep_needs_real_type(n: int) -> None:
    with pytest.raises(NoRealForm):
        real_irrep(n)


@pytest.mark.parametrize("n", [4, 8])
def test_structure_unitary(n: int) -> None:
    """
    The real form of dimension 4m is unitarily the doubled complex irreducible of dimension 2m
    """
    rep = real_irrep(n)
    U = rep.structure
    assert np.allclose(U.conj().T @ U, np.eye(n), atol=1e-12)
    for Y, y in zip(rep.generators, complex_irrep(n // 2).generators):
        assert np.allclose(U.conj().T @ block_diag(y, y) @ U, Y, atol=1e-12)


def test_so3_and_left_multiplication() -> None:
    assert so3_generators().commutator_residual() < 1e-15
    assert decompose(so3_generators()).summands == (3,)
    quaternions = left_multiplication_generators()
    assert quaternions.commutator_residual() < 1e-15
    assert decompose(quaternions).summands == (2, 2)


def test_decompose_direct_sum() -> None:
    rep = direct_sum(complex_irrep(3), complex_irrep(1), complex_irrep(4), complex_irrep(3))
    decomposition = decompose(rep)
    assert decomposition.summands == (4, 3, 3, 1)
    assert decomposition.multiplicities() == {4: 1, 3: 2, 1: 1}
    assert decomposition.dim == 11


def test_decompose_conjugated_representation() -> None:
    """
    Decomposition does not depend on the basis
    """
    rng = np.random.default_rng(2)
    Q, _ = np.linalg.qr(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
    rep = direct_sum(complex_irrep(3), complex_irrep(2)).conjugated(Q)
    assert decompose(rep).summands == (3, 2)


def test_decompose_rejects_non_representations() -> None:
    rng = np.random.default_rng(4)
    matrices = [rng.standard_normal((3, 3)) for _ in range(3)]
    with pytest.raises(InvalidRepresentation):
        decompose(ReprTriple(*(M - M.T for M in matrices)))


def test_ladder() -> None:
    rep = complex_irrep(4)
    steps = ladder(rep)
    weights = np.real(np.diag(1j * rep.Y1))
    assert np.allclose(1j * rep.Y1 @ steps.highest_weight, weights.max() * steps.highest_weight)
    assert np.allclose(steps.raising @ steps.highest_weight, 0.0)
    with pytest.raises(NotIrreducible):
        ladder(direct_sum(complex_irrep(3), complex_irrep(3)))


def test_commutants() -> None:
    """
    Odd real irreducibles have trivial commutant; those of dimension 4m carry a copy of ℍ
    """
    assert len(commutant_basis(real_irrep(5))) == 1
    four = real_irrep(4)
    basis = commutant_basis(four)
    assert len(basis) == 4
    for C in basis:
        assert not np.iscomplexobj(C)
        assert _commutes(C, four)
    for C in basis[1:]:
        assert np.allclose(C @ C, -np.eye(4), atol=1e-12)
    doubled = direct_sum(so3_generators(), so3_generators())
    assert len(commutant_basis(doubled)) == 4


def test_intertwiner_space_between_inequivalent_irreducibles() -> None:
    assert intertwiner_space(complex_irrep(3).generators, complex_irrep(2).generators) == []
    assert len(intertwiner_space(complex_irrep(3).generators, complex_irrep(3).generators)) == 1


@pytest.mark.parametrize("i,expected", [(1, (1, 1)), (2, (2,)), (3, (3, 3)), (4, (4,)), (6, (6,))])
def test_quaternionic_irreducibles(i: int, expected: tuple) -> None:
    generators = quaternionic_irrep(i)
    for a in range(3):
        assert (generators[a].dagger() + generators[a]).max_abs() < 1e-12
        for b in range(3):
            bracket = generators[a] @ generators[b] - generators[b] @ generators[a]
            for c in range(3):
                bracket = bracket - LEVI_CIVITA[a, b, c] * generators[c]
            assert bracket.max_abs() < 1e-10
    rep = restrict_scalars(generators)
    assert np.allclose(rep.Y1, complex_embed(generators[0]))
    assert decompose(rep).summands == expected


def test_full_turn_of_spinor_is_minus_identity() -> None:
    assert np.allclose(rotation(complex_irrep(2), [0.0, 0.0, 1.0], 2 * np.pi), -np.eye(2), atol=1e-12)
    assert np.allclose(rotation(so3_generators(), [1.0, 2.0, 2.0], 2 * np.pi), np.eye(3), atol=1e-12)


def test_rotation_is_orthogonal_for_real_representations() -> None:
    R = rotation(real_irrep(5), [0.3, -0.4, 1.0], 1.1)
    assert not np.iscomplexobj(R)
    assert np.allclose(R.T @ R, np.eye(5), atol=1e-12)


def test_representation_serialization() -> None:
    rep = real_irrep(3)
    payload = rep.to_dict()
    assert payload["dim"] == 3 and payload["real"]
    restored = ReprTriple.from_dict(payload)
    assert restored.realness
    for original, found in zip(rep.generators, restored.generators):
        assert np.array_equal(original, found)
