import numpy as np
import pytest
from crgate.functions.hilbert import (
    annihilation_op,
    apply,
    basis_state,
    build_space,
    collective_ops,
    compose,
    creation_op,
    identity_op,
    inner_product,
    number_op,
    transition_op,
)
from crgate.models.KetState import KetState
from crgate.models.LinearOperator import LinearOperator


@pytest.mark.parametrize("n_systems, photon_cutoff, dim", [(2, 2, 18), (6, 3, 2187), (3, 3, 81)])
def test_build_space_dimension(n_systems: int, photon_cutoff: int, dim: int) -> None:
    assert build_space(n_systems, photon_cutoff).dim == dim


@pytest.mark.parametrize("n_systems, photon_cutoff", [(1, 2), (2, 1), (0, 3)])
def test_build_space_rejects(n_systems: int, photon_cutoff: int) -> None:
    with pytest.raises(ValueError):
        build_space(n_systems, photon_cutoff)


def test_index_map_is_bijective() -> None:
    space = build_space(3, 3)
    decoded = {space.decode(index) for index in range(space.dim)}
    assert len(decoded) == space.dim
    for index in range(space.dim):
        digits, photons = space.decode(index)
        assert space.index(digits, photons) == index


def test_label_format() -> None:
    space = build_space(4, 3)
    assert space.label(space.index((1, 1, 1, 0), 0)) == "111|0|0c"
    assert space.label(space.index((1, 0, 2, 1), 2)) == "102|1|2c"


def test_basis_states() -> None:
    space = build_space(2, 2)
    first = basis_state(space, (1, 1), 0)
    second = basis_state(space, (2, 0), 1)
    assert first.norm() == pytest.approx(1.0)
    assert first.amplitudes[space.index((1, 1), 0)] == 1.0
    assert inner_product(first, second) == 0


@pytest.mark.parametrize("digits, photons", [((1, 3), 0), ((1, 1), 2), ((1,), 0)])
def test_basis_state_rejects(digits: tuple[int, ...], photons: int) -> None:
    with pytest.raises(ValueError):
        basis_state(build_space(2, 2), digits, photons)


def test_transition_op() -> None:
    space = build_space(2, 2)
    raise_0 = transition_op(space, 0, 2, 1)
    assert np.allclose(apply(raise_0, basis_state(space, (1, 1))).amplitudes, basis_state(space, (2, 1)).amplitudes)
    assert np.allclose(apply(raise_0, basis_state(space, (0, 1))).amplitudes, 0)
    assert np.allclose(raise_0.dagger().dense(), transition_op(space, 0, 1, 2).dense())


def test_transition_op_rejects_bad_indices() -> None:
    space = build_space(2, 2)
    with pytest.raises(ValueError):
        transition_op(space, 2, 2, 1)
    with pytest.raises(ValueError):
        transition_op(space, 0, 3, 1)


def test_cavity_operators() -> None:
    space = build_space(2, 3)
    a = annihilation_op(space)
    one_photon = basis_state(space, (1, 0), 1)
    assert np.allclose(a.apply(one_photon).amplitudes, basis_state(space, (1, 0), 0).amplitudes)
    assert np.allclose(a.apply(basis_state(space, (1, 0), 0)).amplitudes, 0)

    two_photons = basis_state(space, (0, 2), 2)
    assert np.allclose((creation_op(space) @ a).apply(two_photons).amplitudes, 2 * two_photons.amplitudes)
    assert np.allclose(creation_op(space).dagger().dense(), a.dense())

    n_photons = number_op(space).dense()
    assert np.allclose(n_photons, np.diag(np.diag(n_photons)))
    assert np.allclose(np.diag(n_photons).real, [space.decode(i)[1] for i in range(space.dim)])


def test_collective_ops() -> None:
    space = build_space(3, 2)
    Splus, Sminus, Sz = collective_ops(space, space.controls)

    expected = basis_state(space, (2, 1, 0)) + basis_state(space, (1, 2, 0))
    assert np.allclose(Splus.apply(basis_state(space, (1, 1, 0))).amplitudes, expected.amplitudes)
    assert np.allclose(Sminus.apply(basis_state(space, (1, 1, 0))).amplitudes, 0)
    assert np.allclose(Splus.dagger().dense(), Sminus.dense())
    assert np.allclose(Splus.commutator(Sminus).dense(), 2 * Sz.dense())


def test_collective_ops_reject_empty_subset() -> None:
    with pytest.raises(ValueError):
        collective_ops(build_space(2, 2), [])


def test_operators_on_different_systems_commute() -> None:
    space = build_space(3, 2)
    for j, k in [(0, 1), (0, 2), (1, 2)]:
        for levels in [(2, 1), (0, 2), (1, 1)]:
            A = transition_op(space, j, *levels)
            B = transition_op(space, k, 2, 0)
            assert np.abs(A.commutator(B).dense()).max() < 1e-12


def test_linear_algebra_helpers() -> None:
    space = build_space(2, 2)
    state = (basis_state(space, (1, 0)) + basis_state(space, (2, 1), 1) * 1j).normalize()
    assert inner_product(state, state) == pytest.approx(1.0)
    assert np.allclose(apply(identity_op(space), state).amplitudes, state.amplitudes)
    assert np.allclose(compose(identity_op(space), transition_op(space, 1, 2, 1)).dense(), transition_op(space, 1, 2, 1).dense())


def test_space_mismatch() -> None:
    with pytest.raises(ValueError):
        inner_product(basis_state(build_space(2, 2), (1, 1)), basis_state(build_space(2, 3), (1, 1)))
    with pytest.raises(ValueError):
        identity_op(build_space(2, 2)) + identity_op(build_space(3, 2))


def test_hermitian_flag_is_validated() -> None:
    space = build_space(2, 2)
    with pytest.raises(ValueError):
        LinearOperator(space=space, matrix=transition_op(space, 0, 2, 1).matrix, hermitian=True)


def test_zero_vector_cannot_be_normalized() -> None:
    space = build_space(2, 2)
    with pytest.raises(ValueError):
        KetState(space=space, amplitudes=np.zeros(space.dim)).normalize()
