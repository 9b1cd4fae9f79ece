import math
import numpy as np
import pytest
from crgate.functions.dicke import (
    blockade_margin,
    build_ladder,
    dicke_amplitudes,
    dicke_energy,
    dicke_state,
    l_sector_detuning,
    l_sector_leakage,
    l_sector_rabi,
    ladder_params,
    w_state,
)
from crgate.functions.hamiltonians import h_engineered, h_h0
from crgate.functions.hilbert import build_space
from tests.params import unit_params


def register_index(digits: tuple[int, ...]) -> int:
    index = 0
    for d in digits:
        index = index * 3 + d
    return index


def test_w_state_of_three_controls() -> None:
    vector = dicke_amplitudes(3, 1)
    support = {register_index(d) for d in [(1, 1, 2), (1, 2, 1), (2, 1, 1)]}
    assert set(np.flatnonzero(vector)) == support
    assert np.allclose(vector[list(support)], 1 / math.sqrt(3))


def test_ground_rung_is_all_ones() -> None:
    vector = dicke_amplitudes(3, 0)
    assert vector[register_index((1, 1, 1))] == 1
    assert np.count_nonzero(vector) == 1


def test_w_state_of_two_controls() -> None:
    space = build_space(3, 2)
    state = w_state(space, 2)
    expected = np.zeros(space.dim, dtype=complex)
    expected[space.index((1, 2, 0), 0)] = expected[space.index((2, 1, 0), 0)] = 1 / math.sqrt(2)
    assert np.allclose(state.amplitudes, expected)


def test_zero_placement() -> None:
    last = dicke_amplitudes(3, 1, zeros=1)
    assert set(np.flatnonzero(last)) == {register_index((1, 2, 0)), register_index((2, 1, 0))}
    masked = dicke_amplitudes(3, 1, zero_mask=(0,))
    assert set(np.flatnonzero(masked)) == {register_index((0, 1, 2)), register_index((0, 2, 1))}


def test_dicke_rejects_too_many_excitations() -> None:
    with pytest.raises(ValueError):
        dicke_amplitudes(3, 2, zeros=2)
    with pytest.raises(ValueError):
        w_state(build_space(3, 2), 3)


def test_dicke_rejects_negative_zeros() -> None:
    with pytest.raises(ValueError):
        dicke_amplitudes(3, 1, zeros=-1)


@pytest.mark.parametrize("n_controls", [1, 2, 3, 4, 5, 6, 7])
def test_w_state_norm(n_controls: int) -> None:
    assert np.linalg.norm(dicke_amplitudes(n_controls, 1)) == pytest.approx(1.0, abs=1e-12)


def test_dicke_states_are_orthonormal() -> None:
    space = build_space(5, 2)
    for zeros in (0, 1):
        states = np.array([dicke_state(space, k, zeros).amplitudes for k in range(4 - zeros + 1)])
        assert np.allclose(states.conj() @ states.T, np.eye(len(states)), atol=1e-12)


def test_dicke_energy() -> None:
    lam = 0.3
    assert dicke_energy(1, 1.0, 0.0, lam) == pytest.approx(-2 * lam)
    assert dicke_energy(0, 1.0, 0.0, lam) == 0.0
    J, omega0 = 2.5, 7.0
    for k in range(5):
        gap = dicke_energy(k + 1, J, omega0, lam) - dicke_energy(k, J, omega0, lam)
        assert gap == pytest.approx(omega0 - 2 * (J - k) * lam)
    with pytest.raises(ValueError):
        dicke_energy(3, 1.0, omega0, lam)


def test_ladder_params() -> None:
    Omega, lam, omega0, J = 0.01, 0.1, 10.0, 2.5
    omega = omega0 - 2 * J * lam
    rabi, detuning = ladder_params(0, J, Omega, lam, omega0, omega)
    assert rabi == pytest.approx(Omega * math.sqrt(5))
    assert detuning == pytest.approx(0.0, abs=1e-12)
    assert ladder_params(2, J, Omega, lam, omega0, omega)[1] == pytest.approx(2 * lam)
    assert ladder_params(0, 0.5, Omega, lam, omega0, omega0 - lam)[0] == pytest.approx(Omega)
    with pytest.raises(ValueError):
        ladder_params(5, J, Omega, lam, omega0, omega)


def test_build_ladder_detunings() -> None:
    params = unit_params(6)
    ladder = build_ladder(5, params)
    assert ladder.J == 2.5
    for k, detuning in ladder.detunings.items():
        assert detuning == pytest.approx(k * (k - 1) * params.lam, abs=1e-12)
    assert set(ladder.rabi) == {0, 1, 2, 3, 4}


def test_blockade_margin() -> None:
    assert blockade_margin(6, 1.0, 20.0) == pytest.approx(math.sqrt(5) / 20)
    assert blockade_margin(2, 0.4, 0.4) == pytest.approx(1.0)
    assert blockade_margin(5, 1.0, 4.0) == pytest.approx(blockade_margin(5, 1.0, 2.0) / 2)
    with pytest.raises(ValueError):
        blockade_margin(3, 1.0, 0.0)


def test_l_sector_quantities() -> None:
    lam, Omega = 0.2, 0.01
    assert l_sector_detuning(1, lam) == pytest.approx(-lam)
    assert l_sector_rabi(5, 2.5, Omega) == 0.0
    assert l_sector_rabi(2, 2.5, Omega) == pytest.approx(Omega * math.sqrt(3))
    with pytest.raises(ValueError):
        l_sector_rabi(0, 2.5, Omega)
    with pytest.raises(ValueError):
        l_sector_detuning(6, lam, 2.5)
    assert l_sector_leakage(5, 6, Omega, lam) == 0.0


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_l_sector_ratios_are_bounded_by_blockade(n: int) -> None:
    Omega, lam = 0.01, 0.2
    J = (n - 1) / 2
    for l in range(1, n):
        assert l_sector_rabi(l, J, Omega) / (l * lam) <= blockade_margin(n, Omega, lam) + 1e-15


@pytest.mark.parametrize("n_controls", [2, 3, 4, 5])
def test_dicke_states_are_eigenstates_of_h0(n_controls: int) -> None:
    params = unit_params(n_controls + 1)
    space = build_space(n_controls + 1, 2)
    H0 = h_h0(space, space.controls, params)
    for k in range(n_controls + 1):
        state = dicke_state(space, k).amplitudes
        energy = dicke_energy(k, n_controls / 2, params.omega0, params.lam)
        assert np.linalg.norm(H0.matrix @ state - energy * state) < 1e-10


def test_engineered_matrix_elements_follow_ladder() -> None:
    params = unit_params(5)
    space = build_space(5, 2)
    H = h_engineered(space, space.controls, params)
    ladder = build_ladder(4, params)
    for k, rabi in ladder.rabi.items():
        element = np.vdot(dicke_state(space, k + 1).amplitudes, H.matrix @ dicke_state(space, k).amplitudes)
        assert abs(element - rabi) < 1e-10
