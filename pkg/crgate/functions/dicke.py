import itertools
import math
import typing as t
import numpy as np
from crgate.models.DeviceParams import DeviceParams
from crgate.models.DickeLadder import DickeLadder
from crgate.models.KetState import KetState
from crgate.models.SpaceDescriptor import LEVELS, SpaceDescriptor


def _zero_positions(n_controls: int, zeros: int, zero_mask: t.Sequence[int] | None) -> tuple[int, ...]:
    if zeros < 0:
        raise ValueError(f"zeros must be non-negative, got {zeros}")
    if zero_mask is None:
        return tuple(range(n_controls - zeros, n_controls))
    mask = tuple(sorted(set(zero_mask)))
    if any(not 0 <= position < n_controls for position in mask):
        raise ValueError(f"Zero mask {tuple(zero_mask)} has positions outside [0, {n_controls})")
    if zeros and zeros != len(mask):
        raise ValueError(f"zeros={zeros} disagrees with zero mask {mask}")
    return mask


def dicke_amplitudes(n_controls: int, k: int, zeros: int = 0, zero_mask: t.Sequence[int] | None = None) -> np.ndarray:
    """
    Control-register vector (length 3^n_controls) of the symmetric state with `k` systems in |2>,
    the systems of the l-sector in |0> (the last `zeros` controls unless `zero_mask` names them)
    and the rest in |1>. All amplitudes are real and positive.
    """
    if n_controls < 1:
        raise ValueError(f"Dicke states need at least one control, got n_controls={n_controls}")
    zero_positions = _zero_positions(n_controls, zeros, zero_mask)
    l = len(zero_positions)
    if k < 0 or k + l > n_controls:
        raise ValueError(f"Need 0 <= k and k + l <= n_controls, got k={k}, l={l}, n_controls={n_controls}")

    free = [position for position in range(n_controls) if position not in zero_positions]
    excited_sets = list(itertools.combinations(free, k))
    amplitude = 1.0 / math.sqrt(len(excited_sets))

    vector = np.zeros(LEVELS ** n_controls, dtype=complex)
    for excited in excited_sets:
        digits = [0 if position in zero_positions else 2 if position in excited else 1 for position in range(n_controls)]
        index = 0
        for d in digits:
            index = index * LEVELS + d
        vector[index] = amplitude
    return vector


def dicke_state(
    space: SpaceDescriptor,
    k: int,
    zeros: int = 0,
    *,
    zero_mask: t.Sequence[int] | None = None,
    target_level: int = 0,
    photons: int = 0,
) -> KetState:
    """|J,-J+k> of the controls, embedded with the target in `target_level` and the cavity in Fock state `photons`."""
    if target_level not in range(LEVELS):
        raise ValueError(f"Target level must be in {{0, 1, 2}}, got {target_level}")
    if not 0 <= photons < space.photon_cutoff:
        raise ValueError(f"Photon number {photons} outside [0, {space.photon_cutoff})")

    register = dicke_amplitudes(space.n_systems - 1, k, zeros, zero_mask)
    target = np.zeros(LEVELS, dtype=complex)
    target[target_level] = 1.0
    cavity = np.zeros(space.photon_cutoff, dtype=complex)
    cavity[photons] = 1.0
    return KetState(space=space, amplitudes=np.kron(np.kron(register, target), cavity))


def w_state(space: SpaceDescriptor, n_controls: int | None = None, *, target_level: int = 0, photons: int = 0) -> KetState:
    if n_controls is not None and n_controls != space.n_systems - 1:
        raise ValueError(f"Space holds {space.n_systems - 1} controls, asked for a W state of {n_controls}")
    return dicke_state(space, 1, target_level=target_level, photons=photons)


def _check_rung(k: int, J: float, top: float) -> None:
    if not 0 <= k <= top:
        raise ValueError(f"Rung k={k} outside [0, {top}] for J={J}")


def dicke_energy(k: int, J: float, omega0: float, lam: float) -> float:
    """Energy of |J,-J+k> under omega0 S_z - lambda S+S-."""
    _check_rung(k, J, 2 * J)
    return omega0 * (-J + k) - k * (2 * J - k + 1) * lam


def ladder_detuning(k: int, J: float, lam: float, omega0: float, omega: float) -> float:
    """Diagonal of |J,-J+k> in the drive frame with the constant -2 J^2 lambda removed."""
    _check_rung(k, J, 2 * J)
    return (omega0 - omega) * (-J + k) - k * (2 * J - k + 1) * lam + 2 * J ** 2 * lam


def ladder_params(k: int, J: float, Omega: float, lam: float, omega0: float, omega: float) -> tuple[float, float]:
    """
    (Omega_k, delta_k) of the k -> k+1 rung. For omega = omega0 - 2 J lambda, delta_k = k (k - 1) lambda.
    """
    _check_rung(k, J, 2 * J - 1)
    rabi = Omega * math.sqrt((2 * J - k) * (k + 1))
    return rabi, ladder_detuning(k, J, lam, omega0, omega)


def build_ladder(n_controls: int, params: DeviceParams) -> DickeLadder:
    J = n_controls / 2
    energies = {k: dicke_energy(k, J, params.omega0, params.lam) for k in range(n_controls + 1)}
    detunings = {k: ladder_detuning(k, J, params.lam, params.omega0, params.omega_drive) for k in range(n_controls + 1)}
    rabi = {k: ladder_params(k, J, params.Omega, params.lam, params.omega0, params.omega_drive)[0] for k in range(n_controls)}
    return DickeLadder(n_controls=n_controls, J=J, energies=energies, rabi=rabi, detunings=detunings)


def blockade_margin(n: int, Omega: float, lam: float) -> float:
    """Omega sqrt(n-1) / lambda; the blockade holds when this is well below one."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    return Omega * math.sqrt(n - 1) / lam


def _check_sector(l: int, J: float | None) -> None:
    if l < 1 or (J is not None and l > 2 * J):
        raise ValueError(f"Sector l={l} outside [1, 2J] for J={J}")


def l_sector_detuning(l: int, lam: float, J: float | None = None) -> float:
    _check_sector(l, J)
    return -l * lam


def l_sector_rabi(l: int, J: float, Omega: float) -> float:
    _check_sector(l, J)
    return Omega * math.sqrt(2 * J - l)


def l_sector_leakage(l: int, n: int, Omega: float, lam: float) -> float:
    """
    Two-level occupation estimate of the singly excited state of the l-sector:
    Omega^2 / (Omega^2 + (l lambda)^2 / [4 (n - l - 1)]).
    """
    _check_sector(l, (n - 1) / 2)
    remaining = n - l - 1
    if remaining == 0 or Omega == 0:
        return 0.0
    return Omega ** 2 / (Omega ** 2 + (l * lam) ** 2 / (4 * remaining))
