"""
Hamiltonians of the protocol, hbar = 1. `controls` is the set of collectively driven systems,
`target` the single system coupled through its |1>-|2> or |0>-|2> transition.
"""
import cmath
import math
import typing as t
import numpy as np
import scipy.sparse as sp
from crgate.functions.dicke import dicke_amplitudes
from crgate.functions.hilbert import annihilation_op, collective_ops, creation_op, identity_op, number_op, transition_op
from crgate.models.DeviceParams import DeviceParams
from crgate.models.LinearOperator import LinearOperator
from crgate.models.SpaceDescriptor import LEVELS, SpaceDescriptor


def _hamiltonian(op: LinearOperator, tag: str) -> LinearOperator:
    return op.with_tag(tag, hermitian=True)


def h_jc(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """omega0 S_z + omega_c a+a + g (a+ S- + a S+) in the lab frame."""
    if params.omega0 <= 0:
        raise ValueError(f"Lab-frame Hamiltonian needs a positive transition frequency, got omega0={params.omega0}")
    Splus, Sminus, Sz = collective_ops(space, controls)
    a, adag = annihilation_op(space), creation_op(space)
    H = Sz * params.omega0 + number_op(space) * params.omega_c + (adag @ Sminus + a @ Splus) * params.g
    return _hamiltonian(H, "jc")


def h_dispersive(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """omega0 S_z + omega_c a+a - lambda sum_j (|2><2|_j - |1><1|_j) a+a - lambda S+ S-."""
    if params.delta_c <= 0:
        raise ValueError(f"Dispersive Hamiltonian needs delta_c > 0, got {params.delta_c}")
    Splus, Sminus, Sz = collective_ops(space, controls)
    n_photons = number_op(space)
    H = Sz * params.omega0 + n_photons * params.omega_c - (Sz @ n_photons) * (2 * params.lam) - (Splus @ Sminus) * params.lam
    return _hamiltonian(H, "dispersive")


def h_h0(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """omega0 S_z - lambda S+ S-, the vacuum-sector form of the dispersive Hamiltonian."""
    Splus, Sminus, Sz = collective_ops(space, controls)
    return _hamiltonian(Sz * params.omega0 - (Splus @ Sminus) * params.lam, "h0")


def h_drive(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams, t: float) -> LinearOperator:
    """Omega (e^{-i omega t} S+ + e^{i omega t} S-)."""
    Splus, Sminus, _ = collective_ops(space, controls)
    phase = cmath.exp(-1j * params.omega_drive * t)
    return _hamiltonian(Splus * (params.Omega * phase) + Sminus * (params.Omega * phase.conjugate()), "drive")


def h_engineered(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """
    Drive-frame Hamiltonian of the pulse steps on the full space:
    delta_p S_z - lambda S+ S- + Omega (S+ + S-) + 2 J^2 lambda.
    The constant makes the |J,-J> and |J,-J+1> diagonals vanish at delta_p = 2 J lambda.
    """
    Splus, Sminus, Sz = collective_ops(space, controls)
    J = len(set(controls)) / 2
    H = (
        Sz * params.delta_p
        - (Splus @ Sminus) * params.lam
        + (Splus + Sminus) * params.Omega
        + identity_op(space) * (2 * J ** 2 * params.lam)
    )
    return _hamiltonian(H, "engineered")


def _register_embedding(space: SpaceDescriptor, controls: t.Sequence[int], register: sp.spmatrix) -> sp.csr_matrix:
    if tuple(sorted(controls)) != tuple(range(len(controls))) or not controls:
        raise ValueError(f"Dicke-state Hamiltonians act on the leading systems, got controls {tuple(controls)}")
    rest = sp.identity(LEVELS ** (space.n_systems - len(controls)) * space.photon_cutoff, dtype=complex, format="csr")
    return sp.csr_matrix(sp.kron(register, rest))


def h_two_level(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """Omega sqrt(2J) (|J,-J+1><J,-J| + h.c.); zero outside the symmetric k = 0, 1 pair."""
    n_controls = len(controls)
    ground = dicke_amplitudes(n_controls, 0)
    w = dicke_amplitudes(n_controls, 1)
    register = sp.csr_matrix(np.outer(w, ground.conj()) + np.outer(ground, w.conj()))
    matrix = _register_embedding(space, controls, register) * (params.Omega * math.sqrt(n_controls))
    return LinearOperator(space=space, matrix=matrix, hermitian=True, tag="two_level")


def h_resonant_collective(space: SpaceDescriptor, controls: t.Sequence[int], params: DeviceParams) -> LinearOperator:
    """g' (a S+ + a+ S-), controls resonant with the cavity."""
    Splus, Sminus, _ = collective_ops(space, controls)
    H = (annihilation_op(space) @ Splus + creation_op(space) @ Sminus) * params.g_prime
    return _hamiltonian(H, "resonant_collective")


def h_resonant_target_12(space: SpaceDescriptor, target: int, params: DeviceParams) -> LinearOperator:
    """g' (a+ |1><2| + a |2><1|) on the target."""
    H = (creation_op(space) @ transition_op(space, target, 1, 2) + annihilation_op(space) @ transition_op(space, target, 2, 1)) * params.g_prime
    return _hamiltonian(H, "resonant_target_12")


def h_resonant_target_02(space: SpaceDescriptor, target: int, params: DeviceParams) -> LinearOperator:
    """g'' (a+ |0><2| + a |2><0|) on the target."""
    H = (creation_op(space) @ transition_op(space, target, 0, 2) + annihilation_op(space) @ transition_op(space, target, 2, 0)) * params.g_dprime
    return _hamiltonian(H, "resonant_target_02")


def drive_frame_generator(space: SpaceDescriptor, controls: t.Sequence[int]) -> LinearOperator:
    """S_z + a+a; exp(i omega t (S_z + a+a)) takes lab-frame states to the drive frame."""
    _, _, Sz = collective_ops(space, controls)
    return _hamiltonian(Sz + number_op(space), "frame")
