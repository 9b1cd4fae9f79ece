import typing as t
import numpy as np
import scipy.sparse as sp
from crgate.models.KetState import KetState
from crgate.models.LinearOperator import LinearOperator
from crgate.models.SpaceDescriptor import LEVELS, SpaceDescriptor


def build_space(n_systems: int, photon_cutoff: int = 3) -> SpaceDescriptor:
    if n_systems < 2:
        raise ValueError(f"A controlled gate needs at least one control and a target, got n_systems={n_systems}")
    if photon_cutoff < 2:
        raise ValueError(f"photon_cutoff must be >= 2 to hold the protocol photon, got {photon_cutoff}")
    return SpaceDescriptor(n_systems=n_systems, photon_cutoff=photon_cutoff)


def basis_state(space: SpaceDescriptor, digits: t.Sequence[int], photons: int = 0) -> KetState:
    amplitudes = np.zeros(space.dim, dtype=complex)
    amplitudes[space.index(digits, photons)] = 1.0
    return KetState(space=space, amplitudes=amplitudes)


def _check_system(space: SpaceDescriptor, sys: int) -> None:
    if not 0 <= sys < space.n_systems:
        raise ValueError(f"System index {sys} outside [0, {space.n_systems})")


def _check_level(level: int) -> None:
    if level not in range(LEVELS):
        raise ValueError(f"Level must be in {{0, 1, 2}}, got {level}")


def embed_local(space: SpaceDescriptor, sys: int, local: np.ndarray | sp.spmatrix) -> sp.csr_matrix:
    """Places a 3x3 operator on qutrit `sys`, identity on the other qutrits and on the cavity."""
    _check_system(space, sys)
    before = sp.identity(LEVELS ** sys, dtype=complex, format="csr")
    after = sp.identity(LEVELS ** (space.n_systems - sys - 1) * space.photon_cutoff, dtype=complex, format="csr")
    return sp.csr_matrix(sp.kron(sp.kron(before, sp.csr_matrix(local, dtype=complex)), after))


def embed_cavity(space: SpaceDescriptor, local: np.ndarray | sp.spmatrix) -> sp.csr_matrix:
    qutrits = sp.identity(space.qutrit_dim, dtype=complex, format="csr")
    return sp.csr_matrix(sp.kron(qutrits, sp.csr_matrix(local, dtype=complex)))


def transition_op(space: SpaceDescriptor, sys: int, i: int, j: int) -> LinearOperator:
    """|i><j| on system `sys`."""
    _check_level(i)
    _check_level(j)
    local = sp.csr_matrix(([1.0], ([i], [j])), shape=(LEVELS, LEVELS), dtype=complex)
    return LinearOperator(space=space, matrix=embed_local(space, sys, local), hermitian=i == j, tag=f"|{i}><{j}|_{sys}")


def projector(space: SpaceDescriptor, sys: int, level: int) -> LinearOperator:
    return transition_op(space, sys, level, level)


def annihilation_op(space: SpaceDescriptor) -> LinearOperator:
    """Truncated a; its adjoint annihilates the top Fock level."""
    local = sp.diags(np.sqrt(np.arange(1, space.photon_cutoff)), offsets=1, dtype=complex)
    return LinearOperator(space=space, matrix=embed_cavity(space, local), tag="a")


def creation_op(space: SpaceDescriptor) -> LinearOperator:
    return annihilation_op(space).dagger().with_tag("a+")


def number_op(space: SpaceDescriptor) -> LinearOperator:
    local = sp.diags(np.arange(space.photon_cutoff, dtype=float), dtype=complex)
    return LinearOperator(space=space, matrix=embed_cavity(space, local), hermitian=True, tag="a+a")


def identity_op(space: SpaceDescriptor) -> LinearOperator:
    return LinearOperator(space=space, matrix=sp.identity(space.dim, dtype=complex, format="csr"), hermitian=True, tag="I")


def zero_op(space: SpaceDescriptor) -> LinearOperator:
    return LinearOperator(space=space, matrix=sp.csr_matrix((space.dim, space.dim), dtype=complex), hermitian=True, tag="0")


def _check_subset(space: SpaceDescriptor, subset: t.Iterable[int]) -> tuple[int, ...]:
    systems = tuple(sorted(set(subset)))
    if not systems:
        raise ValueError("Collective operators need a non-empty subset of systems")
    for sys in systems:
        _check_system(space, sys)
    return systems


def collective_ops(space: SpaceDescriptor, subset: t.Iterable[int]) -> tuple[LinearOperator, LinearOperator, LinearOperator]:
    """
    S+ = sum_j |2><1|_j, S- = (S+)^dagger and S_z = 1/2 sum_j (|2><2|_j - |1><1|_j) over `subset`.
    """
    systems = _check_subset(space, subset)
    splus = sp.csr_matrix((space.dim, space.dim), dtype=complex)
    sz = sp.csr_matrix((space.dim, space.dim), dtype=complex)
    for sys in systems:
        splus = splus + transition_op(space, sys, 2, 1).matrix
        sz = sz + 0.5 * (projector(space, sys, 2).matrix - projector(space, sys, 1).matrix)

    Splus = LinearOperator(space=space, matrix=splus, tag="S+")
    return Splus, Splus.dagger().with_tag("S-"), LinearOperator(space=space, matrix=sz, hermitian=True, tag="Sz")


def excitation_number_op(space: SpaceDescriptor, systems: t.Iterable[int], levels: t.Sequence[int] = (2,)) -> LinearOperator:
    """N = a+a + sum over `systems` of the projectors on `levels`."""
    number = number_op(space).matrix
    for sys in _check_subset(space, systems):
        for level in levels:
            number = number + projector(space, sys, level).matrix
    return LinearOperator(space=space, matrix=number, hermitian=True, tag="N")


def inner_product(a: KetState, b: KetState) -> complex:
    """<a|b>, conjugate-linear in `a`."""
    if a.space != b.space:
        raise ValueError(f"Space mismatch: {a.space} vs {b.space}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def apply(op: LinearOperator, state: KetState) -> KetState:
    return op.apply(state)


def add(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return a + b


def scale(op: LinearOperator, factor: complex) -> LinearOperator:
    return op * factor


def compose(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """a @ b, acting with `b` first."""
    return a @ b


def population(state: KetState | np.ndarray, indices: t.Sequence[int]) -> float:
    amplitudes = state.amplitudes if isinstance(state, KetState) else state
    return float(np.sum(np.abs(amplitudes[list(indices)]) ** 2))
