import logging
import math
import os
import typing as t
import numpy as np
import scipy.linalg
from dotenv import load_dotenv
from scipy.sparse.linalg import expm_multiply
from crgate.models.KetState import KetState
from crgate.models.LinearOperator import LinearOperator
from crgate.models.Propagator import Propagator

load_dotenv()

# Largest dimension for which exact eigendecomposition propagators are built.
DENSE_DIM_LIMIT = int(os.getenv("CRGATE_DENSE_DIM_LIMIT", 1024))
EVOLUTION_HERMITIAN_TOLERANCE = 1e-10

StateOrBlock = t.TypeVar("StateOrBlock", KetState, np.ndarray)


def _require_hermitian(H: LinearOperator) -> None:
    if not H.is_hermitian(EVOLUTION_HERMITIAN_TOLERANCE):
        raise ValueError(f"Evolution needs a Hermitian Hamiltonian, {H.tag or 'operator'} is not")


def expm_propagator(H: LinearOperator, t: float) -> Propagator:
    """U = exp(-i H t) from the Hermitian eigendecomposition of H."""
    _require_hermitian(H)
    energies, vectors = scipy.linalg.eigh(H.dense())
    unitary = (vectors * np.exp(-1j * energies * t)) @ vectors.conj().T
    return Propagator(space=H.space, unitary=unitary, duration=t, hamiltonian_tag=H.tag)


def evolve_block(block: np.ndarray, H: LinearOperator, t: float) -> np.ndarray:
    """Propagates the columns of a dim x m block by exp(-i H t)."""
    if block.shape[0] != H.space.dim:
        raise ValueError(f"Block has {block.shape[0]} rows, space dimension is {H.space.dim}")
    if t == 0:
        return np.array(block, dtype=complex)
    if H.space.dim <= DENSE_DIM_LIMIT:
        return expm_propagator(H, t).apply_block(block)
    _require_hermitian(H)
    return np.asarray(expm_multiply(-1j * t * H.matrix, np.asarray(block, dtype=complex)))


def evolve(state: KetState, H: LinearOperator, t: float) -> KetState:
    if state.space != H.space:
        raise ValueError(f"Space mismatch: state on {state.space}, Hamiltonian on {H.space}")
    return KetState(space=state.space, amplitudes=evolve_block(state.amplitudes[:, np.newaxis], H, t)[:, 0])


def evolve_trajectory(state: KetState, H: LinearOperator, t_total: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    """
    States at `samples` equally spaced times of [0, t_total], endpoints included.
    Returns (times, states) with states of shape (samples, dim).
    """
    if state.space != H.space:
        raise ValueError(f"Space mismatch: state on {state.space}, Hamiltonian on {H.space}")
    if samples < 2:
        raise ValueError(f"A trajectory needs at least two samples, got {samples}")
    _require_hermitian(H)
    times = np.linspace(0.0, t_total, samples)

    if H.space.dim <= DENSE_DIM_LIMIT:
        energies, vectors = scipy.linalg.eigh(H.dense())
        coefficients = vectors.conj().T @ state.amplitudes
        phases = np.exp(-1j * np.outer(times, energies))
        return times, (phases * coefficients) @ vectors.T

    states = expm_multiply(-1j * H.matrix, state.amplitudes, start=0.0, stop=t_total, num=samples, endpoint=True)
    return times, np.asarray(states)


def evolve_sampled(
    state: StateOrBlock,
    H_of_t: t.Callable[[float], LinearOperator],
    t_total: float,
    dt: float,
    logger: logging.Logger = logging.getLogger(),
) -> StateOrBlock:
    """
    Piecewise-constant propagation with H sampled at the midpoint of each slice (second order in dt).
    The slice count is ceil(t_total / dt), so the last slice ends exactly at t_total.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if dt >= t_total:
        raise ValueError(f"dt={dt} must be smaller than the evolution time {t_total}")

    amplitudes = state.amplitudes[:, np.newaxis] if isinstance(state, KetState) else np.array(state, dtype=complex)
    n_slices = math.ceil(t_total / dt)
    h = t_total / n_slices
    logger.info(f"Sampled evolution over {t_total:.6g} s in {n_slices} slices of {h:.6g} s")

    for j in range(n_slices):
        H = H_of_t((j + 0.5) * h)
        if H.space.dim <= DENSE_DIM_LIMIT:
            amplitudes = scipy.linalg.expm(-1j * h * H.dense()) @ amplitudes
        else:
            amplitudes = expm_multiply(-1j * h * H.matrix, amplitudes)

    if isinstance(state, KetState):
        return KetState(space=state.space, amplitudes=amplitudes[:, 0])
    return amplitudes
