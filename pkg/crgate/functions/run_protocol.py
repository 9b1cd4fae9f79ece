import logging
import typing as t
import numpy as np
from crgate.functions.evolution import evolve_block, evolve_sampled
from crgate.functions.hamiltonians import drive_frame_generator, h_jc
from crgate.functions.hilbert import basis_state, collective_ops
from crgate.functions.utils import check_not_none
from crgate.models.DeviceParams import DeviceParams
from crgate.models.KetState import KetState
from crgate.models.LinearOperator import LinearOperator
from crgate.models.ProtocolStep import ProtocolStep
from crgate.models.Schedule import Schedule
from crgate.models.SpaceDescriptor import SpaceDescriptor

SECTOR_TOLERANCE = 1e-12


def parse_label(space: SpaceDescriptor, label: str) -> KetState:
    """Basis state from a label such as `111|0|0c` (controls, target, photons)."""
    try:
        controls, target, photons = label.split("|")
        digits = [int(d) for d in controls + target]
        n_photons = int(photons.removesuffix("c"))
    except ValueError:
        raise ValueError(f"Basis label {label!r} is not of the form <controls>|<target>|<photons>c")
    return basis_state(space, digits, n_photons)


def computational_indices(space: SpaceDescriptor) -> list[int]:
    """Indices of the computational (levels 0/1) x vacuum states, in binary order with system 0 most significant."""
    indices = []
    for value in range(2 ** space.n_systems):
        digits = [int(bit) for bit in format(value, f"0{space.n_systems}b")]
        indices.append(space.index(digits, 0))
    return indices


def lab_frame_pulse(
    block: np.ndarray,
    space: SpaceDescriptor,
    params: DeviceParams,
    duration: float,
    dt: float,
    logger: logging.Logger = logging.getLogger(),
) -> np.ndarray:
    """
    Runs one pulse step under the lab-frame Jaynes-Cummings Hamiltonian plus drive and returns the result
    in the drive frame, exp(i omega t (S_z + a+a)), with the constant -2 J^2 lambda removed.
    The drive phase and the frame are referenced to the start of the step.
    """
    if duration == 0:
        return np.array(block, dtype=complex)
    controls = space.controls
    H_static = h_jc(space, controls, params)
    Splus, _, _ = collective_ops(space, controls)
    Splus_part = Splus.matrix * params.Omega

    def H_of_t(time: float) -> LinearOperator:
        phase = np.exp(-1j * params.omega_drive * time)
        drive = Splus_part * phase + (Splus_part * phase).conj().T
        return LinearOperator(space=space, matrix=H_static.matrix + drive, tag="jc+drive")

    lab = evolve_sampled(block, H_of_t, duration, dt, logger=logger)
    frame = np.real(drive_frame_generator(space, controls).matrix.diagonal())
    J = len(controls) / 2
    rotation = np.exp(1j * params.omega_drive * duration * frame - 1j * 2 * J ** 2 * params.lam * duration)
    return rotation[:, np.newaxis] * lab


def propagate_step(step: ProtocolStep, block: np.ndarray, schedule: Schedule, logger: logging.Logger = logging.getLogger()) -> np.ndarray:
    if step.duration == 0:
        return np.array(block, dtype=complex)
    if step.sampled:
        dt = check_not_none(schedule.sample_dt, msg="Sampled steps need a sample_dt on the schedule")
        return lab_frame_pulse(block, schedule.space, schedule.params, step.duration, dt, logger=logger)
    H = check_not_none(step.hamiltonian, msg=f"Step ({step.label}) has no Hamiltonian")
    return evolve_block(block, H, step.duration)


def propagate_schedule(
    schedule: Schedule,
    block: np.ndarray,
    keep_trace: bool = False,
    logger: logging.Logger = logging.getLogger(),
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Applies the seven steps to the columns of `block`; the trace holds the block after each step."""
    trace = []
    for step in schedule.steps:
        logger.info(f"Started step ({step.label}) {step.hamiltonian_tag} for {step.duration:.6g} s")
        block = propagate_step(step, block, schedule, logger=logger)
        if keep_trace:
            trace.append(block)
    return block, trace


def _check_computational(state: KetState) -> None:
    allowed = computational_indices(state.space)
    outside = 1 - float(np.sum(np.abs(state.amplitudes[allowed]) ** 2)) / state.norm() ** 2
    if outside > SECTOR_TOLERANCE:
        raise ValueError(f"Input has population {outside:.3e} outside the computational x vacuum sector")


def run_protocol(
    initial: KetState | str,
    schedule: Schedule,
    allow_outside_sector: bool = False,
    logger: logging.Logger = logging.getLogger(),
) -> tuple[KetState, list[KetState]]:
    """Final state and the seven states after steps (i)..(vii)."""
    state = parse_label(schedule.space, initial) if isinstance(initial, str) else initial
    if state.space != schedule.space:
        raise ValueError(f"Space mismatch: input on {state.space}, schedule on {schedule.space}")
    if not allow_outside_sector:
        _check_computational(state)

    final, trace = propagate_schedule(schedule, state.amplitudes[:, np.newaxis], keep_trace=True, logger=logger)
    states = [KetState(space=schedule.space, amplitudes=block[:, 0]) for block in trace]
    return KetState(space=schedule.space, amplitudes=final[:, 0]), states


def run_superposition(schedule: Schedule, coefficients: t.Mapping[str, complex], logger: logging.Logger = logging.getLogger()) -> KetState:
    """Runs sum_c c |label> as a single input."""
    amplitudes = np.zeros(schedule.space.dim, dtype=complex)
    for label, coefficient in coefficients.items():
        amplitudes += coefficient * parse_label(schedule.space, label).amplitudes
    final, _ = run_protocol(KetState(space=schedule.space, amplitudes=amplitudes), schedule, logger=logger)
    return final

