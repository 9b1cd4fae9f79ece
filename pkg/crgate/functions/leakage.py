import logging
import numpy as np
from crgate.functions.dicke import dicke_state
from crgate.functions.evolution import evolve_trajectory
from crgate.functions.hamiltonians import h_engineered
from crgate.functions.hilbert import build_space
from crgate.functions.schedule import step_durations
from crgate.models.DeviceParams import DeviceParams

MIN_SAMPLES = 100


def pulse_leakage_peaks(
    n: int,
    params: DeviceParams,
    samples: int = 400,
    photon_cutoff: int = 3,
    logger: logging.Logger = logging.getLogger(),
) -> tuple[float, float]:
    """
    Peak population of |J,-J+2> under the engineered Hamiltonian during step (i), started from |J,-J>,
    and during step (vii), started from |J,-J+1>.
    """
    if samples < MIN_SAMPLES:
        raise ValueError(f"Leakage needs at least {MIN_SAMPLES} samples, got {samples}")
    if n < 3 or params.Omega == 0:
        return 0.0, 0.0

    space = build_space(n, photon_cutoff)
    H = h_engineered(space, space.controls, params)
    duration = step_durations(n, params)["i"]
    second_rung = dicke_state(space, 2).amplitudes

    peaks = []
    for start_rung in (0, 1):
        _, states = evolve_trajectory(dicke_state(space, start_rung), H, duration, samples)
        peak = float(np.max(np.abs(states @ second_rung.conj()) ** 2))
        logger.info(f"Peak |J,-J+2> population from |J,-J+{start_rung}> for n={n}: {peak:.6g}")
        peaks.append(peak)
    return peaks[0], peaks[1]


def simulated_leakage(
    n: int,
    params: DeviceParams,
    samples: int = 400,
    photon_cutoff: int = 3,
    logger: logging.Logger = logging.getLogger(),
) -> float:
    """Largest transient |J,-J+2> population of the two pulse steps."""
    return max(pulse_leakage_peaks(n, params, samples, photon_cutoff, logger=logger))
