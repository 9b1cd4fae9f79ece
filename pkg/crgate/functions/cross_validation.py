import logging
import math
import numpy as np
from crgate.functions.evolution import evolve
from crgate.functions.hamiltonians import h_engineered
from crgate.functions.hilbert import basis_state, build_space
from crgate.functions.run_protocol import lab_frame_pulse
from crgate.functions.schedule import step_durations
from crgate.models.DeviceParams import DeviceParams


def dispersive_cross_check(
    params: DeviceParams,
    n: int = 2,
    photon_cutoff: int = 3,
    steps_per_cavity_period: int = 50,
    logger: logging.Logger = logging.getLogger(),
) -> float:
    """
    Infidelity between step (i) under the engineered Hamiltonian and under the lab-frame
    Jaynes-Cummings Hamiltonian plus drive, both started from |1...1>|0>|0c>.
    Scales as (g / delta_c)^2 in the dispersive regime.
    """
    space = build_space(n, photon_cutoff)
    initial = basis_state(space, [1] * (n - 1) + [0], 0)
    duration = step_durations(n, params)["i"]
    dt = (2 * math.pi / params.omega_c) / steps_per_cavity_period

    engineered = evolve(initial, h_engineered(space, space.controls, params), duration)
    lab = lab_frame_pulse(initial.amplitudes[:, np.newaxis], space, params, duration, dt, logger=logger)[:, 0]

    infidelity = 1.0 - abs(np.vdot(engineered.amplitudes, lab)) ** 2
    logger.info(f"Dispersive cross-check at delta_c/g={params.delta_c / params.g:.6g}: infidelity {infidelity:.6g}")
    return float(infidelity)
