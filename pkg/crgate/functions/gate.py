import logging
import math
import numpy as np
from crgate.functions.run_protocol import computational_indices, propagate_schedule
from crgate.functions.utils import wrapped_phase
from crgate.models.GateReport import GateReport
from crgate.models.Schedule import Schedule
from crgate.models.Tier import Tier

# Residual phases above this are logged at the approximate tiers.
PHASE_TOLERANCE = 1e-6


def ideal_gate(n: int, theta: float) -> np.ndarray:
    """
    Identity except on |1...1>|0> and |1...1>|1>, where the target gets
    R(theta) = [[cos, -sin], [sin, cos]] in the |0>, |1> basis.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    gate = np.eye(2 ** n, dtype=complex)
    c, s = math.cos(theta), math.sin(theta)
    gate[-2:, -2:] = [[c, -s], [s, c]]
    return gate


def extract_gate(schedule: Schedule, logger: logging.Logger = logging.getLogger()) -> GateReport:
    """
    Runs every computational basis input (as one block of columns) and projects the final states
    onto the computational x vacuum sector.
    """
    space = schedule.space
    indices = computational_indices(space)
    labels = [space.label(index) for index in indices]
    logger.info(f"Extracting the {schedule.tier.value} gate of n={schedule.n} from {len(indices)} inputs")

    block = np.zeros((space.dim, len(indices)), dtype=complex)
    block[indices, np.arange(len(indices))] = 1.0
    final, _ = propagate_schedule(schedule, block, logger=logger)

    realized = final[indices, :]
    ideal = ideal_gate(schedule.n, schedule.params.theta)
    photon_rows = [index for index in range(space.dim) if space.decode(index)[1] > 0]

    fidelity: dict[str, float] = {}
    leakage: dict[str, float] = {}
    cavity: dict[str, float] = {}
    phases: dict[str, float] = {}
    in_sector: dict[str, float] = {}
    for j, label in enumerate(labels):
        overlap = complex(np.vdot(ideal[:, j], realized[:, j]))
        population = float(np.sum(np.abs(realized[:, j]) ** 2))
        total = float(np.sum(np.abs(final[:, j]) ** 2))
        fidelity[label] = min(1.0, abs(overlap) ** 2)
        in_sector[label] = population / total
        leakage[label] = 1.0 - population / total
        cavity[label] = float(np.sum(np.abs(final[photon_rows, j]) ** 2))
        phases[label] = wrapped_phase(overlap)

    report = GateReport(
        n=schedule.n,
        theta=schedule.params.theta,
        tier=schedule.tier,
        input_labels=labels,
        realized_gate=realized,
        ideal_gate=ideal,
        per_input_fidelity=fidelity,
        leakage=leakage,
        cavity_population=cavity,
        phase_table=phases,
        step_durations=schedule.durations,
        in_sector_population=in_sector,
    )
    if schedule.tier != Tier.T0:
        for label, phase in report.phase_table.items():
            if abs(phase) > PHASE_TOLERANCE:
                logger.warning(f"Residual phase {phase:.6g} rad on input {label} at tier {schedule.tier.value}")
    logger.info(f"Gate extracted: min fidelity {report.min_fidelity:.6g}, max leakage {report.max_leakage:.6g}")
    return report
