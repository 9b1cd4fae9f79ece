import logging
import numpy as np
from crgate.functions.config import device_params
from crgate.functions.dicke import build_ladder, dicke_energy, dicke_state
from crgate.functions.estimates import feasibility_check
from crgate.functions.evolution import DENSE_DIM_LIMIT, expm_propagator
from crgate.functions.gate import extract_gate
from crgate.functions.hamiltonians import h_engineered, h_h0
from crgate.functions.hilbert import build_space
from crgate.functions.run_protocol import propagate_schedule, computational_indices
from crgate.functions.schedule import build_schedule
from crgate.models.CheckResult import CheckResult
from crgate.models.DeviceParams import DeviceParams
from crgate.models.FeasibilityReport import CheckStatus
from crgate.models.LinearOperator import LinearOperator
from crgate.models.RunConfig import RunConfig
from crgate.models.Tier import Tier

EIGEN_TOLERANCE = 1e-10
UNITARITY_TOLERANCE = 1e-9
GATE_TOLERANCE = 1e-8
LINEARITY_TOLERANCE = 1e-9
EIGEN_CONTROL_COUNTS = (2, 3, 4, 5)


def _scale(H: LinearOperator) -> float:
    return max(1.0, float(abs(H.matrix).max()))


def _bounded(name: str, value: float, limit: float, detail: str) -> CheckResult:
    return CheckResult(
        name=name,
        status=CheckStatus.passed if value < limit else CheckStatus.fail,
        value=value,
        limit=limit,
        detail=detail,
    )


def dicke_eigen_residual(n_controls: int, params: DeviceParams) -> float:
    """max_k |H0 |J,-J+k> - e_k |J,-J+k>| relative to the largest entry of H0 (at least one)."""
    space = build_space(n_controls + 1, 2)
    H0 = h_h0(space, space.controls, params)
    J = n_controls / 2
    residuals = []
    for k in range(n_controls + 1):
        state = dicke_state(space, k).amplitudes
        energy = dicke_energy(k, J, params.omega0, params.lam)
        residuals.append(float(np.linalg.norm(H0.matrix @ state - energy * state)))
    return max(residuals) / _scale(H0)


def engineered_ladder_residual(n: int, params: DeviceParams) -> float:
    """max_k |<J,-J+k+1|H'|J,-J+k> - Omega_k| relative to the largest entry of H'."""
    space = build_space(n, 2)
    H = h_engineered(space, space.controls, params)
    ladder = build_ladder(n - 1, params)
    residuals = []
    for k, rabi in ladder.rabi.items():
        element = np.vdot(dicke_state(space, k + 1).amplitudes, H.matrix @ dicke_state(space, k).amplitudes)
        residuals.append(abs(element - rabi))
    return max(residuals) / _scale(H)


def run_validation(config: RunConfig, logger: logging.Logger = logging.getLogger()) -> list[CheckResult]:
    """
    Eigenstructure, unitarity, ideal-tier exactness, linearity and feasibility checks for one configuration.
    A failed check is a hard failure, feasibility conditions at most warn.
    """
    params = device_params(config)
    results: list[CheckResult] = []

    eigen = max(dicke_eigen_residual(n_controls, params) for n_controls in EIGEN_CONTROL_COUNTS)
    results.append(_bounded("dicke_eigenstructure", eigen, EIGEN_TOLERANCE, f"n_controls in {EIGEN_CONTROL_COUNTS}"))
    ladder = engineered_ladder_residual(config.n, params)
    results.append(_bounded("engineered_ladder", ladder, EIGEN_TOLERANCE, f"n={config.n}"))
    logger.info(f"Checked Dicke eigenstructure ({eigen:.3e}) and engineered ladder ({ladder:.3e})")

    schedule = build_schedule(config.n, params, Tier.T0, config.photon_cutoff, thresholds=config.thresholds, logger=logger)
    if schedule.space.dim <= DENSE_DIM_LIMIT:
        defect = 0.0
        for step in schedule.steps:
            if step.hamiltonian is not None:
                try:
                    defect = max(defect, expm_propagator(step.hamiltonian, step.duration).unitarity_defect())
                except ValueError as e:
                    logger.warning(f"Propagator of step ({step.label}) rejected: {e}")
                    defect = float("inf")
        results.append(_bounded("unitarity", defect, UNITARITY_TOLERANCE, "max |U^dagger U - I| over the steps"))
    else:
        results.append(CheckResult(name="unitarity", status=CheckStatus.warn, detail=f"skipped, dimension {schedule.space.dim} > {DENSE_DIM_LIMIT}"))

    report = extract_gate(schedule, logger=logger)
    results.append(_bounded("t0_exactness", report.max_deviation, GATE_TOLERANCE, f"max |realized - ideal| at theta={config.theta:.6g}"))

    indices = computational_indices(schedule.space)
    block = np.zeros((schedule.space.dim, 3), dtype=complex)
    block[indices[-1], 0] = 1.0
    block[indices[-2], 1] = 1.0
    block[:, 2] = 0.6 * block[:, 0] + 0.8j * block[:, 1]
    final, _ = propagate_schedule(schedule, block, logger=logger)
    linearity = float(np.abs(final[:, 2] - (0.6 * final[:, 0] + 0.8j * final[:, 1])).max())
    results.append(_bounded("linearity", linearity, LINEARITY_TOLERANCE, "superposed input vs superposed outputs"))

    for condition in feasibility_check(config.n, params, config.thresholds, logger=logger).conditions:
        if condition.status != CheckStatus.passed:
            logger.warning(f"Feasibility {condition.name}: {condition.detail}")
        results.append(
            CheckResult(name=f"feasibility.{condition.name}", status=condition.status, value=condition.value, limit=condition.threshold, detail=condition.detail)
        )

    failed = [result.name for result in results if result.failed]
    logger.info(f"Validation finished with {len(failed)} failures: {failed}")
    return results
