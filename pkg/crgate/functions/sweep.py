import itertools
import logging
import math
import typing as t
import pandas as pd
from crgate.functions.cache import cached_evaluation
from crgate.functions.config import device_params
from crgate.functions.estimates import leakage_estimates, total_time
from crgate.functions.gate import extract_gate
from crgate.functions.leakage import simulated_leakage
from crgate.functions.parallelism import par_map
from crgate.functions.schedule import build_schedule
from crgate.models.RunConfig import RunConfig

INTEGER_AXES = ("n", "photon_cutoff")
RESULT_COLUMNS = ("p1_formula", "p2_bound", "p1_simulated", "min_fidelity", "tau_total")


def sweep_points(config: RunConfig) -> list[dict[str, float]]:
    """Cartesian product of the sweep grids; axes by name, values ascending."""
    axes = sorted(config.sweep)
    grids = [[int(value) if axis in INTEGER_AXES else value for value in config.sweep[axis]] for axis in axes]
    return [dict(zip(axes, values)) for values in itertools.product(*grids)]


def apply_point(config: RunConfig, point: t.Mapping[str, float]) -> RunConfig:
    """
    Single-point configuration. `lambda_over_omega` sets the drive so that lambda / Omega equals it,
    using the coupling and detuning of the point.
    """
    updates = {axis: value for axis, value in point.items() if axis != "lambda_over_omega"}
    updated = RunConfig.model_validate({**config.model_dump(), **updates, "sweep": {}})
    if "lambda_over_omega" in point:
        f_lambda_hz = updated.f_g_hz / updated.delta_c_ratio
        updated = RunConfig.model_validate({**updated.model_dump(), "f_omega_hz": f_lambda_hz / point["lambda_over_omega"]})
    return updated


@cached_evaluation
def evaluate_point(config_json: str) -> dict[str, float]:
    config = RunConfig.model_validate_json(config_json)
    params = device_params(config)
    estimates = leakage_estimates(config.n, params)
    schedule = build_schedule(config.n, params, config.tier, config.photon_cutoff, config.steps_per_cavity_period, config.thresholds)
    return {
        "p1_formula": math.nan if estimates.p1 is None else estimates.p1,
        "p2_bound": math.nan if estimates.p2_bound is None else estimates.p2_bound,
        "p1_simulated": simulated_leakage(config.n, params, config.leakage_samples, config.photon_cutoff),
        "min_fidelity": extract_gate(schedule).min_fidelity,
        "tau_total": total_time(config.n, params).total,
    }


def run_sweep(config: RunConfig, logger: logging.Logger = logging.getLogger()) -> pd.DataFrame:
    """One row per grid point in sweep order; evaluation may run concurrently."""
    if not config.sweep:
        raise ValueError("The configuration defines no sweep axes")
    points = sweep_points(config)
    logger.info(f"Sweeping {len(points)} points over axes {sorted(config.sweep)}")

    def evaluate(point: dict[str, float]) -> dict[str, float]:
        row = evaluate_point(apply_point(config, point).model_dump_json())
        logger.info(f"Evaluated sweep point {point}")
        return {**point, **row}

    rows = par_map(points, evaluate)
    return pd.DataFrame(rows, columns=[*sorted(config.sweep), *RESULT_COLUMNS])
