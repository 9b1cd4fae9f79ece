import logging
import math
from crgate.functions.estimates import feasibility_check
from crgate.functions.hamiltonians import (
    h_engineered,
    h_resonant_collective,
    h_resonant_target_02,
    h_resonant_target_12,
    h_two_level,
)
from crgate.functions.hilbert import build_space
from crgate.functions.utils import should_not_happen
from crgate.models.DeviceParams import DeviceParams
from crgate.models.LinearOperator import LinearOperator
from crgate.models.ProtocolStep import STEP_LABELS, ProtocolStep
from crgate.models.Schedule import Schedule
from crgate.models.SpaceDescriptor import SpaceDescriptor
from crgate.models.Thresholds import Thresholds
from crgate.models.Tier import Tier

LAB_FRAME_TAG = "jc+drive"


def step_durations(n: int, params: DeviceParams) -> dict[str, float]:
    """Durations of steps (i)..(vii) in seconds."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if params.Omega <= 0:
        raise ValueError(f"The pulse steps need a positive Rabi rate, got Omega={params.Omega}")
    root = math.sqrt(n - 1)  # sqrt(2J)
    pulse = math.pi / (2 * root * params.Omega)
    collective = math.pi / (2 * root * params.g_prime)
    return {
        "i": pulse,
        "ii": collective,
        "iii": math.pi / (2 * params.g_prime),
        "iv": params.theta / params.g_dprime,
        "v": 3 * math.pi / (2 * params.g_prime),
        "vi": collective,
        "vii": pulse,
    }


def _pulse_hamiltonian(space: SpaceDescriptor, params: DeviceParams, tier: Tier) -> LinearOperator | None:
    return (
        h_two_level(space, space.controls, params) if tier == Tier.T0
        else h_engineered(space, space.controls, params) if tier == Tier.T1
        else None if tier == Tier.T2
        else should_not_happen(f"Unknown tier {tier}")
    )


def build_schedule(
    n: int,
    params: DeviceParams,
    tier: Tier,
    photon_cutoff: int = 3,
    steps_per_cavity_period: int = 50,
    thresholds: Thresholds = Thresholds(),
    logger: logging.Logger = logging.getLogger(),
) -> Schedule:
    """
    Seven timed segments. Steps (i)/(vii) depend on the tier, the resonant steps (ii)-(vi) are shared.
    Level-spacing adjustments between steps are instantaneous switches.
    """
    space = build_space(n, photon_cutoff)
    durations = step_durations(n, params)

    for condition in feasibility_check(n, params, thresholds).warnings:
        logger.warning(f"Feasibility {condition.name}: {condition.detail}")

    if tier == Tier.T2 and params.omega0 <= 0:
        raise ValueError(f"Tier T2 runs in the lab frame and needs omega0 > 0, got {params.omega0}")

    pulse = _pulse_hamiltonian(space, params, tier)
    pulse_tag = pulse.tag if pulse is not None else LAB_FRAME_TAG
    collective = h_resonant_collective(space, space.controls, params)
    target_12 = h_resonant_target_12(space, space.target, params)
    resonant: dict[str, LinearOperator] = {
        "ii": collective,
        "iii": target_12,
        "iv": h_resonant_target_02(space, space.target, params),
        "v": target_12,
        "vi": collective,
    }

    steps = tuple(
        ProtocolStep(
            label=label,
            hamiltonian_tag=resonant[label].tag if label in resonant else pulse_tag,
            duration=durations[label],
            active_systems=space.controls if label in ("i", "ii", "vi", "vii") else (space.target,),
            tier=tier,
            hamiltonian=resonant.get(label, pulse),
            sampled=pulse is None and label not in resonant,
        )
        for label in STEP_LABELS
    )
    sample_dt = (2 * math.pi / params.omega_c) / steps_per_cavity_period if tier == Tier.T2 else None
    logger.info(f"Built {tier.value} schedule for n={n}, total duration {sum(durations.values()):.6g} s")
    return Schedule(steps=steps, params=params, n=n, tier=tier, space=space, sample_dt=sample_dt)
