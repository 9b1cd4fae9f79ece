import logging
import math
from crgate.functions.dicke import blockade_margin, l_sector_leakage
from crgate.models.DeviceParams import DeviceParams
from crgate.models.FeasibilityReport import CheckStatus, ConditionResult, FeasibilityReport
from crgate.models.LeakageEstimates import LeakageEstimates
from crgate.models.Thresholds import Thresholds
from crgate.models.TimingBreakdown import TimingBreakdown

PROTOCOL_STEPS = 7
# Ratios within this relative distance of a threshold count as reaching it.
BOUNDARY_TOLERANCE = 1e-9
DRIVE_DETUNING_RTOL = 1e-9


def leakage_estimates(n: int, params: DeviceParams, logger: logging.Logger = logging.getLogger()) -> LeakageEstimates:
    """
    p1 = Omega^2 / (Omega^2 + lambda^2 / [2 (n-2)]) for the |J,-J+2> rung and the bound
    p2 <= Omega^2 / (Omega^2 + lambda^2 / [4 (n-2)]) over the l-sectors. Not applicable for n < 3.
    """
    if n < 3:
        logger.info(f"Leakage estimates need n >= 3, got n={n}")
        return LeakageEstimates(n=n, p1=None, p2_bound=None)

    Omega2, lam2 = params.Omega ** 2, params.lam ** 2
    p1 = Omega2 / (Omega2 + lam2 / (2 * (n - 2))) if Omega2 > 0 else 0.0
    p2_bound = Omega2 / (Omega2 + lam2 / (4 * (n - 2))) if Omega2 > 0 else 0.0
    by_sector = {l: l_sector_leakage(l, n, params.Omega, params.lam) for l in range(1, n)}
    return LeakageEstimates(n=n, p1=p1, p2_bound=p2_bound, p2_by_sector=by_sector)


def total_time(n: int, params: DeviceParams) -> TimingBreakdown:
    """tau = pi/(Omega sqrt(n-1)) + pi/(g' sqrt(n-1)) + 2 pi/g' + theta/g'' + 8 tau_a."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if params.Omega <= 0:
        raise ValueError(f"Operation time needs a positive Rabi rate, got Omega={params.Omega}")
    root = math.sqrt(n - 1)
    return TimingBreakdown(
        n=n,
        pulse=math.pi / (params.Omega * root),
        collective=math.pi / (params.g_prime * root),
        target=2 * math.pi / params.g_prime,
        rotation=params.theta / params.g_dprime,
        adjustment=8 * params.tau_a,
    )


def decomposition_step_count(n: int) -> int:
    """Two-qubit gates of the standard decomposition of an n-qubit controlled gate."""
    if n < 3:
        raise ValueError(f"The decomposition count is defined for n >= 3, got n={n}")
    return 2 ** n - 3


def cavity_lifetime(params: DeviceParams) -> float:
    """kappa^-1 = Q / (2 pi nu_c)."""
    return params.Q / (2 * math.pi * params.nu_c)


def coherence_margins(n: int, params: DeviceParams) -> dict[str, float]:
    tau = total_time(n, params).total
    return {
        "cavity_lifetime": tau / cavity_lifetime(params),
        "relaxation": tau / params.gamma2r_inv,
        "dephasing": tau / params.gamma2p_inv,
    }


def _ratio_condition(name: str, value: float, threshold: float, description: str) -> ConditionResult:
    reached = value >= threshold * (1 - BOUNDARY_TOLERANCE)
    return ConditionResult(
        name=name,
        value=value,
        threshold=threshold,
        status=CheckStatus.warn if reached else CheckStatus.passed,
        detail=f"{description} = {value:.6g} {'>=' if reached else '<'} {threshold:.6g}",
    )


def feasibility_check(
    n: int,
    params: DeviceParams,
    thresholds: Thresholds = Thresholds(),
    logger: logging.Logger = logging.getLogger(),
) -> FeasibilityReport:
    """
    Validity conditions of the dispersive protocol and the coherence budget. Conditions never fail,
    they warn when a "much less than" ratio reaches its threshold or the drive is off resonance.
    """
    timing = total_time(n, params)
    kappa_inv = cavity_lifetime(params)
    margins = coherence_margins(n, params)
    expected_delta_p = (n - 1) * params.lam
    consistent = math.isclose(params.delta_p, expected_delta_p, rel_tol=DRIVE_DETUNING_RTOL, abs_tol=0.0)

    conditions = [
        _ratio_condition("dispersive", params.g / params.delta_c, thresholds.dispersive, "g / delta_c"),
        _ratio_condition("blockade", blockade_margin(n, params.Omega, params.lam), thresholds.blockade, "Omega sqrt(n-1) / lambda"),
        ConditionResult(
            name="drive_detuning",
            value=params.delta_p,
            threshold=expected_delta_p,
            status=CheckStatus.passed if consistent else CheckStatus.warn,
            detail=f"delta_p = {params.delta_p:.6g} rad/s, (n-1) g^2/delta_c = {expected_delta_p:.6g} rad/s",
        ),
        _ratio_condition("cavity_lifetime", margins["cavity_lifetime"], thresholds.coherence, "tau / kappa^-1"),
        _ratio_condition("relaxation", margins["relaxation"], thresholds.coherence, "tau / gamma_2r^-1"),
        _ratio_condition("dephasing", margins["dephasing"], thresholds.coherence, "tau / gamma_2p^-1"),
    ]
    report = FeasibilityReport(n=n, conditions=conditions, kappa_inv=kappa_inv, tau=timing.total)
    logger.info(f"Feasibility for n={n}: {len(report.warnings)} of {len(conditions)} conditions warn")
    return report
