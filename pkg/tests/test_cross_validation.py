import math
from crgate.functions.config import device_params
from crgate.functions.cross_validation import dispersive_cross_check
from crgate.functions.gate import extract_gate
from crgate.functions.schedule import build_schedule
from crgate.models.RunConfig import RunConfig
from crgate.models.Tier import Tier


def lab_frame_config(delta_c_ratio: float) -> RunConfig:
    return RunConfig(n=2, tier=Tier.T2, f_g_hz=220e6, f_omega_hz=11e6, nu_c_hz=12e9, delta_c_ratio=delta_c_ratio, photon_cutoff=3)


def test_lab_frame_pulse_approaches_engineered_pulse() -> None:
    infidelities = [dispersive_cross_check(device_params(lab_frame_config(ratio))) for ratio in (10.0, 20.0, 40.0)]
    assert all(0 <= value <= 0.05 for value in infidelities)
    assert infidelities[0] > infidelities[1] > infidelities[2]


def test_lab_frame_gate() -> None:
    config = lab_frame_config(20.0)
    params = device_params(config)
    report = extract_gate(build_schedule(2, params, Tier.T2, config.photon_cutoff, config.steps_per_cavity_period))
    assert report.tier == Tier.T2
    assert report.min_fidelity > 0.9
    assert report.theta == math.pi / 4
