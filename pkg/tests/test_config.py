import math
from pathlib import Path
import pytest
from crgate.functions.config import config_to_dict, device_params, dump_config, load_config, parse_config, with_overrides
from crgate.models.RunConfig import RunConfig
from crgate.models.Tier import Tier

CONFIGS = Path(__file__).parent.parent / "configs"


def test_defaults() -> None:
    config = load_config()
    assert config == RunConfig()
    assert config.theta == math.pi / 4
    assert config.tier == Tier.T0
    assert config.sweep == {}


def test_round_trip() -> None:
    config = RunConfig(
        n=5,
        theta=1.234567890123,
        tier=Tier.T1,
        f_omega_hz=0.7e6,
        f_gprime_hz=180e6,
        delta_c_ratio=12.5,
        sweep={"theta": [0.5, 0.1], "n": [4, 3]},
    )
    assert parse_config(dump_config(config)) == config


def test_sections() -> None:
    document = config_to_dict(RunConfig())
    assert set(document) == {"protocol", "device", "numerics", "thresholds"}
    assert "f_gprime_hz" not in document["device"]


def test_six_qubit_config() -> None:
    config = load_config(CONFIGS / "six_qubit_pi4.toml")
    assert config.n == 6
    assert config.theta == math.pi / 4
    assert config.tier == Tier.T1
    assert config.sweep == {"lambda_over_omega": [10.0, 20.0, 40.0]}


def test_lab_frame_config() -> None:
    config = load_config(CONFIGS / "lab_frame_check.toml")
    assert config.tier == Tier.T2
    assert config.steps_per_cavity_period == 1500
    assert device_params(config).omega0 > 0


def test_theta_presets() -> None:
    assert parse_config('[protocol]\ntheta = "hadamard-pi4"').theta == math.pi / 4
    assert parse_config('[protocol]\ntheta = "0.5"').theta == 0.5


@pytest.mark.parametrize(
    "text",
    [
        "[pulse]\nn = 3",
        "[protocol]\nomega = 3",
        "[device]\nn = 3",
        'protocol = "T0"',
        '[protocol]\ntheta = "pi-half"',
        "[protocol]\ntheta = 7.0",
        "[protocol]\nn = 1",
        '[protocol]\ntier = "T3"',
        "[numerics]\nphoton_cutoff = 1",
        "[numerics]\nleakage_samples = 50",
        "[device]\nf_g_hz = -1.0",
        "[thresholds]\nblockade = 0.0",
        "[sweep]\nomega = [1.0]",
        "[sweep]\nn = []",
    ],
)
def test_rejects(text: str) -> None:
    with pytest.raises(ValueError):
        parse_config(text)


def test_missing_file() -> None:
    with pytest.raises(OSError):
        load_config(CONFIGS / "missing.toml")


def test_overrides() -> None:
    config = with_overrides(RunConfig(), n=5, theta="hadamard-pi4", tier=None)
    assert config.n == 5
    assert config.tier == Tier.T0
    with pytest.raises(ValueError):
        with_overrides(RunConfig(), n=0)


def test_device_params() -> None:
    params = device_params(RunConfig(n=6))
    g = 2 * math.pi * 220e6
    assert params.g == pytest.approx(g)
    assert params.g_prime == params.g_dprime == params.g
    assert params.delta_c == pytest.approx(10 * g)
    assert params.lam / params.Omega == pytest.approx(20.0)
    assert params.delta_p == pytest.approx(5 * params.lam)
    assert params.omega_c == pytest.approx(2 * math.pi * 3e9)


def test_device_params_with_detuning_override() -> None:
    params = device_params(RunConfig(f_delta_p_hz=2e6, f_gdprime_hz=100e6))
    assert params.delta_p == pytest.approx(2 * math.pi * 2e6)
    assert params.g_dprime == pytest.approx(2 * math.pi * 100e6)
