import math
import typing as t
from pathlib import Path
import toml
import tomli
from crgate.models.DeviceParams import DeviceParams
from crgate.models.RunConfig import RunConfig

SECTIONS: dict[str, tuple[str, ...]] = {
    "protocol": ("n", "theta", "tier"),
    "device": (
        "f_g_hz",
        "f_gprime_hz",
        "f_gdprime_hz",
        "f_omega_hz",
        "delta_c_ratio",
        "f_delta_p_hz",
        "nu_c_hz",
        "Q",
        "tau_a_s",
        "gamma2r_inv_s",
        "gamma2p_inv_s",
    ),
    "numerics": ("photon_cutoff", "leakage_samples", "steps_per_cavity_period"),
}
NESTED_SECTIONS = ("thresholds", "sweep")


def config_from_dict(document: dict[str, t.Any]) -> RunConfig:
    """Flattens the TOML tables into RunConfig fields, rejecting unknown tables and keys."""
    fields: dict[str, t.Any] = {}
    for section, values in document.items():
        if section in NESTED_SECTIONS:
            fields[section] = values
            continue
        if section not in SECTIONS:
            raise ValueError(f"Unknown config section [{section}], expected one of {sorted([*SECTIONS, *NESTED_SECTIONS])}")
        if not isinstance(values, dict):
            raise ValueError(f"Config section [{section}] must be a table")
        for key, value in values.items():
            if key not in SECTIONS[section]:
                raise ValueError(f"Unknown key {section}.{key}, expected one of {SECTIONS[section]}")
            fields[key] = value
    return RunConfig.model_validate(fields)


def parse_config(text: str) -> RunConfig:
    return config_from_dict(tomli.loads(text))


def load_config(path: str | Path | None = None) -> RunConfig:
    """Reads a TOML run configuration; every key has a default, so `None` gives the default run."""
    if path is None:
        return RunConfig()
    with open(path, "rb") as file:
        return config_from_dict(tomli.load(file))


def config_to_dict(config: RunConfig) -> dict[str, t.Any]:
    dumped = config.model_dump(mode="json")
    document: dict[str, t.Any] = {
        section: {key: dumped[key] for key in keys if dumped[key] is not None}
        for section, keys in SECTIONS.items()
    }
    document["thresholds"] = dumped["thresholds"]
    if dumped["sweep"]:
        document["sweep"] = dumped["sweep"]
    return document


def dump_config(config: RunConfig) -> str:
    return toml.dumps(config_to_dict(config))


def with_overrides(config: RunConfig, **overrides: t.Any) -> RunConfig:
    """Revalidated copy with the non-None overrides applied."""
    updates = {key: value for key, value in overrides.items() if value is not None}
    return RunConfig.model_validate({**config.model_dump(), **updates})


def device_params(config: RunConfig) -> DeviceParams:
    """Converts the Hz/second configuration to angular rates (omega = 2 pi f)."""
    g = 2 * math.pi * config.f_g_hz
    return DeviceParams.from_detunings(
        n=config.n,
        g=g,
        delta_c=config.delta_c_ratio * g,
        Omega=2 * math.pi * config.f_omega_hz,
        theta=config.theta,
        omega_c=2 * math.pi * config.nu_c_hz,
        g_prime=None if config.f_gprime_hz is None else 2 * math.pi * config.f_gprime_hz,
        g_dprime=None if config.f_gdprime_hz is None else 2 * math.pi * config.f_gdprime_hz,
        delta_p=None if config.f_delta_p_hz is None else 2 * math.pi * config.f_delta_p_hz,
        tau_a=config.tau_a_s,
        Q=config.Q,
        nu_c=config.nu_c_hz,
        gamma2r_inv=config.gamma2r_inv_s,
        gamma2p_inv=config.gamma2p_inv_s,
    )
