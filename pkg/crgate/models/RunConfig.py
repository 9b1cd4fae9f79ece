import math
import typing as t
from pydantic import BaseModel, ConfigDict, Field, field_validator
from crgate.models.Thresholds import Thresholds
from crgate.models.Tier import Tier

THETA_PRESETS: dict[str, float] = {
    # R(pi/4) is a rotation; the name follows the usual label of this preset.
    "hadamard-pi4": math.pi / 4,
}

SWEEP_AXES: tuple[str, ...] = (
    "delta_c_ratio",
    "f_g_hz",
    "f_omega_hz",
    "lambda_over_omega",
    "n",
    "photon_cutoff",
    "tau_a_s",
    "theta",
)


class RunConfig(BaseModel):
    """
    One run of the command line. Frequencies are in Hz, times in seconds.
    `f_delta_p_hz` overrides the drive detuning, otherwise it is (n - 1) g^2 / delta_c.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(default=3, ge=2)
    theta: float = math.pi / 4
    tier: Tier = Tier.T0

    f_g_hz: float = Field(default=220e6, gt=0)
    f_gprime_hz: float | None = Field(default=None, gt=0)
    f_gdprime_hz: float | None = Field(default=None, gt=0)
    f_omega_hz: float = Field(default=1.1e6, ge=0)
    delta_c_ratio: float = Field(default=10.0, gt=0)
    f_delta_p_hz: float | None = None
    nu_c_hz: float = Field(default=3e9, gt=0)
    Q: float = Field(default=5e4, gt=0)
    tau_a_s: float = Field(default=1e-9, ge=0)
    gamma2r_inv_s: float = Field(default=1e-6, gt=0)
    gamma2p_inv_s: float = Field(default=1e-6, gt=0)

    photon_cutoff: int = Field(default=3, ge=2)
    leakage_samples: int = Field(default=400, ge=100)
    steps_per_cavity_period: int = Field(default=50, ge=1)

    thresholds: Thresholds = Thresholds()
    sweep: dict[str, list[float]] = Field(default_factory=dict)

    @field_validator("theta", mode="before")
    @classmethod
    def _resolve_theta(cls, value: t.Any) -> t.Any:
        if isinstance(value, str):
            if value in THETA_PRESETS:
                return THETA_PRESETS[value]
            try:
                return float(value)
            except ValueError:
                raise ValueError(f"Unknown theta preset {value!r}, known presets: {sorted(THETA_PRESETS)}")
        return value

    @field_validator("theta")
    @classmethod
    def _check_theta(cls, value: float) -> float:
        if not 0 <= value < 2 * math.pi:
            raise ValueError(f"theta must be in [0, 2 pi), got {value}")
        return value

    @field_validator("sweep")
    @classmethod
    def _check_sweep(cls, value: dict[str, list[float]]) -> dict[str, list[float]]:
        for axis, grid in value.items():
            if axis not in SWEEP_AXES:
                raise ValueError(f"Unknown sweep axis {axis!r}, expected one of {SWEEP_AXES}")
            if not grid:
                raise ValueError(f"Sweep axis {axis!r} has an empty grid")
        return {axis: sorted(float(x) for x in value[axis]) for axis in sorted(value)}
