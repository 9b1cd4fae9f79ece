import math
from pydantic import BaseModel, ConfigDict, Field, model_validator


class DeviceParams(BaseModel):
    """
    Physical rates and frequencies. All angular quantities are in rad/s (hbar = 1), times in seconds.
    """
    model_config = ConfigDict(frozen=True)

    omega0: float
    omega_c: float = Field(gt=0)
    g: float = Field(gt=0)
    g_prime: float = Field(gt=0)
    g_dprime: float = Field(gt=0)
    Omega: float = Field(ge=0)
    omega_drive: float
    theta: float = Field(ge=0, lt=2 * math.pi)
    tau_a: float = Field(default=1e-9, ge=0)
    Q: float = Field(default=5e4, gt=0)
    nu_c: float = Field(default=3e9, gt=0)
    gamma2r_inv: float = Field(default=1e-6, gt=0)
    gamma2p_inv: float = Field(default=1e-6, gt=0)

    @model_validator(mode="after")
    def _check_detuning(self) -> "DeviceParams":
        if self.delta_c <= 0:
            raise ValueError(f"Cavity detuning omega_c - omega0 must be positive, got {self.delta_c}")
        return self

    @property
    def delta_c(self) -> float:
        return self.omega_c - self.omega0

    @property
    def delta_p(self) -> float:
        return self.omega0 - self.omega_drive

    @property
    def lam(self) -> float:
        """Dispersive coupling g^2 / delta_c."""
        return self.g ** 2 / self.delta_c

    @classmethod
    def from_detunings(
        cls,
        n: int,
        g: float,
        delta_c: float,
        Omega: float,
        theta: float,
        omega_c: float,
        g_prime: float | None = None,
        g_dprime: float | None = None,
        delta_p: float | None = None,
        **kwargs: float,
    ) -> "DeviceParams":
        """
        Builds parameters from detunings; the drive is placed at the W-state resonance
        delta_p = (n - 1) g^2 / delta_c unless `delta_p` is given.
        """
        omega0 = omega_c - delta_c
        if delta_p is None:
            delta_p = (n - 1) * g ** 2 / delta_c
        return cls(
            omega0=omega0,
            omega_c=omega_c,
            g=g,
            g_prime=g if g_prime is None else g_prime,
            g_dprime=g if g_dprime is None else g_dprime,
            Omega=Omega,
            omega_drive=omega0 - delta_p,
            theta=theta,
            **kwargs,
        )
