from pydantic import BaseModel, ConfigDict, Field


class Thresholds(BaseModel):
    """Numeric readings of "much less than"; a condition warns when its ratio reaches the threshold."""
    model_config = ConfigDict(frozen=True)

    dispersive: float = Field(default=0.1, gt=0)  # g / delta_c
    blockade: float = Field(default=0.1, gt=0)  # Omega sqrt(n-1) / lambda
    coherence: float = Field(default=0.1, gt=0)  # tau / kappa^-1, tau / gamma^-1
