from pydantic import BaseModel, ConfigDict, model_validator
from crgate.models.DeviceParams import DeviceParams
from crgate.models.ProtocolStep import STEP_LABELS, ProtocolStep
from crgate.models.SpaceDescriptor import SpaceDescriptor
from crgate.models.Tier import Tier


class Schedule(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: tuple[ProtocolStep, ...]
    params: DeviceParams
    n: int
    tier: Tier
    space: SpaceDescriptor
    sample_dt: float | None = None

    @model_validator(mode="after")
    def _check_steps(self) -> "Schedule":
        labels = tuple(step.label for step in self.steps)
        if labels != STEP_LABELS:
            raise ValueError(f"Schedule must hold steps {STEP_LABELS} in order, got {labels}")
        if self.space.n_systems != self.n:
            raise ValueError(f"Schedule for n={self.n} built on a space with {self.space.n_systems} systems")
        return self

    @property
    def durations(self) -> dict[str, float]:
        return {step.label: step.duration for step in self.steps}

    @property
    def total_duration(self) -> float:
        return sum(step.duration for step in self.steps)
