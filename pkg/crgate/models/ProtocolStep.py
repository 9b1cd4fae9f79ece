import typing as t
from pydantic import BaseModel, ConfigDict, Field
from crgate.models.LinearOperator import LinearOperator
from crgate.models.Tier import Tier

StepLabel = t.Literal["i", "ii", "iii", "iv", "v", "vi", "vii"]
STEP_LABELS: tuple[StepLabel, ...] = ("i", "ii", "iii", "iv", "v", "vi", "vii")


class ProtocolStep(BaseModel):
    """
    One timed Hamiltonian segment. `hamiltonian` is None for lab-frame steps,
    which are rebuilt at every sample time by the runner.
    """
    model_config = ConfigDict(frozen=True)

    label: StepLabel
    hamiltonian_tag: str
    duration: float = Field(ge=0)
    active_systems: tuple[int, ...]
    tier: Tier
    hamiltonian: LinearOperator | None = None
    sampled: bool = False
