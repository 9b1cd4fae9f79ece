from pydantic import BaseModel, ConfigDict


class DickeLadder(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_controls: int
    J: float
    energies: dict[int, float]
    rabi: dict[int, float]
    detunings: dict[int, float]
