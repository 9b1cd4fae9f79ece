import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from crgate.models.KetState import KetState
from crgate.models.SpaceDescriptor import SpaceDescriptor

UNITARITY_TOLERANCE = 1e-9


class Propagator(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    space: SpaceDescriptor
    unitary: np.ndarray
    duration: float
    hamiltonian_tag: str = ""

    @field_validator("unitary", mode="before")
    @classmethod
    def _as_complex_matrix(cls, value: object) -> np.ndarray:
        return np.asarray(value, dtype=complex)

    @model_validator(mode="after")
    def _check_unitary(self) -> "Propagator":
        if self.unitary.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"Propagator shape {self.unitary.shape} does not match space dimension {self.space.dim}")
        if self.unitarity_defect() >= UNITARITY_TOLERANCE:
            raise ValueError(f"Propagator for {self.hamiltonian_tag!r} is not unitary: defect {self.unitarity_defect():.3e}")
        return self

    def unitarity_defect(self) -> float:
        """max |U^dagger U - I|."""
        return float(np.abs(self.unitary.conj().T @ self.unitary - np.eye(self.space.dim)).max())

    def apply(self, state: KetState) -> KetState:
        if state.space != self.space:
            raise ValueError(f"Space mismatch: propagator on {self.space}, state on {state.space}")
        return KetState(space=self.space, amplitudes=self.unitary @ state.amplitudes)

    def apply_block(self, block: np.ndarray) -> np.ndarray:
        return self.unitary @ block
