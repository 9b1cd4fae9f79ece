from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from crgate.models.SpaceDescriptor import SpaceDescriptor


class KetState(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    space: SpaceDescriptor
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_complex_vector(cls, value: object) -> np.ndarray:
        return np.asarray(value, dtype=complex).reshape(-1)

    @model_validator(mode="after")
    def _check_length(self) -> "KetState":
        if self.amplitudes.shape[0] != self.space.dim:
            raise ValueError(f"State has {self.amplitudes.shape[0]} amplitudes, space dimension is {self.space.dim}")
        return self

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> KetState:
        norm = self.norm()
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero vector.")
        return KetState(space=self.space, amplitudes=self.amplitudes / norm)

    def _check_space(self, other: KetState) -> None:
        if other.space != self.space:
            raise ValueError(f"Space mismatch: {self.space} vs {other.space}")

    def __add__(self, other: KetState) -> KetState:
        self._check_space(other)
        return KetState(space=self.space, amplitudes=self.amplitudes + other.amplitudes)

    def __sub__(self, other: KetState) -> KetState:
        self._check_space(other)
        return KetState(space=self.space, amplitudes=self.amplitudes - other.amplitudes)

    def __mul__(self, factor: complex) -> KetState:
        return KetState(space=self.space, amplitudes=self.amplitudes * factor)

    __rmul__ = __mul__
