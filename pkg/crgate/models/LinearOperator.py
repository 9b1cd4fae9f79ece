from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from crgate.models.KetState import KetState
from crgate.models.SpaceDescriptor import SpaceDescriptor

HERMITIAN_TOLERANCE = 1e-12


def hermiticity_defect(matrix: sp.csr_matrix) -> float:
    """Largest entry of |M - M^dagger| relative to max(1, largest |M| entry)."""
    difference = abs(matrix - matrix.conj().T)
    scale = max(1.0, float(abs(matrix).max())) if matrix.nnz else 1.0
    return (float(difference.max()) if difference.nnz else 0.0) / scale


class LinearOperator(BaseModel):
    """
    Complex operator over a SpaceDescriptor. Storage is CSR, semantics are those of the dense matrix.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    space: SpaceDescriptor
    matrix: sp.csr_matrix
    hermitian: bool = False
    tag: str = ""

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_csr(cls, value: object) -> sp.csr_matrix:
        return sp.csr_matrix(value, dtype=complex)

    @model_validator(mode="after")
    def _check(self) -> "LinearOperator":
        if self.matrix.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"Operator shape {self.matrix.shape} does not match space dimension {self.space.dim}")
        if self.hermitian and hermiticity_defect(self.matrix) >= HERMITIAN_TOLERANCE:
            raise ValueError(f"Operator {self.tag!r} is flagged Hermitian but M != M^dagger")
        return self

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def dagger(self) -> LinearOperator:
        return LinearOperator(space=self.space, matrix=self.matrix.conj().T, hermitian=self.hermitian, tag=f"{self.tag}^dagger" if self.tag else "")

    def is_hermitian(self, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
        return hermiticity_defect(self.matrix) < tolerance

    def with_tag(self, tag: str, hermitian: bool | None = None) -> LinearOperator:
        return LinearOperator(space=self.space, matrix=self.matrix, hermitian=self.hermitian if hermitian is None else hermitian, tag=tag)

    def apply(self, state: KetState) -> KetState:
        if state.space != self.space:
            raise ValueError(f"Space mismatch: operator on {self.space}, state on {state.space}")
        return KetState(space=self.space, amplitudes=self.matrix @ state.amplitudes)

    def commutator(self, other: LinearOperator) -> LinearOperator:
        return self @ other - other @ self

    def _check_space(self, other: LinearOperator) -> None:
        if other.space != self.space:
            raise ValueError(f"Space mismatch: {self.space} vs {other.space}")

    def __add__(self, other: LinearOperator) -> LinearOperator:
        self._check_space(other)
        return LinearOperator(space=self.space, matrix=self.matrix + other.matrix, hermitian=self.hermitian and other.hermitian)

    def __sub__(self, other: LinearOperator) -> LinearOperator:
        self._check_space(other)
        return LinearOperator(space=self.space, matrix=self.matrix - other.matrix, hermitian=self.hermitian and other.hermitian)

    def __mul__(self, factor: complex) -> LinearOperator:
        real_factor = complex(factor).imag == 0.0
        return LinearOperator(space=self.space, matrix=self.matrix * factor, hermitian=self.hermitian and real_factor)

    __rmul__ = __mul__

    def __matmul__(self, other: LinearOperator) -> LinearOperator:
        self._check_space(other)
        return LinearOperator(space=self.space, matrix=self.matrix @ other.matrix)
