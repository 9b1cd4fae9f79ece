import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from crgate.models.Tier import Tier

SECTOR_TOLERANCE = 1e-9


class GateReport(BaseModel):
    """
    Realized gate over the computational (levels 0/1) x vacuum sector.
    Column j of `realized_gate` is the projected final state of input `input_labels[j]`.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    theta: float
    tier: Tier
    input_labels: list[str]
    realized_gate: np.ndarray
    ideal_gate: np.ndarray
    per_input_fidelity: dict[str, float]
    leakage: dict[str, float]
    cavity_population: dict[str, float]
    phase_table: dict[str, float]
    step_durations: dict[str, float]
    in_sector_population: dict[str, float] = Field(default_factory=dict)

    @field_validator("realized_gate", "ideal_gate", mode="before")
    @classmethod
    def _as_complex_matrix(cls, value: object) -> np.ndarray:
        return np.asarray(value, dtype=complex)

    @model_validator(mode="after")
    def _check(self) -> "GateReport":
        size = 2 ** self.n
        if self.realized_gate.shape != (size, size) or self.ideal_gate.shape != (size, size):
            raise ValueError(f"Gate matrices must be {size}x{size}, got {self.realized_gate.shape} and {self.ideal_gate.shape}")
        for label, fidelity in self.per_input_fidelity.items():
            if not -SECTOR_TOLERANCE <= fidelity <= 1 + SECTOR_TOLERANCE:
                raise ValueError(f"Fidelity {fidelity} of input {label} outside [0, 1]")
        for label, population in self.in_sector_population.items():
            if abs(population + self.leakage[label] - 1) > SECTOR_TOLERANCE:
                raise ValueError(f"Leakage and in-sector population of input {label} do not add up to 1")
        return self

    @property
    def dimension(self) -> int:
        return 2 ** self.n

    @property
    def total_duration(self) -> float:
        return sum(self.step_durations.values())

    @property
    def max_deviation(self) -> float:
        return float(np.abs(self.realized_gate - self.ideal_gate).max())

    @property
    def overlap_trace(self) -> complex:
        return complex(np.trace(self.ideal_gate.conj().T @ self.realized_gate))

    @property
    def process_fidelity(self) -> float:
        """|Tr(U^dagger M)|^2 / d^2, insensitive to a global phase."""
        return abs(self.overlap_trace) ** 2 / self.dimension ** 2

    @property
    def average_gate_fidelity(self) -> float:
        d = self.dimension
        purity_term = float(np.real(np.trace(self.realized_gate @ self.realized_gate.conj().T)))
        return (purity_term + abs(self.overlap_trace) ** 2) / (d * (d + 1))

    @property
    def min_fidelity(self) -> float:
        return min(self.per_input_fidelity.values())

    @property
    def max_leakage(self) -> float:
        return max(self.leakage.values())

    @property
    def worst_input(self) -> str:
        return max(self.leakage, key=lambda label: self.leakage[label])
