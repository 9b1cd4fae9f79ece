from pydantic import BaseModel


class TimingBreakdown(BaseModel):
    n: int
    pulse: float  # pi / (Omega sqrt(n-1)), steps (i) + (vii)
    collective: float  # pi / (g' sqrt(n-1)), steps (ii) + (vi)
    target: float  # 2 pi / g', steps (iii) + (v)
    rotation: float  # theta / g'', step (iv)
    adjustment: float  # 8 tau_a

    @property
    def total(self) -> float:
        return self.pulse + self.collective + self.target + self.rotation + self.adjustment

    @property
    def n_dependent(self) -> float:
        return self.pulse + self.collective

    def as_rows(self) -> list[tuple[str, float]]:
        return [
            ("pulse (i)+(vii)", self.pulse),
            ("collective (ii)+(vi)", self.collective),
            ("target (iii)+(v)", self.target),
            ("rotation (iv)", self.rotation),
            ("level adjustment", self.adjustment),
            ("total", self.total),
        ]
