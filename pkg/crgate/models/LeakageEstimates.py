from pydantic import BaseModel


class LeakageEstimates(BaseModel):
    """Two-level occupation estimates of the unwanted Dicke rungs; None when n < 3."""
    n: int
    p1: float | None
    p2_bound: float | None
    p2_by_sector: dict[int, float] = {}

    @property
    def applicable(self) -> bool:
        return self.p1 is not None
