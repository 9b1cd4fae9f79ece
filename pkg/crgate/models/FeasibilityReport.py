from enum import Enum
from pydantic import BaseModel


class CheckStatus(str, Enum):
    passed = "pass"
    warn = "warn"
    fail = "fail"


class ConditionResult(BaseModel):
    name: str
    value: float
    threshold: float | None
    status: CheckStatus
    detail: str = ""


class FeasibilityReport(BaseModel):
    n: int
    conditions: list[ConditionResult]
    kappa_inv: float
    tau: float

    @property
    def warnings(self) -> list[ConditionResult]:
        return [c for c in self.conditions if c.status != CheckStatus.passed]

    def __getitem__(self, name: str) -> ConditionResult:
        for condition in self.conditions:
            if condition.name == name:
                return condition
        raise KeyError(name)
