from pydantic import BaseModel
from crgate.models.FeasibilityReport import CheckStatus


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    value: float | None = None
    limit: float | None = None
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == CheckStatus.fail
