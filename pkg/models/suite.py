from typing import Any, Optional

from utils.common_constants import SuiteName
from utils.common_model_pydantics import BaseModelPy


class TrialOutcome(BaseModelPy):
    trial: int
    slack: float
    holds: bool
    detail: dict[str, Any]


class SuiteReport(BaseModelPy):
    suite: SuiteName
    seed: int
    trials: int
    failures: int
    worst_slack: float
    first_failure: Optional[dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0
