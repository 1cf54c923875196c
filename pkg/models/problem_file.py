from typing import Optional

from pydantic import model_validator

from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import ProblemFileError


class ProblemFile(BaseModelPy):
    """JSON input of the command-line tool. Outcome indices are 0-based."""

    weights: list[float]
    labels: Optional[list[str]] = None
    partition: list[list[int]]
    event: Optional[list[int]] = None
    target: Optional[list[float]] = None

    @model_validator(mode="after")
    def _check_target_choice(self):
        if self.event is not None and self.target is not None:
            raise ProblemFileError("'event' and 'target' are mutually exclusive")
        return self

    def require_target_source(self) -> None:
        if self.event is None and self.target is None:
            raise ProblemFileError("exactly one of 'event' or 'target' is required")
