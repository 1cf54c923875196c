import math

import numpy as np
from pydantic import field_validator, model_validator

from config.config import get_settings
from models.space import ProbabilitySpace
from utils.common_constants import InequalityName
from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import BadExponent, LengthMismatch, NonFiniteValue


class RandomVariable(BaseModelPy):
    """A real value per outcome of a finite probability space."""

    space: ProbabilitySpace
    values: tuple[float, ...]

    @model_validator(mode="after")
    def _check_values(self):
        if len(self.values) != self.space.n:
            raise LengthMismatch(
                f"{len(self.values)} values given for {self.space.n} outcomes"
            )
        if not all(math.isfinite(v) for v in self.values):
            raise NonFiniteValue("random variable values must be finite")
        return self

    @classmethod
    def from_array(cls, space: ProbabilitySpace, values) -> "RandomVariable":
        return cls(space=space, values=tuple(float(v) for v in np.asarray(values).ravel()))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


class PNorm(BaseModelPy):
    p: float

    @field_validator("p")
    @classmethod
    def _check_p(cls, p: float) -> float:
        if not math.isfinite(p) or p < 1:
            raise BadExponent(f"norm exponent must lie in [1, inf), got {p}")
        return p


class InequalityReport(BaseModelPy):
    """Both sides of an inequality lhs <= rhs evaluated on concrete inputs."""

    name: InequalityName
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= -get_settings().SLACK_TOLERANCE
