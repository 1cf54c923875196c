from typing import Optional

import numpy as np

from models.random_variable import RandomVariable
from models.sigma import Partition
from utils.common_model_pydantics import BaseModelPy


class ConditionalExpectation(BaseModelPy):
    """xi = sum_j alpha_j 1_{B_j}, the conditional expectation given sigma(B)."""

    partition: Partition
    coefficients: tuple[float, ...]
    as_variable: RandomVariable

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)


class PropertyReport(BaseModelPy):
    """Outcome of auditing a candidate xi against the defining properties."""

    measurable: bool
    integrable: bool
    property_iii_max_violation: float
    worst_member: Optional[tuple[int, ...]] = None
    members_checked: int
    partial: bool = False
    tolerance: float

    @property
    def property_iii_holds(self) -> bool:
        return self.property_iii_max_violation <= self.tolerance

    @property
    def passed(self) -> bool:
        return self.measurable and self.integrable and self.property_iii_holds


class MeasureEntry(BaseModelPy):
    """Q(B) = integral of the target over B next to P(B) for one member B."""

    member: tuple[int, ...]
    q: float
    p: float
