import math
from typing import Optional

import numpy as np
from pydantic import field_validator, model_validator

from config.config import get_settings
from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import (
    EmptySpace,
    IndexOutOfRange,
    LengthMismatch,
    NegativeWeight,
    NonFiniteValue,
    NotNormalized,
)


class ProbabilitySpace(BaseModelPy):
    """Finite outcome set with a normalized weight vector (the measure P)."""

    weights: tuple[float, ...]
    labels: Optional[tuple[str, ...]] = None

    @field_validator("weights")
    @classmethod
    def _normalize_weights(cls, weights: tuple[float, ...]) -> tuple[float, ...]:
        if not weights:
            raise EmptySpace("a probability space needs at least one outcome")
        if not all(math.isfinite(w) for w in weights):
            raise NonFiniteValue("weights must be finite")
        negative = [i for i, w in enumerate(weights) if w < 0]
        if negative:
            raise NegativeWeight(f"negative weight at outcome {negative[0]}")

        total = math.fsum(weights)
        tolerance = get_settings().NORMALIZATION_TOLERANCE
        if abs(total - 1.0) > tolerance:
            raise NotNormalized(
                f"weights sum to {total!r}, more than {tolerance} away from 1"
            )
        return tuple(w / total for w in weights)

    @model_validator(mode="after")
    def _check_labels(self):
        if self.labels is not None and len(self.labels) != len(self.weights):
            raise LengthMismatch(
                f"{len(self.labels)} labels given for {len(self.weights)} outcomes"
            )
        return self

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    @property
    def positive_mask(self) -> np.ndarray:
        return self.array > 0

    def label(self, index: int) -> str:
        if self.labels is None:
            return f"w{index}"
        return self.labels[index]


class Event(BaseModelPy):
    """A subset of outcome indices bound to one probability space."""

    space: ProbabilitySpace
    members: frozenset[int]

    @model_validator(mode="after")
    def _check_indices(self):
        out_of_range = sorted(i for i in self.members if i < 0 or i >= self.space.n)
        if out_of_range:
            raise IndexOutOfRange(
                f"outcome index {out_of_range[0]} outside 0..{self.space.n - 1}"
            )
        return self

    @property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.space.n, dtype=bool)
        mask[list(self.members)] = True
        return mask

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.space.n

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:  # pragma: no cover - trivial
        return f"<Event {self.sorted_members()} of n={self.space.n}>"
