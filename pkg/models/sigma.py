import math
from functools import cached_property
from typing import Iterator, Optional

import numpy as np
from pydantic import model_validator

from config.config import get_settings
from models.space import Event, ProbabilitySpace
from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import (
    EmptySpace,
    NotCovering,
    NotDisjoint,
    SpaceMismatch,
    ZeroMassBlock,
)


class Partition(BaseModelPy):
    """Ordered, positive-mass, disjoint cover B_1..B_N of the outcome set.

    Block order is the order given by the caller and fixes coefficient
    indexing everywhere downstream.
    """

    space: ProbabilitySpace
    blocks: tuple[Event, ...]
    block_probs: tuple[float, ...] = ()

    @model_validator(mode="after")
    def _check_partition(self):
        if not self.blocks:
            raise EmptySpace("a partition needs at least one block")

        seen: dict[int, int] = {}
        for j, block in enumerate(self.blocks):
            if block.space is not self.space and block.space.weights != self.space.weights:
                raise SpaceMismatch(f"block {j} is bound to a different space")
            for i in block.members:
                if i in seen:
                    raise NotDisjoint(
                        f"outcome {i} appears in blocks {seen[i]} and {j}"
                    )
                seen[i] = j

        missing = sorted(set(range(self.space.n)) - seen.keys())
        if missing:
            raise NotCovering(f"outcome {missing[0]} is not covered by any block")

        weights = self.space.weights
        probs = tuple(
            1.0 if block.is_full else math.fsum(weights[i] for i in block.sorted_members())
            for block in self.blocks
        )
        for j, p in enumerate(probs):
            if p <= 0:
                raise ZeroMassBlock(f"block {j} has probability zero")

        # block_probs is derived; a caller-supplied value is replaced
        object.__setattr__(self, "block_probs", probs)
        return self

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def probs_array(self) -> np.ndarray:
        return np.asarray(self.block_probs, dtype=float)

    @property
    def indicator_matrix(self) -> np.ndarray:
        """(N, n) 0/1 matrix whose row j is the indicator of B_j."""
        return np.vstack([block.mask for block in self.blocks]).astype(float)

    @property
    def block_of(self) -> np.ndarray:
        """Block index of every outcome."""
        owner = np.empty(self.space.n, dtype=int)
        for j, block in enumerate(self.blocks):
            owner[block.sorted_members()] = j
        return owner


class SigmaAlgebra(BaseModelPy):
    """The sigma-algebra generated by a partition: every union of blocks.

    Members are indexed by a bitmask tau over block indices (tau = 0 is the
    empty set). They are materialized once, on first access to ``enumerated``,
    and only while N stays within ``ENUMERATION_LIMIT``.
    """

    partition: Partition

    @property
    def size(self) -> int:
        return 2 ** self.partition.size

    @property
    def is_enumerable(self) -> bool:
        return self.partition.size <= get_settings().ENUMERATION_LIMIT

    def member(self, tau: int) -> Event:
        outcomes: set[int] = set()
        for t, block in enumerate(self.partition.blocks):
            if tau >> t & 1:
                outcomes |= block.members
        return Event(space=self.partition.space, members=frozenset(outcomes))

    def iter_members(self) -> Iterator[Event]:
        for tau in range(self.size):
            yield self.member(tau)

    @cached_property
    def enumerated(self) -> Optional[tuple[Event, ...]]:
        if not self.is_enumerable:
            return None
        return tuple(self.iter_members())
