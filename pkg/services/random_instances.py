"""Seeded generators of random spaces, partitions, events and variables."""

import numpy as np

from models.random_variable import RandomVariable
from models.sigma import Partition
from models.space import Event, ProbabilitySpace
from services.sigma import make_partition
from services.space import make_event, make_space

MAX_OUTCOMES = 64
VALUE_RANGE = (-2.0, 2.0)
WEIGHT_RANGE = (1.0, 2.0)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial, a pure function of (seed, trial)."""
    return np.random.default_rng([seed, trial])


def random_space(
    rng: np.random.Generator, min_outcomes: int = 1, max_outcomes: int = MAX_OUTCOMES
) -> ProbabilitySpace:
    n = int(rng.integers(min_outcomes, max_outcomes + 1))
    raw = rng.uniform(*WEIGHT_RANGE, size=n)
    return make_space(raw / raw.sum())


def random_variable(rng: np.random.Generator, space: ProbabilitySpace) -> RandomVariable:
    return RandomVariable.from_array(space, rng.uniform(*VALUE_RANGE, size=space.n))


def random_event(rng: np.random.Generator, space: ProbabilitySpace) -> Event:
    return make_event(space, np.flatnonzero(rng.random(space.n) < 0.5).tolist())


def random_partition(
    rng: np.random.Generator, space: ProbabilitySpace, n_blocks: int
) -> Partition:
    """Random assignment of outcomes to n_blocks nonempty blocks (n_blocks <= n)."""
    n_blocks = max(1, min(n_blocks, space.n))
    order = rng.permutation(space.n)
    owner = np.empty(space.n, dtype=int)
    owner[order[:n_blocks]] = np.arange(n_blocks)
    owner[order[n_blocks:]] = rng.integers(0, n_blocks, size=space.n - n_blocks)
    blocks = [make_event(space, np.flatnonzero(owner == j).tolist()) for j in range(n_blocks)]
    return make_partition(space, blocks)


def random_measurable(
    rng: np.random.Generator, partition: Partition
) -> RandomVariable:
    """sum_j a_j 1_{B_j} with a_j uniform in VALUE_RANGE."""
    alphas = rng.uniform(*VALUE_RANGE, size=partition.size)
    return RandomVariable.from_array(partition.space, alphas[partition.block_of])
