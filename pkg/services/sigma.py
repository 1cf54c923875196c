"""Partitions of Omega, the sigma-algebra they generate and measurability."""

from typing import Sequence

import numpy as np

from config.config import get_settings
from models.random_variable import RandomVariable
from models.sigma import Partition, SigmaAlgebra
from models.space import Event, ProbabilitySpace
from services.space import require_same_space
from utils.exceptions import NotMeasurable
from utils.logger import logger


def make_partition(space: ProbabilitySpace, blocks: Sequence[Event]) -> Partition:
    partition = Partition(space=space, blocks=tuple(blocks))
    logger.debug(f"Built partition with {partition.size} blocks.")
    return partition


def generate(partition: Partition) -> SigmaAlgebra:
    sigma = SigmaAlgebra(partition=partition)
    if not sigma.is_enumerable:
        logger.debug(
            f"Partition has {partition.size} blocks; sigma-algebra is not enumerated."
        )
    return sigma


def atoms_of(partition: Partition, e: Event) -> list[int]:
    """Indices t of the blocks B_t contained in e."""
    return [t for t, block in enumerate(partition.blocks) if block.members <= e.members]


def contains(sigma: SigmaAlgebra, e: Event) -> bool:
    """e is a member iff it meets every block either not at all or entirely."""
    partition = sigma.partition
    require_same_space(partition.space, e)
    for block in partition.blocks:
        overlap = block.members & e.members
        if overlap and overlap != block.members:
            return False
    return True


def _block_spread(partition: Partition, values: np.ndarray) -> list[tuple[float, float]]:
    positive = partition.space.positive_mask
    spread = []
    for block in partition.blocks:
        inside = values[block.mask & positive]
        spread.append((float(inside.min()), float(inside.max())))
    return spread


def is_measurable(sigma: SigmaAlgebra, x: RandomVariable) -> bool:
    """x is constant on every block, looking at positive-mass outcomes only."""
    partition = sigma.partition
    require_same_space(partition.space, x)
    tolerance = get_settings().MEASURABILITY_TOLERANCE
    return all(hi - lo <= tolerance for lo, hi in _block_spread(partition, x.array))


def coefficients(sigma: SigmaAlgebra, x: RandomVariable) -> list[float]:
    """alpha_j with x = sum_j alpha_j 1_{B_j} on the positive-mass outcomes."""
    if not is_measurable(sigma, x):
        raise NotMeasurable("random variable is not constant on every block")
    values = x.array
    positive = sigma.partition.space.positive_mask
    alphas = []
    for block in sigma.partition.blocks:
        first = int(np.flatnonzero(block.mask & positive)[0])
        alphas.append(float(values[first]))
    return alphas


def member_masks(sigma: SigmaAlgebra) -> list[int]:
    """Outcome bitmask of every member, indexed by the block bitmask tau."""
    block_masks = [sum(1 << i for i in block.members) for block in sigma.partition.blocks]
    masks = [0] * sigma.size
    for tau in range(1, sigma.size):
        low = tau & -tau
        masks[tau] = masks[tau ^ low] | block_masks[low.bit_length() - 1]
    return masks


def closure_violations(sigma: SigmaAlgebra) -> int:
    """Count members whose complement, or pairwise unions, fall outside the list.

    Runs exhaustively over the enumerated members: 2^N complements and 4^N
    unions, vectorized per row when the outcome set fits in 64 bits.
    """
    masks = member_masks(sigma)
    n = sigma.partition.space.n
    full = (1 << n) - 1
    violations = 0

    if 0 not in masks or full not in masks:
        violations += 1

    if n <= 64:
        table = np.array(masks, dtype=np.uint64)
        known = np.sort(table)
        complements = table ^ np.uint64(full)
        violations += int(np.count_nonzero(~_is_member(known, complements)))
        for row in table:
            violations += int(np.count_nonzero(~_is_member(known, table | row)))
        return violations

    known_set = set(masks)
    violations += sum(1 for m in masks if m ^ full not in known_set)
    violations += sum(1 for a in masks for b in masks if a | b not in known_set)
    return violations


def _is_member(sorted_table: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    position = np.searchsorted(sorted_table, candidates)
    position = np.minimum(position, len(sorted_table) - 1)
    return sorted_table[position] == candidates
