"""Closed-form conditional expectation given a partition and its audits."""

import math

import numpy as np

from config.config import get_settings
from models.conditional import ConditionalExpectation, MeasureEntry, PropertyReport
from models.random_variable import RandomVariable
from models.sigma import Partition, SigmaAlgebra
from models.space import Event, ProbabilitySpace
from services.lp import expectation, indicator, lp_norm, simple_combination
from services.sigma import generate, is_measurable
from services.space import cond_prob, prob, require_same_space
from utils.exceptions import LengthMismatch, SpaceMismatch, TooManyBlocks
from utils.logger import logger

# Members integrated per vectorized chunk during the audit
_AUDIT_CHUNK = 4096


def block_integrals(space: ProbabilitySpace, x: RandomVariable, partition: Partition) -> np.ndarray:
    """E(x * 1_{B_j}) for every block."""
    require_same_space(space, x, partition)
    return partition.indicator_matrix @ (x.array * space.array)


def cond_expectation(
    space: ProbabilitySpace, x: RandomVariable, partition: Partition
) -> ConditionalExpectation:
    """xi = sum_j alpha_j 1_{B_j} with alpha_j = E(x 1_{B_j}) / P(B_j)."""
    alphas = block_integrals(space, x, partition) / partition.probs_array
    coefficients = tuple(float(a) for a in alphas)
    return ConditionalExpectation(
        partition=partition,
        coefficients=coefficients,
        as_variable=simple_combination(space, coefficients, partition.blocks),
    )


def _member_matrix(partition: Partition, taus: np.ndarray) -> np.ndarray:
    """(len(taus), n) 0/1 matrix of the members selected by the block bitmasks."""
    bits = (taus[:, None] >> np.arange(partition.size)[None, :]) & 1
    return (bits @ partition.indicator_matrix > 0).astype(float)


def verify_properties(
    space: ProbabilitySpace,
    x: RandomVariable,
    partition: Partition,
    xi: ConditionalExpectation,
) -> PropertyReport:
    """Audit xi against the defining properties of E(x | sigma(partition)).

    (i) measurability, (ii) integrability, (iii) equal integrals of x and xi
    over every member of the sigma-algebra. Property (iii) integrates each
    member directly over its outcomes instead of summing block integrals.
    Beyond ``ENUMERATION_LIMIT`` blocks only the atoms are audited and the
    report is marked partial.
    """
    require_same_space(space, x, xi.as_variable, partition)
    if xi.partition is not partition and xi.partition.blocks != partition.blocks:
        raise SpaceMismatch("xi is built on a different partition than the one audited")
    tolerance = get_settings().PROPERTY_TOLERANCE
    sigma = generate(partition)

    measurable = is_measurable(sigma, xi.as_variable)
    integrable = math.isfinite(lp_norm(space, xi.as_variable, 1))
    gap = (x.array - xi.as_variable.array) * space.array

    partial = not sigma.is_enumerable
    if partial:
        logger.warning(
            f"{partition.size} blocks exceed the enumeration limit; auditing atoms only."
        )
        taus = 1 << np.arange(partition.size, dtype=np.int64)
    else:
        taus = np.arange(sigma.size, dtype=np.int64)

    worst, worst_tau = 0.0, None
    for start in range(0, len(taus), _AUDIT_CHUNK):
        chunk = taus[start : start + _AUDIT_CHUNK]
        violations = np.abs(_member_matrix(partition, chunk) @ gap)
        peak = float(violations.max())
        if worst_tau is None or peak > worst + tolerance:
            # first member in enumeration order that attains the peak
            k = int(np.flatnonzero(violations >= peak - tolerance)[0])
            worst_tau = int(chunk[k])
        worst = max(worst, peak)

    worst_member = None
    if worst > tolerance and worst_tau is not None:
        worst_member = tuple(sigma.member(worst_tau).sorted_members())

    return PropertyReport(
        measurable=measurable,
        integrable=integrable,
        property_iii_max_violation=worst,
        worst_member=worst_member,
        members_checked=len(taus),
        partial=partial,
        tolerance=tolerance,
    )


def total_probability(space: ProbabilitySpace, a: Event, partition: Partition) -> float:
    """sum_j P(A | B_j) P(B_j)."""
    require_same_space(space, a, partition)
    return math.fsum(
        cond_prob(space, a, block) * p_block
        for block, p_block in zip(partition.blocks, partition.block_probs)
    )


def total_probability_terms(
    space: ProbabilitySpace, a: Event, partition: Partition
) -> list[tuple[float, float]]:
    """(P(B_j), P(A | B_j)) per block."""
    require_same_space(space, a, partition)
    return [
        (p_block, cond_prob(space, a, block))
        for block, p_block in zip(partition.blocks, partition.block_probs)
    ]


def tower_check(space: ProbabilitySpace, x: RandomVariable, partition: Partition) -> float:
    """|E(E(x | G)) - E(x)|."""
    xi = cond_expectation(space, x, partition)
    return abs(expectation(space, xi.as_variable) - expectation(space, x))


def induced_measure(
    space: ProbabilitySpace, target: RandomVariable, sigma: SigmaAlgebra
) -> list[MeasureEntry]:
    """Q(B) = E(target * 1_B) next to P(B) for every member B."""
    require_same_space(space, target, sigma.partition)
    if not sigma.is_enumerable:
        raise TooManyBlocks(
            f"{sigma.partition.size} blocks exceed the enumeration limit"
        )
    entries = []
    for member in sigma.enumerated:
        q = float(np.dot(indicator(space, member).array * target.array, space.array))
        entries.append(
            MeasureEntry(member=tuple(member.sorted_members()), q=q, p=prob(space, member))
        )
    return entries


def conditional_from_coefficients(
    space: ProbabilitySpace, partition: Partition, alphas
) -> ConditionalExpectation:
    """Wrap arbitrary block coefficients, e.g. a solver output, as a candidate xi."""
    alphas = tuple(float(a) for a in alphas)
    if len(alphas) != partition.size:
        raise LengthMismatch(f"{len(alphas)} coefficients for {partition.size} blocks")
    return ConditionalExpectation(
        partition=partition,
        coefficients=alphas,
        as_variable=simple_combination(space, alphas, partition.blocks),
    )
