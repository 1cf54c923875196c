"""Random variables, expectation, L^p norms and the inequality checkers."""

import math
from typing import Optional, Sequence

import numpy as np

from models.random_variable import InequalityReport, PNorm, RandomVariable
from models.space import Event, ProbabilitySpace
from services.space import require_same_space
from utils.common_constants import InequalityName
from utils.exceptions import BadEpsilon, BadExponent, LengthMismatch


def _exponent(p) -> float:
    return p.p if isinstance(p, PNorm) else PNorm(p=p).p


def _strict_exponent(p) -> float:
    p = _exponent(p)
    if p <= 1:
        raise BadExponent(f"exponent must exceed 1, got {p}")
    return p


def _abs_power(values: np.ndarray, p: float) -> np.ndarray:
    """|v|^p: repeated multiplication for integer p, log-domain otherwise."""
    magnitude = np.abs(values)
    if float(p).is_integer():
        return magnitude ** int(p)
    out = np.zeros_like(magnitude)
    positive = magnitude > 0
    out[positive] = np.exp(p * np.log(magnitude[positive]))
    return out


def indicator(space: ProbabilitySpace, e: Event) -> RandomVariable:
    require_same_space(space, e)
    return RandomVariable.from_array(space, e.mask.astype(float))


def constant(space: ProbabilitySpace, c: float) -> RandomVariable:
    return RandomVariable.from_array(space, np.full(space.n, float(c)))


def simple_combination(
    space: ProbabilitySpace, coeffs: Sequence[float], events: Sequence[Event]
) -> RandomVariable:
    """sum_j coeffs[j] * 1_{events[j]}, pointwise."""
    if len(coeffs) != len(events):
        raise LengthMismatch(f"{len(coeffs)} coefficients for {len(events)} events")
    require_same_space(space, *events)
    values = np.zeros(space.n)
    for alpha, e in zip(coeffs, events):
        values[e.mask] += alpha
    return RandomVariable.from_array(space, values)


def expectation(space: ProbabilitySpace, x: RandomVariable) -> float:
    require_same_space(space, x)
    return float(np.dot(x.array, space.array))


def abs_moment(space: ProbabilitySpace, x: RandomVariable, p) -> float:
    """E(|X|^p)."""
    require_same_space(space, x)
    return float(np.dot(_abs_power(x.array, _exponent(p)), space.array))


def lp_norm(space: ProbabilitySpace, x: RandomVariable, p) -> float:
    p = _exponent(p)
    moment = abs_moment(space, x, p)
    if p == 1:
        return moment
    return moment ** (1.0 / p)


def inner_product(space: ProbabilitySpace, x: RandomVariable, y: RandomVariable) -> float:
    require_same_space(space, x, y)
    return float(np.dot(x.array * y.array, space.array))


def conjugate_exponent(p: float) -> float:
    p = _strict_exponent(p)
    return p / (p - 1)


def _combine(space, x, y, a: float, b: float) -> RandomVariable:
    return RandomVariable.from_array(space, a * x.array + b * y.array)


def holder_check(
    space: ProbabilitySpace, x: RandomVariable, y: RandomVariable, p
) -> InequalityReport:
    """||XY||_1 <= ||X||_p ||Y||_q."""
    p = _strict_exponent(p)
    require_same_space(space, x, y)
    q = conjugate_exponent(p)
    product = RandomVariable.from_array(space, x.array * y.array)
    return InequalityReport(
        name=InequalityName.HOLDER,
        lhs=lp_norm(space, product, 1),
        rhs=lp_norm(space, x, p) * lp_norm(space, y, q),
    )


def norm_monotonicity_check(
    space: ProbabilitySpace, x: RandomVariable, r, s
) -> InequalityReport:
    """||X||_r <= ||X||_s for 1 <= r < s on a probability space."""
    r, s = _exponent(r), _exponent(s)
    if not r < s:
        raise BadExponent(f"need r < s, got r={r}, s={s}")
    return InequalityReport(
        name=InequalityName.NORM_MONOTONICITY,
        lhs=lp_norm(space, x, r),
        rhs=lp_norm(space, x, s),
    )


def clarkson_check(
    space: ProbabilitySpace,
    x: RandomVariable,
    y: RandomVariable,
    p,
    case: Optional[int] = None,
) -> InequalityReport:
    """Clarkson's inequalities for the midpoint and half-difference of X, Y.

    Case 1 (p in (1, 2]) compares ||.||_p^{p/(p-1)} terms against
    (1/2 ||X||^p + 1/2 ||Y||^p)^{1/(p-1)}; case 2 (p >= 2) compares p-th powers
    against their average. Without an explicit case, p < 2 selects case 1.
    """
    p = _strict_exponent(p)
    require_same_space(space, x, y)
    if case is None:
        case = 1 if p < 2 else 2
    if case == 1 and p > 2 or case == 2 and p < 2 or case not in (1, 2):
        raise BadExponent(f"Clarkson case {case} does not apply at p={p}")

    mid = abs_moment(space, _combine(space, x, y, 0.5, 0.5), p)
    half_diff = abs_moment(space, _combine(space, x, y, 0.5, -0.5), p)
    average = 0.5 * abs_moment(space, x, p) + 0.5 * abs_moment(space, y, p)

    if case == 1:
        power = 1.0 / (p - 1)
        return InequalityReport(
            name=InequalityName.CLARKSON_1,
            lhs=mid**power + half_diff**power,
            rhs=average**power,
        )
    return InequalityReport(
        name=InequalityName.CLARKSON_2, lhs=mid + half_diff, rhs=average
    )


def uniform_convexity_delta(p: float, eps: float) -> float:
    """Modulus of uniform convexity of L^p read off the Clarkson inequalities."""
    p = _strict_exponent(p)
    if not (math.isfinite(eps) and 0 < eps <= 2):
        raise BadEpsilon(f"eps must lie in (0, 2], got {eps}")
    r = p if p >= 2 else conjugate_exponent(p)
    return 1.0 - (1.0 - (eps / 2) ** r) ** (1.0 / r)


def uniform_convexity_check(
    space: ProbabilitySpace, x: RandomVariable, y: RandomVariable, p
) -> InequalityReport:
    """||(X+Y)/2||_p <= 1 - delta(||X-Y||_p) inside the unit ball.

    Inputs outside the unit ball are scaled down by the larger of their norms.
    """
    p = _strict_exponent(p)
    require_same_space(space, x, y)
    scale = max(lp_norm(space, x, p), lp_norm(space, y, p), 1.0)
    x = RandomVariable.from_array(space, x.array / scale)
    y = RandomVariable.from_array(space, y.array / scale)

    eps = min(lp_norm(space, _combine(space, x, y, 1.0, -1.0), p), 2.0)
    bound = 1.0 if eps == 0 else 1.0 - uniform_convexity_delta(p, eps)
    return InequalityReport(
        name=InequalityName.UNIFORM_CONVEXITY,
        lhs=lp_norm(space, _combine(space, x, y, 0.5, 0.5), p),
        rhs=bound,
    )


def functional_bound_check(
    space: ProbabilitySpace, x: RandomVariable, target: RandomVariable, p
) -> InequalityReport:
    """|E(X * target)| <= ||target||_q ||X||_p, the continuity bound of T."""
    p = _exponent(p)
    require_same_space(space, x, target)
    if p == 1:
        positive = space.positive_mask
        dual = float(np.max(np.abs(target.array[positive])))
    else:
        dual = lp_norm(space, target, conjugate_exponent(p))
    return InequalityReport(
        name=InequalityName.FUNCTIONAL_BOUND,
        lhs=abs(inner_product(space, x, target)),
        rhs=dual * lp_norm(space, x, p),
    )
