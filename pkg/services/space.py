"""Finite probability spaces, events and the probability measure."""

import math
from typing import Iterable, Optional, Sequence

from models.space import Event, ProbabilitySpace
from utils.exceptions import SpaceMismatch, ZeroConditioningEvent
from utils.logger import logger


def make_space(
    weights: Sequence[float], labels: Optional[Sequence[str]] = None
) -> ProbabilitySpace:
    space = ProbabilitySpace(
        weights=tuple(weights), labels=None if labels is None else tuple(labels)
    )
    logger.debug(f"Built probability space with {space.n} outcomes.")
    return space


def same_space(a: ProbabilitySpace, b: ProbabilitySpace) -> bool:
    # Labels are display only; two spaces agree when their measures agree
    return a is b or a.weights == b.weights


def require_same_space(space: ProbabilitySpace, *bound) -> None:
    for item in bound:
        if not same_space(space, item.space):
            raise SpaceMismatch(
                f"{type(item).__name__} is bound to a different probability space"
            )


def make_event(space: ProbabilitySpace, indices: Iterable[int]) -> Event:
    return Event(space=space, members=frozenset(indices))


def full_event(space: ProbabilitySpace) -> Event:
    return make_event(space, range(space.n))


def empty_event(space: ProbabilitySpace) -> Event:
    return make_event(space, ())


def prob(space: ProbabilitySpace, e: Event) -> float:
    require_same_space(space, e)
    # P(Omega) = 1 exactly, whatever the rounding of the stored weights
    if e.is_full:
        return 1.0
    return math.fsum(space.weights[i] for i in e.sorted_members())


def complement(space: ProbabilitySpace, e: Event) -> Event:
    require_same_space(space, e)
    return make_event(space, set(range(space.n)) - e.members)


def union(e1: Event, e2: Event) -> Event:
    require_same_space(e1.space, e2)
    return make_event(e1.space, e1.members | e2.members)


def intersect(e1: Event, e2: Event) -> Event:
    require_same_space(e1.space, e2)
    return make_event(e1.space, e1.members & e2.members)


def difference(e1: Event, e2: Event) -> Event:
    require_same_space(e1.space, e2)
    return make_event(e1.space, e1.members - e2.members)


def cond_prob(space: ProbabilitySpace, a: Event, b: Event) -> float:
    """P(A | B) = P(A n B) / P(B)."""
    require_same_space(space, a, b)
    p_b = prob(space, b)
    if p_b <= 0:
        raise ZeroConditioningEvent("cannot condition on an event of probability 0")
    return prob(space, intersect(a, b)) / p_b
