"""Desk fixtures shared by the test modules.

DIE6: six equally likely outcomes, blocks {0,1}, {2,3}, {4,5}, event {1,3,5}.
SKEW: weights (0.5, 0.3, 0.2), blocks {0}, {1,2}, event {0,1}.
"""

from types import SimpleNamespace

import numpy as np
import pytest

from services.lp import indicator
from services.sigma import make_partition
from services.space import make_event, make_space


def _desk(weights, blocks, event):
    space = make_space(weights)
    block_events = [make_event(space, b) for b in blocks]
    a = make_event(space, event)
    return SimpleNamespace(
        space=space,
        blocks=block_events,
        partition=make_partition(space, block_events),
        a=a,
        one_a=indicator(space, a),
    )


@pytest.fixture
def die6():
    return _desk([1 / 6] * 6, [[0, 1], [2, 3], [4, 5]], [1, 3, 5])


@pytest.fixture
def skew():
    return _desk([0.5, 0.3, 0.2], [[0], [1, 2]], [0, 1])


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
