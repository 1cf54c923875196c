"""Seeded property suites behind the ``check`` command.

Trial ``i`` draws everything from ``trial_rng(seed, i)``, so trials can be
sharded across worker processes and the report stays byte-identical.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional

import numpy as np

from config.config import get_settings
from models.suite import SuiteReport, TrialOutcome
from models.variational import SolverConfig
from services.conditional import cond_expectation, total_probability
from services.lp import (
    clarkson_check,
    holder_check,
    norm_monotonicity_check,
    uniform_convexity_check,
)
from services.random_instances import (
    random_event,
    random_partition,
    random_space,
    random_variable,
    trial_rng,
)
from services.sigma import closure_violations, contains, generate, member_masks
from services.space import prob
from services.variational import make_problem, minimize
from utils.common_constants import SUITE_EXPONENTS, SolverMethod, SuiteName
from utils.logger import logger

MAX_SIGMA_BLOCKS = 12
MAX_PARTITION_BLOCKS = 16
GD_AGREEMENT = 1e-8
EXACT_AGREEMENT = 1e-12

Trial = Callable[[np.random.Generator, Optional[float]], tuple[float, bool, dict]]


def _pick_exponent(rng: np.random.Generator, p: Optional[float]) -> float:
    if p is not None:
        return float(p)
    return float(SUITE_EXPONENTS[int(rng.integers(len(SUITE_EXPONENTS)))])


def _holder_trial(rng, p):
    p = _pick_exponent(rng, p)
    space = random_space(rng)
    report = holder_check(space, random_variable(rng, space), random_variable(rng, space), p)
    return report.slack, report.holds, {"p": p, "n": space.n, "lhs": report.lhs, "rhs": report.rhs}


def _clarkson_trial(rng, p):
    p = _pick_exponent(rng, p)
    space = random_space(rng)
    x, y = random_variable(rng, space), random_variable(rng, space)
    cases = [c for c, applies in ((1, p <= 2), (2, p >= 2)) if applies]
    reports = [clarkson_check(space, x, y, p, case=c) for c in cases]
    holds = all(r.holds for r in reports)
    if p == 2:
        # parallelogram identity: both sides agree
        tolerance = get_settings().SLACK_TOLERANCE
        holds = holds and all(abs(r.slack) <= tolerance for r in reports)
    slack = min(r.slack for r in reports)
    return slack, holds, {"p": p, "n": space.n, "cases": cases}


def _monotonicity_trial(rng, p):
    if p is not None:
        r, s = 1.0, float(p)
    else:
        grid = (1.0,) + SUITE_EXPONENTS
        r, s = sorted(float(v) for v in rng.choice(grid, size=2, replace=False))
    space = random_space(rng)
    report = norm_monotonicity_check(space, random_variable(rng, space), r, s)
    return report.slack, report.holds, {"r": r, "s": s, "n": space.n}


def _convexity_trial(rng, p):
    p = _pick_exponent(rng, p)
    space = random_space(rng)
    report = uniform_convexity_check(
        space, random_variable(rng, space), random_variable(rng, space), p
    )
    return report.slack, report.holds, {"p": p, "n": space.n, "lhs": report.lhs, "rhs": report.rhs}


def _sigma_trial(rng, p):
    n_blocks = int(rng.integers(1, MAX_SIGMA_BLOCKS + 1))
    space = random_space(rng, min_outcomes=n_blocks)
    partition = random_partition(rng, space, n_blocks)
    sigma = generate(partition)
    masks = member_masks(sigma)
    known = set(masks)

    violations = 0
    if len(known) != 2**n_blocks:
        violations += 1
    if 0 not in known or (1 << space.n) - 1 not in known:
        violations += 1
    violations += closure_violations(sigma)

    e = random_event(rng, space)
    if contains(sigma, e) != (sum(1 << i for i in e.members) in known):
        violations += 1
    return -float(violations), violations == 0, {"blocks": n_blocks, "n": space.n}


def _dirichlet_trial(rng, p):
    space = random_space(rng)
    n_blocks = int(rng.integers(1, min(MAX_PARTITION_BLOCKS, space.n) + 1))
    partition = random_partition(rng, space, n_blocks)
    problem = make_problem(space, partition, event=random_event(rng, space))
    closed_form = cond_expectation(space, problem.target, partition).array

    exact = minimize(problem, SolverConfig(method=SolverMethod.EXACT))
    gd = minimize(problem, SolverConfig(method=SolverMethod.GRADIENT_DESCENT))
    exact_diff = float(np.max(np.abs(exact.array - closed_form)))
    gd_diff = float(np.max(np.abs(gd.array - closed_form)))

    slack = min(EXACT_AGREEMENT - exact_diff, GD_AGREEMENT - gd_diff)
    detail = {
        "n": space.n,
        "blocks": n_blocks,
        "exact_diff": exact_diff,
        "gd_diff": gd_diff,
        "gd_iterations": gd.iterations,
        "gd_converged": gd.converged,
    }
    return slack, slack >= 0 and gd.converged, detail


def _total_probability_trial(rng, p):
    space = random_space(rng)
    n_blocks = int(rng.integers(1, min(MAX_PARTITION_BLOCKS, space.n) + 1))
    partition = random_partition(rng, space, n_blocks)
    a = random_event(rng, space)
    diff = abs(total_probability(space, a, partition) - prob(space, a))
    slack = get_settings().PROPERTY_TOLERANCE - diff
    return slack, slack >= 0, {"n": space.n, "blocks": n_blocks, "abs_diff": diff}


SUITES: dict[SuiteName, Trial] = {
    SuiteName.HOLDER: _holder_trial,
    SuiteName.CLARKSON: _clarkson_trial,
    SuiteName.MONOTONICITY: _monotonicity_trial,
    SuiteName.SIGMA: _sigma_trial,
    SuiteName.DIRICHLET: _dirichlet_trial,
    SuiteName.CONVEXITY: _convexity_trial,
    SuiteName.TOTAL_PROBABILITY: _total_probability_trial,
}


def run_trials(
    suite: SuiteName, seed: int, p: Optional[float], start: int, stop: int
) -> list[TrialOutcome]:
    trial = SUITES[suite]
    outcomes = []
    for i in range(start, stop):
        slack, holds, detail = trial(trial_rng(seed, i), p)
        outcomes.append(TrialOutcome(trial=i, slack=slack, holds=holds, detail=detail))
    return outcomes


def _shards(trials: int, workers: int) -> list[tuple[int, int]]:
    size = math.ceil(trials / workers)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def run_suite(
    suite: SuiteName,
    trials: int,
    seed: int,
    p: Optional[float] = None,
    workers: Optional[int] = None,
) -> SuiteReport:
    workers = max(1, workers or get_settings().SUITE_WORKERS)
    logger.info(f"Running suite {suite.value}: {trials} trials, seed {seed}, {workers} worker(s).")

    if workers == 1 or trials < 2:
        outcomes = run_trials(suite, seed, p, 0, trials)
    else:
        shards = _shards(trials, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_trials, suite, seed, p, a, b) for a, b in shards]
            outcomes = [o for future in futures for o in future.result()]

    failed = [o for o in outcomes if not o.holds]
    first_failure = None
    if failed:
        first = failed[0]
        first_failure = {"trial": first.trial, "seed": seed, "slack": first.slack, **first.detail}

    report = SuiteReport(
        suite=suite,
        seed=seed,
        trials=trials,
        failures=len(failed),
        worst_slack=min((o.slack for o in outcomes), default=0.0),
        first_failure=first_failure,
    )
    logger.info(f"Suite {suite.value} finished with {report.failures} failure(s).")
    return report
