"""The energy functional, its Gateaux derivatives and the two minimizers."""

from typing import Optional, Sequence

import numpy as np

from config.config import get_settings
from models.random_variable import RandomVariable
from models.sigma import Partition
from models.space import Event, ProbabilitySpace
from models.variational import EnergyProblem, SolverConfig, SolverResult
from services.conditional import block_integrals
from services.lp import indicator, inner_product, simple_combination
from services.space import require_same_space
from utils.common_constants import SolverMethod
from utils.exceptions import BadConfig, BadStep, LengthMismatch
from utils.logger import logger


def make_problem(
    space: ProbabilitySpace,
    partition: Partition,
    event: Optional[Event] = None,
    target: Optional[RandomVariable] = None,
    lq_exponent: Optional[float] = None,
) -> EnergyProblem:
    if (event is None) == (target is None):
        raise BadConfig("give exactly one of event or target")
    if event is not None:
        target = indicator(space, event)
    return EnergyProblem(
        space=space, partition=partition, target=target, lq_exponent=lq_exponent
    )


def energy(problem: EnergyProblem, x: RandomVariable) -> float:
    """J(X) = 1/2 E(X^2) - E(X * target)."""
    space = problem.space
    require_same_space(space, x)
    return 0.5 * inner_product(space, x, x) - inner_product(space, x, problem.target)


def line_energy(problem: EnergyProblem, u: RandomVariable, t: float) -> float:
    """J(t u); a parabola in t minimized at T(u) / ||u||_2^2."""
    return energy(problem, RandomVariable.from_array(problem.space, t * u.array))


def gateaux_first(problem: EnergyProblem, x: RandomVariable, y: RandomVariable) -> float:
    """J'(X)Y = E(XY) - T(Y)."""
    space = problem.space
    return inner_product(space, x, y) - inner_product(space, problem.target, y)


def gateaux_second(problem: EnergyProblem, y: RandomVariable, z: RandomVariable) -> float:
    """J''(X)(Y, Z) = E(YZ), independent of X."""
    return inner_product(problem.space, y, z)


def fd_check(
    problem: EnergyProblem, x: RandomVariable, y: RandomVariable, h: float
) -> float:
    """Relative gap between J'(x)y and the central difference of J along y.

    The gap is scaled by max(1, |J'(x)y|, |difference quotient|), so it reads as
    an absolute error near critical points.
    """
    if not h > 0:
        raise BadStep(f"finite-difference step must be positive, got {h}")
    space = problem.space
    require_same_space(space, x, y)
    analytic = gateaux_first(problem, x, y)
    forward = RandomVariable.from_array(space, x.array + h * y.array)
    backward = RandomVariable.from_array(space, x.array - h * y.array)
    numeric = (energy(problem, forward) - energy(problem, backward)) / (2 * h)
    if analytic == 0 and numeric == 0:
        return 0.0
    return abs(analytic - numeric) / max(1.0, abs(analytic), abs(numeric))


def coefficient_gradient(problem: EnergyProblem, alpha: Sequence[float]) -> np.ndarray:
    """g_j = J'(sum_i alpha_i 1_{B_i})(1_{B_j}) = alpha_j P(B_j) - E(target 1_{B_j})."""
    partition = problem.partition
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (partition.size,):
        raise LengthMismatch(f"{alpha.size} coefficients for {partition.size} blocks")
    return alpha * partition.probs_array - block_integrals(
        problem.space, problem.target, partition
    )


def critical_residual(problem: EnergyProblem, x: RandomVariable) -> float:
    """max_j |J'(x)(1_{B_j})|."""
    space = problem.space
    require_same_space(space, x)
    return max(
        abs(gateaux_first(problem, x, indicator(space, block)))
        for block in problem.partition.blocks
    )


def _coefficient_energy(alpha: np.ndarray, probs: np.ndarray, b: np.ndarray) -> float:
    return float(0.5 * np.dot(alpha * alpha, probs) - np.dot(alpha, b))


def _step_sizes(config: SolverConfig, probs: np.ndarray) -> np.ndarray:
    """Per-coordinate step; coordinate j contracts by 1 - step_j P(B_j)."""
    if config.method == SolverMethod.PRECONDITIONED:
        step = config.step or 1.0
        if step >= 2:
            raise BadConfig(f"preconditioned step must stay below 2, got {step}")
        return step / probs

    bound = 2.0 / float(probs.max())
    step = config.step or 1.0 / float(probs.max())
    if step >= bound:
        raise BadConfig(
            f"gd step {step} is unstable; it must stay below 2 / max P(B_j) = {bound:.6g}"
        )
    return np.full_like(probs, step)


def minimize(problem: EnergyProblem, config: Optional[SolverConfig] = None) -> SolverResult:
    """Minimize J over the span of the block indicators.

    ``exact`` solves the diagonal normal equations P(B_j) alpha_j = E(target 1_{B_j}).
    ``gd`` iterates alpha <- alpha - step * g(alpha) from alpha = 0 with step
    1 / max_j P(B_j) unless one is given; ``preconditioned`` scales the step per
    coordinate by 1 / P(B_j) and lands on the minimizer in one iteration.

    The iterative methods stop once max_j |g_j| / P(B_j), the distance of every
    coefficient from its minimizer, is within ``tol``. Steps at or above the
    stability bound are rejected with BadConfig.
    """
    config = config or SolverConfig()
    partition = problem.partition
    probs = partition.probs_array
    b = block_integrals(problem.space, problem.target, partition)

    ratio = float(probs.max() / probs.min())
    if ratio > get_settings().ILL_CONDITIONING_RATIO:
        logger.warning(
            f"Block probabilities span a ratio of {ratio:.3e}; "
            "plain gradient descent will need many iterations."
        )

    trace = None
    if config.method == SolverMethod.EXACT:
        alpha = b / probs
        iterations, converged = 0, True
    else:
        step = _step_sizes(config, probs)
        alpha = np.zeros(partition.size)
        grad = alpha * probs - b
        distance = float(np.max(np.abs(grad) / probs))
        history = [(_coefficient_energy(alpha, probs, b), float(np.max(np.abs(grad))))]
        iterations = 0
        while distance > config.tol and iterations < config.max_iters:
            alpha = alpha - step * grad
            grad = alpha * probs - b
            distance = float(np.max(np.abs(grad) / probs))
            iterations += 1
            if config.record_trace:
                history.append(
                    (_coefficient_energy(alpha, probs, b), float(np.max(np.abs(grad))))
                )

        converged = distance <= config.tol
        if config.record_trace:
            trace = tuple(history)
        if not converged:
            logger.warning(
                f"{config.method.value} hit max_iters={config.max_iters} "
                f"with coefficient residual {distance:.3e}."
            )

    coefficients = tuple(float(a) for a in alpha)
    variable = simple_combination(problem.space, coefficients, partition.blocks)
    grad_inf_norm = float(np.max(np.abs(coefficient_gradient(problem, coefficients))))
    return SolverResult(
        method=config.method,
        coefficients=coefficients,
        energy=energy(problem, variable),
        grad_inf_norm=grad_inf_norm,
        iterations=iterations,
        converged=converged,
        trace=trace,
    )
