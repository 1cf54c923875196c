import math
from typing import Optional

import numpy as np
from pydantic import Field, model_validator

from config.config import get_settings
from models.random_variable import RandomVariable
from models.sigma import Partition
from models.space import ProbabilitySpace
from utils.common_constants import SolverMethod
from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import BadConfig, BadExponent, NonConvergence, SpaceMismatch


class EnergyProblem(BaseModelPy):
    """Minimize J(X) = 1/2 E(X^2) - E(X * target) over sigma(partition)-measurable X.

    ``lq_exponent`` (p in (1, 2)) only records that the problem is read as the
    L^q version of the energy with q the conjugate of p; on a finite space the
    formula and the minimizer are the same.
    """

    space: ProbabilitySpace
    partition: Partition
    target: RandomVariable
    lq_exponent: Optional[float] = None

    @model_validator(mode="after")
    def _check_binding(self):
        for name, bound in (("partition", self.partition.space), ("target", self.target.space)):
            if bound is not self.space and bound.weights != self.space.weights:
                raise SpaceMismatch(f"{name} is bound to a different space")
        if self.lq_exponent is not None and not 1 < self.lq_exponent < 2:
            raise BadExponent(
                f"the L^q reading needs p in (1, 2), got {self.lq_exponent}"
            )
        return self

    @property
    def norm_space(self) -> str:
        if self.lq_exponent is None:
            return "L2"
        q = self.lq_exponent / (self.lq_exponent - 1)
        return f"L{q:g}"


class SolverConfig(BaseModelPy):
    method: SolverMethod = SolverMethod.EXACT
    step: Optional[float] = None
    tol: float = Field(default_factory=lambda: get_settings().SOLVER_TOL)
    max_iters: int = Field(default_factory=lambda: get_settings().SOLVER_MAX_ITERS)
    record_trace: bool = False

    @model_validator(mode="after")
    def _check_config(self):
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise BadConfig(f"tol must be positive, got {self.tol}")
        if self.step is not None and not (math.isfinite(self.step) and self.step > 0):
            raise BadConfig(f"step must be positive, got {self.step}")
        if self.max_iters < 1:
            raise BadConfig(f"max_iters must be positive, got {self.max_iters}")
        return self


class SolverResult(BaseModelPy):
    method: SolverMethod
    coefficients: tuple[float, ...]
    energy: float
    grad_inf_norm: float
    iterations: int
    converged: bool
    trace: Optional[tuple[tuple[float, float], ...]] = None

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)

    def raise_for_convergence(self) -> "SolverResult":
        if not self.converged:
            raise NonConvergence(
                f"{self.method.value} stopped after {self.iterations} iterations "
                f"with gradient norm {self.grad_inf_norm:.3e}"
            )
        return self
