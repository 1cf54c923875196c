from enum import Enum, IntEnum


class SolverMethod(Enum):
    EXACT = "exact"
    GRADIENT_DESCENT = "gd"
    PRECONDITIONED = "preconditioned"


class InequalityName(Enum):
    HOLDER = "holder"
    NORM_MONOTONICITY = "norm_monotonicity"
    CLARKSON_1 = "clarkson_1"
    CLARKSON_2 = "clarkson_2"
    FUNCTIONAL_BOUND = "functional_bound"
    UNIFORM_CONVEXITY = "uniform_convexity"


class SuiteName(Enum):
    HOLDER = "holder"
    CLARKSON = "clarkson"
    MONOTONICITY = "monotonicity"
    SIGMA = "sigma"
    DIRICHLET = "dirichlet"
    CONVEXITY = "convexity"
    TOTAL_PROBABILITY = "total-prob"


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION_ERROR = 1
    NON_CONVERGENCE = 2
    PROPERTY_FAILURE = 3


# Exponents exercised by the inequality suites
SUITE_EXPONENTS = (1.25, 1.5, 2.0, 3.0, 4.0)
