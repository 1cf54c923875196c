"""
Error hierarchy shared by every module.

The classes deliberately derive from ``Exception`` rather than ``ValueError``:
raised inside a pydantic validator they propagate unchanged instead of being
folded into a ``ValidationError``.
"""

from utils.common_constants import ExitCode


class ProbVarError(Exception):
    exit_code: ExitCode = ExitCode.VALIDATION_ERROR

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# Spaces and events
class EmptySpace(ProbVarError):
    pass


class NegativeWeight(ProbVarError):
    pass


class NonFiniteValue(ProbVarError):
    pass


class NotNormalized(ProbVarError):
    pass


class IndexOutOfRange(ProbVarError):
    pass


class SpaceMismatch(ProbVarError):
    pass


class ZeroConditioningEvent(ProbVarError):
    pass


# Partitions and sigma-algebras
class NotDisjoint(ProbVarError):
    pass


class NotCovering(ProbVarError):
    pass


class ZeroMassBlock(ProbVarError):
    pass


class NotMeasurable(ProbVarError):
    pass


class TooManyBlocks(ProbVarError):
    pass


# Lp and solver arguments
class LengthMismatch(ProbVarError):
    pass


class BadExponent(ProbVarError):
    pass


class BadEpsilon(ProbVarError):
    pass


class BadStep(ProbVarError):
    pass


class BadConfig(ProbVarError):
    pass


class NonConvergence(ProbVarError):
    exit_code = ExitCode.NON_CONVERGENCE


# Input files
class ProblemFileError(ProbVarError):
    pass
