"""
Models package for probvar.

This module exports the frozen pydantic models every service works on.
"""

from models.conditional import ConditionalExpectation, MeasureEntry, PropertyReport
from models.problem_file import ProblemFile
from models.random_variable import InequalityReport, PNorm, RandomVariable
from models.sigma import Partition, SigmaAlgebra
from models.space import Event, ProbabilitySpace
from models.suite import SuiteReport, TrialOutcome
from models.variational import EnergyProblem, SolverConfig, SolverResult

__all__ = [
    # Spaces and events
    "ProbabilitySpace",
    "Event",
    # Partitions and sigma-algebras
    "Partition",
    "SigmaAlgebra",
    # Random variables and norms
    "RandomVariable",
    "PNorm",
    "InequalityReport",
    # Conditional expectation
    "ConditionalExpectation",
    "PropertyReport",
    "MeasureEntry",
    # Energy minimization
    "EnergyProblem",
    "SolverConfig",
    "SolverResult",
    # Command line
    "ProblemFile",
    "SuiteReport",
    "TrialOutcome",
]
