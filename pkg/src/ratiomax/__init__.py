"""Maximize a ratio of two functionals by reduction to a scalar root problem."""

from .core import (
    FunctionalProblem,
    RatioProblem,
    ReductionMode,
    Solution,
    SolverOptions,
    Strategy,
    dinkelbach_step,
    evaluate_j,
    parametric_value,
    ratio_value,
    shifted,
    solve_ratio_max,
)
from .rootfind import Bracket, RootReport, bisect, find_bracket, hybrid_solve

__version__ = "0.1.0"

__all__ = [
    "Bracket",
    "FunctionalProblem",
    "RatioProblem",
    "ReductionMode",
    "RootReport",
    "Solution",
    "SolverOptions",
    "Strategy",
    "bisect",
    "dinkelbach_step",
    "evaluate_j",
    "find_bracket",
    "hybrid_solve",
    "parametric_value",
    "ratio_value",
    "shifted",
    "solve_ratio_max",
]
