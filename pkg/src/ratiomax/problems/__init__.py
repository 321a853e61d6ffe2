"""Concrete ratio problems with exact parametric maximizers."""

from .ball import (
    HilbertBallProblem,
    ball_argmax,
    ball_asymptote_curves,
    ball_asymptotic_estimate,
    ball_j,
    ball_j_many,
    ball_solve_quadratic,
)
from .linear import LinearIntervalProblem, linear_argmax, linear_j, linear_solve_closed_form
from .logratio import LogRatioProblem, log_ratio_solve_direct, log_ratio_solve_nested
from .quadratic import QuadraticIntervalProblem, quadratic_argmax, quadratic_j, stationary_point

__all__ = [
    "HilbertBallProblem",
    "LinearIntervalProblem",
    "LogRatioProblem",
    "QuadraticIntervalProblem",
    "ball_argmax",
    "ball_asymptote_curves",
    "ball_asymptotic_estimate",
    "ball_j",
    "ball_j_many",
    "ball_solve_quadratic",
    "linear_argmax",
    "linear_j",
    "linear_solve_closed_form",
    "log_ratio_solve_direct",
    "log_ratio_solve_nested",
    "quadratic_argmax",
    "quadratic_j",
    "stationary_point",
]
