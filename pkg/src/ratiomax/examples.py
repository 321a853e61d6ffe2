"""The two built-in ten-dimensional ball examples and their reported values."""

from __future__ import annotations

from dataclasses import dataclass

from .core import ReductionMode, SolverOptions, Strategy, solve_ratio_max
from .problems import HilbertBallProblem, ball_asymptotic_estimate

W0 = (1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 10.0)
W = (1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0)
EXAMPLE_DATA = {
    "example1": dict(w0=W0, w=W, h0=15.0, h=2.7, r=1.0),
    "example2": dict(w0=W0, w=W, h0=-15.0, h=2.7, r=1.0),
}
# values as published, rounded to two decimals
REPORTED = {
    "example1": {"beta_max": 43.61, "estimate": 41.95, "j0": 25.25},
    "example2": {"beta_max": -1.18, "estimate": -2.04, "j0": -4.75},
}
DEFAULT_TOLERANCE = 0.01


def example_problem(name: str, **overrides) -> HilbertBallProblem:
    data = dict(EXAMPLE_DATA[name])
    data.update(overrides)
    return HilbertBallProblem(**data)


@dataclass(frozen=True)
class ExampleCheck:
    name: str
    quantity: str
    expected: float
    actual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.actual - self.expected) <= self.tolerance


def run_examples(tolerance: float = DEFAULT_TOLERANCE, overrides: dict | None = None) -> list:
    """Solve both examples and compare optimum and estimate with the reported values.

    ``overrides`` maps example name to replacement data fields, e.g.
    ``{"example1": {"h": 2.8}}``.
    """
    overrides = overrides or {}
    opts = SolverOptions(strategy=Strategy.HYBRID)
    checks = []
    for name in EXAMPLE_DATA:
        p = example_problem(name, **overrides.get(name, {}))
        sol = solve_ratio_max(p, ReductionMode.DIFFERENCE, opts)
        est = ball_asymptotic_estimate(p)
        checks.append(ExampleCheck(name, "beta_max", REPORTED[name]["beta_max"], sol.beta_max, tolerance))
        checks.append(ExampleCheck(name, "estimate", REPORTED[name]["estimate"], est, tolerance))
    return checks
