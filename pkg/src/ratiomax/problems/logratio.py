"""Ratio of logarithms ``ln f0(x) / ln f(x)`` on an interval.

Two routes are provided. The direct one applies the difference reduction
with ``W0 = ln f0`` and ``W = ln f`` (positive because ``f > 1``). The
nested one works with the equivalent power ratio: for fixed ``beta`` the
value ``gamma(beta) = max_x f0(x) / f(x)**beta`` is the root of
``max_x (f0 - gamma f**beta) = 0``, and the optimal ratio is the
``beta`` at which ``gamma(beta) = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..core import (
    RatioProblem,
    ReductionMode,
    Solution,
    SolverOptions,
    Strategy,
    solve_ratio_max,
)
from ..errors import InvalidProblemError, NonConvergenceError
from ..rootfind import bisect, find_bracket, hybrid_solve
from ._common import evaluate_on, grid_then_golden, interval_nodes


@dataclass(frozen=True)
class LogRatioProblem(RatioProblem):
    """``ln f0 / ln f`` on ``[x1, x2]`` with ``f0 > 0`` and ``f > 1``.

    The parametric maximizer scans ``grid_resolution`` equispaced nodes and
    refines the best one by golden section to ``refine_tolerance``.
    ``f0_expr`` and ``f_expr`` keep the source text when the evaluators were
    compiled from expressions; they take part in equality, the callables
    do not.
    """

    f0: Callable = field(compare=False)
    f: Callable = field(compare=False)
    x1: float
    x2: float
    grid_resolution: int = 4097
    refine_tolerance: float = 1e-12
    f0_expr: str | None = None
    f_expr: str | None = None
    _nodes: np.ndarray = field(init=False, repr=False, compare=False)
    _f0_values: np.ndarray = field(init=False, repr=False, compare=False)
    _f_values: np.ndarray = field(init=False, repr=False, compare=False)
    _ln_f0: np.ndarray = field(init=False, repr=False, compare=False)
    _ln_f: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.x1 < self.x2:
            raise InvalidProblemError(f"need x1 < x2, got x1={self.x1}, x2={self.x2}", "x2")
        if self.grid_resolution < 2:
            raise InvalidProblemError("grid_resolution must be >= 2", "grid_resolution")
        if not self.refine_tolerance > 0:
            raise InvalidProblemError("refine_tolerance must be positive", "refine_tolerance")
        nodes = interval_nodes(self.x1, self.x2, self.grid_resolution - 1)
        with np.errstate(all="ignore"):
            f0v = evaluate_on(self.f0, nodes)
            fv = evaluate_on(self.f, nodes)
        bad = np.flatnonzero(~(f0v > 0))
        if bad.size:
            raise InvalidProblemError(f"f0 must be > 0, f0({nodes[bad[0]]}) = {f0v[bad[0]]}", "f0_expr")
        bad = np.flatnonzero(~(fv > 1))
        if bad.size:
            raise InvalidProblemError(f"f must be > 1, f({nodes[bad[0]]}) = {fv[bad[0]]}", "f_expr")
        object.__setattr__(self, "_nodes", nodes)
        object.__setattr__(self, "_f0_values", f0v)
        object.__setattr__(self, "_f_values", fv)
        object.__setattr__(self, "_ln_f0", np.log(f0v))
        object.__setattr__(self, "_ln_f", np.log(fv))

    def eval_W0(self, x):
        return math.log(self.f0(x))

    def eval_W(self, x):
        return math.log(self.f(x))

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        if mode is ReductionMode.DIFFERENCE:
            values = self._ln_f0 - beta * self._ln_f

            def fun(x):
                return self.eval_W0(x) - beta * self.eval_W(x)
        else:
            values = self._ln_f * (self._ln_f0 - beta * self._ln_f)

            def fun(x):
                w = self.eval_W(x)
                return w * (self.eval_W0(x) - beta * w)
        return grid_then_golden(fun, self._nodes, values, self.refine_tolerance)[0]

    def domain_center(self):
        return 0.5 * (self.x1 + self.x2)

    def power_ratio_max(self, beta: float):
        """``(x, gamma(beta))`` with ``gamma(beta) = max_x f0(x) / f(x)**beta``."""
        with np.errstate(over="ignore"):
            values = self._f0_values * self._f_values ** (-beta)

        def fun(x):
            return self.f0(x) * self.f(x) ** (-beta)

        return grid_then_golden(fun, self._nodes, values, self.refine_tolerance)


def log_ratio_solve_direct(p: LogRatioProblem, opts: SolverOptions | None = None) -> Solution:
    return solve_ratio_max(p, ReductionMode.DIFFERENCE, opts)


def log_ratio_solve_nested(p: LogRatioProblem, opts: SolverOptions | None = None) -> Solution:
    """Solve ``gamma(beta) = 1`` for ``beta``.

    The reported residual is ``|gamma(beta_max) - 1|``.

    The outer equation is handled by the same bracket/bisection machinery
    as the direct route; with the HYBRID or DINKELBACH strategy the ratio of
    logs at the inner maximizer is used as the step proposal.

    Raises:
        NonConvergenceError: tagged "inner" or "outer" by failing level.
    """
    opts = opts or SolverOptions()
    trace: list[tuple[float, float]] = []
    points: dict[float, float] = {}

    def outer(beta):
        x, gamma = p.power_ratio_max(beta)
        points[beta] = x
        trace.append((beta, gamma - 1.0))
        return gamma - 1.0

    def propose(beta):
        if beta not in points:
            outer(beta)
        x = points[beta]
        return p.eval_W0(x) / p.eval_W(x)

    center = p.domain_center()
    seed = p.eval_W0(center) / p.eval_W(center)
    try:
        g_seed = outer(seed)
        if abs(g_seed) <= opts.tolerance_j:
            beta = seed
        else:
            bracket = find_bracket(outer, seed, 2.0, 64, j_seed=g_seed)
            if opts.strategy is Strategy.BISECTION:
                beta = bisect(outer, bracket, opts).root
            else:
                beta = hybrid_solve(outer, propose, bracket, opts).root
    except NonConvergenceError as exc:
        if exc.level == "inner":
            raise NonConvergenceError(exc.detail, trace, level="inner") from exc
        raise NonConvergenceError(exc.detail, trace, level="outer") from exc

    g = dict(trace)[beta]
    polished = propose(beta)
    if polished != beta and math.isfinite(polished):
        g_pol = outer(polished)
        if abs(g_pol) <= abs(g):
            beta, g = polished, g_pol
    iterations = len(points)
    if trace[-1][0] != beta:
        trace.append((beta, g))
    return Solution(beta_max=beta, x_max=points[beta], residual=abs(g),
                    iterations=iterations, trace=tuple(trace))
