"""Reduction of ratio maximization to a scalar root problem.

Maximizing ``J(x) = W0(x) / W(x)`` over a domain is replaced by the
parametric problem ``J_beta(x) = W0(x) - beta * W(x)`` (mode DIFFERENCE,
requires ``W > 0``) or ``J_beta(x) = W(x) * (W0(x) - beta * W(x))`` (mode
WEIGHTED_DIFFERENCE, requires only ``W != 0``). The optimal value
``j(beta) = max_x J_beta(x)`` is positive below the optimal ratio, negative
above it and zero exactly at it, so the optimal ratio is the unique root
of ``j``.
"""

from __future__ import annotations

import abc
import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import (
    DivisionDomainError,
    ModeViolationError,
    NonConvergenceError,
    UnsupportedStrategyError,
)
from .rootfind import bisect, find_bracket, hybrid_solve


class ReductionMode(enum.Enum):
    DIFFERENCE = "difference"
    WEIGHTED_DIFFERENCE = "weighted_difference"


class Strategy(enum.Enum):
    BISECTION = "bisect"
    DINKELBACH = "dinkelbach"
    HYBRID = "hybrid"


@dataclass(frozen=True)
class SolverOptions:
    """Stopping rules and root-finding strategy.

    Attributes:
        tolerance_j: absolute tolerance on ``|j(beta)|``.
        tolerance_beta: absolute tolerance on the bracket width.
        max_iterations: iteration budget for the root finder.
        strategy: how the root of ``j`` is located.
    """

    tolerance_j: float = 1e-10
    tolerance_beta: float = 1e-12
    max_iterations: int = 200
    strategy: Strategy = Strategy.HYBRID

    def __post_init__(self):
        if not (self.tolerance_j > 0 and self.tolerance_beta > 0):
            raise ValueError("tolerances must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not isinstance(self.strategy, Strategy):
            object.__setattr__(self, "strategy", Strategy(self.strategy))


@dataclass(frozen=True)
class Solution:
    """Result of a ratio maximization.

    ``trace`` lists every evaluated ``(beta, j(beta))`` pair in order and
    ends with ``(beta_max, j(beta_max))``.
    """

    beta_max: float
    x_max: Any
    residual: float
    iterations: int
    trace: tuple = field(default=(), repr=False)


class RatioProblem(abc.ABC):
    """A ratio ``W0 / W`` over a domain with an exact parametric maximizer.

    Implementations must be immutable and must return a point of the
    domain from :meth:`argmax_parametric`.
    """

    @abc.abstractmethod
    def eval_W0(self, x) -> float: ...

    @abc.abstractmethod
    def eval_W(self, x) -> float: ...

    @abc.abstractmethod
    def argmax_parametric(self, beta: float, mode: ReductionMode = ReductionMode.DIFFERENCE):
        """Exact maximizer of ``J_beta`` over the domain for the given mode."""

    @abc.abstractmethod
    def domain_center(self):
        """A fixed feasible point used to seed the root search."""


def parametric_value(problem: RatioProblem, x, beta: float, mode: ReductionMode) -> float:
    """``J_beta(x)`` for the given reduction mode."""
    w0 = problem.eval_W0(x)
    w = problem.eval_W(x)
    if mode is ReductionMode.DIFFERENCE:
        return w0 - beta * w
    return w * (w0 - beta * w)


def evaluate_j(problem: RatioProblem, beta: float, mode: ReductionMode = ReductionMode.DIFFERENCE):
    """Solve the parametric subproblem at ``beta``.

    Returns:
        ``(x_beta, j)`` where ``x_beta`` maximizes ``J_beta`` and
        ``j = J_beta(x_beta)``.

    Raises:
        ModeViolationError: if ``W(x_beta)`` breaks the mode's sign rule.
    """
    x = problem.argmax_parametric(beta, mode)
    w0 = problem.eval_W0(x)
    w = problem.eval_W(x)
    if mode is ReductionMode.DIFFERENCE:
        if not w > 0:
            raise ModeViolationError(f"W(x_beta) = {w!r} <= 0 in DIFFERENCE mode")
        return x, w0 - beta * w
    if w == 0:
        raise ModeViolationError("W(x_beta) = 0 in WEIGHTED_DIFFERENCE mode")
    return x, w * (w0 - beta * w)


def ratio_value(problem: RatioProblem, x) -> float:
    w = problem.eval_W(x)
    if w == 0:
        raise DivisionDomainError("W(x) = 0, ratio undefined")
    return problem.eval_W0(x) / w


def dinkelbach_step(problem: RatioProblem, beta: float,
                    mode: ReductionMode = ReductionMode.DIFFERENCE) -> float:
    """One fixed-point update ``beta -> J(x_beta)`` (DIFFERENCE mode only)."""
    if mode is not ReductionMode.DIFFERENCE:
        raise UnsupportedStrategyError("Dinkelbach steps require mode DIFFERENCE")
    return ratio_value(problem, problem.argmax_parametric(beta, mode))


class _Evaluator:
    """Memoizing j(beta) evaluator that records the trace."""

    def __init__(self, problem: RatioProblem, mode: ReductionMode):
        self.problem = problem
        self.mode = mode
        self.cache: dict[float, tuple[Any, float]] = {}
        self.trace: list[tuple[float, float]] = []

    def __call__(self, beta: float) -> float:
        hit = self.cache.get(beta)
        if hit is None:
            hit = evaluate_j(self.problem, beta, self.mode)
            self.cache[beta] = hit
        self.trace.append((beta, hit[1]))
        return hit[1]

    def point(self, beta: float):
        if beta not in self.cache:
            self(beta)
        return self.cache[beta][0]

    def propose(self, beta: float) -> float:
        return ratio_value(self.problem, self.point(beta))


def solve_ratio_max(problem: RatioProblem,
                    mode: ReductionMode = ReductionMode.DIFFERENCE,
                    opts: SolverOptions | None = None,
                    *, seed: float | None = None) -> Solution:
    """Maximize ``W0 / W`` by locating the root of ``j``.

    The seed defaults to the ratio at the problem's domain center, which
    is a lower bound on the optimum. Once a root estimate is found, the
    ratio at its maximizer (one Dinkelbach polish) is tried and kept when
    it gives a smaller ``|j|``.

    Raises:
        NoBracketError: if no sign change is found during expansion.
        NonConvergenceError: if the iteration budget is exhausted.
        UnsupportedStrategyError: DINKELBACH with WEIGHTED_DIFFERENCE.
    """
    opts = opts or SolverOptions()
    mode = ReductionMode(mode)
    if opts.strategy is Strategy.DINKELBACH and mode is not ReductionMode.DIFFERENCE:
        raise UnsupportedStrategyError("Dinkelbach iteration requires mode DIFFERENCE")
    ev = _Evaluator(problem, mode)
    if seed is None:
        seed = ratio_value(problem, problem.domain_center())

    if opts.strategy is Strategy.DINKELBACH:
        beta = _dinkelbach_loop(ev, seed, opts)
    else:
        j_seed = ev(seed)
        if abs(j_seed) <= opts.tolerance_j:
            beta = seed
        else:
            bracket = find_bracket(ev, seed, 2.0, 64, j_seed=j_seed)
            try:
                if opts.strategy is Strategy.HYBRID and mode is ReductionMode.DIFFERENCE:
                    report = hybrid_solve(ev, ev.propose, bracket, opts)
                else:
                    report = bisect(ev, bracket, opts)
            except NonConvergenceError as exc:
                raise NonConvergenceError(exc.detail, ev.trace, level="root") from exc
            beta = report.root
    return _finalize(ev, beta)


def _dinkelbach_loop(ev: _Evaluator, beta: float, opts: SolverOptions) -> float:
    for _ in range(opts.max_iterations):
        j = ev(beta)
        if abs(j) <= opts.tolerance_j:
            return beta
        nxt = ev.propose(beta)
        if abs(nxt - beta) <= opts.tolerance_beta:
            return nxt
        beta = nxt
    raise NonConvergenceError(
        f"Dinkelbach iteration did not reach |j| <= {opts.tolerance_j} "
        f"in {opts.max_iterations} steps", ev.trace, level="root")


def _finalize(ev: _Evaluator, beta: float) -> Solution:
    j = ev.cache[beta][1] if beta in ev.cache else ev(beta)
    polished = ev.propose(beta)
    if polished != beta and math.isfinite(polished):
        j_pol = ev(polished)
        if abs(j_pol) <= abs(j):
            beta, j = polished, j_pol
    iterations = len(ev.cache)
    if ev.trace[-1][0] != beta:
        ev.trace.append((beta, j))
    return Solution(beta_max=beta, x_max=ev.point(beta), residual=abs(j),
                    iterations=iterations, trace=tuple(ev.trace))


def shifted(problem: RatioProblem, c: float) -> RatioProblem:
    """The problem with numerator ``W0 + c * W``; its optimal ratio moves by ``c``."""
    return _ShiftedProblem(problem, c)


class _ShiftedProblem(RatioProblem):
    def __init__(self, base: RatioProblem, c: float):
        self._base = base
        self._c = c

    def eval_W0(self, x):
        return self._base.eval_W0(x) + self._c * self._base.eval_W(x)

    def eval_W(self, x):
        return self._base.eval_W(x)

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        # W0 + cW - beta W = W0 - (beta - c) W, in both modes
        return self._base.argmax_parametric(beta - self._c, mode)

    def domain_center(self):
        return self._base.domain_center()


class FunctionalProblem(RatioProblem):
    """Adapter building a problem from plain callables.

    ``argmax`` receives ``(beta, mode)`` and must return an exact maximizer.
    """

    def __init__(self, W0: Callable, W: Callable, argmax: Callable, center):
        self._W0 = W0
        self._W = W
        self._argmax = argmax
        self._center = center

    def eval_W0(self, x):
        return self._W0(x)

    def eval_W(self, x):
        return self._W(x)

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        return self._argmax(beta, mode)

    def domain_center(self):
        return self._center
