"""Quadratic-fractional ratio on an interval."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import RatioProblem, ReductionMode
from ..errors import InvalidProblemError
from ._common import first_max, real_roots_in


@dataclass(frozen=True)
class QuadraticIntervalProblem(RatioProblem):
    """``(a0 x^2 + b0 x + c0) / (a x^2 + b x + c)`` on ``[x1, x2]``.

    ``W`` must be positive on the whole interval, not only at the
    endpoints, so the vertex is checked too when it falls inside.
    """

    a: float
    b: float
    c: float
    a0: float
    b0: float
    c0: float
    x1: float
    x2: float

    def __post_init__(self):
        if not self.x1 < self.x2:
            raise InvalidProblemError(f"need x1 < x2, got x1={self.x1}, x2={self.x2}", "x2")
        if not self.a > 0:
            raise InvalidProblemError(f"need a > 0, got a={self.a}", "a")
        checks = [("x1", self.x1), ("x2", self.x2)]
        vertex = -self.b / (2 * self.a)
        if self.x1 < vertex < self.x2:
            checks.append(("vertex", vertex))
        for name, x in checks:
            if not self.eval_W(x) > 0:
                raise InvalidProblemError(f"need W > 0 on [x1, x2], W({name}={x}) = {self.eval_W(x)}",
                    "c" if name == "vertex" else name)

    def eval_W0(self, x):
        return (self.a0 * x + self.b0) * x + self.c0

    def eval_W(self, x):
        return (self.a * x + self.b) * x + self.c

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        if mode is ReductionMode.DIFFERENCE:
            return quadratic_argmax(self, beta)
        w = np.polynomial.Polynomial([self.c, self.b, self.a])
        w0 = np.polynomial.Polynomial([self.c0, self.b0, self.a0])
        quartic = w * (w0 - beta * w)
        candidates = [self.x1, *real_roots_in(quartic.deriv(), self.x1, self.x2), self.x2]
        return first_max(candidates, lambda x: self.eval_W(x) * (self.eval_W0(x) - beta * self.eval_W(x)))

    def domain_center(self):
        return 0.5 * (self.x1 + self.x2)


def stationary_point(p: QuadraticIntervalProblem, beta: float):
    """Critical point ``-(b0 - beta b) / (2 (a0 - beta a))``, or None if the subproblem is linear."""
    lead = p.a0 - beta * p.a
    if lead == 0:
        return None
    return -(p.b0 - beta * p.b) / (2 * lead)


def quadratic_argmax(p: QuadraticIntervalProblem, beta: float) -> float:
    """Maximizer of ``W0 - beta W`` among ``x1``, ``x2`` and the stationary point.

    Ties go to the smaller x.
    """
    x3 = stationary_point(p, beta)
    if x3 is None:
        slope = p.b0 - beta * p.b
        return p.x2 if slope > 0 else p.x1
    candidates = [p.x1, p.x2]
    if p.x1 <= x3 <= p.x2:
        candidates.append(x3)
    candidates.sort()
    return first_max(candidates, lambda x: p.eval_W0(x) - beta * p.eval_W(x))


def quadratic_j(p: QuadraticIntervalProblem, beta: float) -> float:
    x = quadratic_argmax(p, beta)
    return p.eval_W0(x) - beta * p.eval_W(x)
