"""Linear-fractional ratio on an interval: ``(a0 x + b0) / (a x + b)``."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import RatioProblem, ReductionMode, Solution
from ..errors import InvalidProblemError
from ._common import first_max


@dataclass(frozen=True)
class LinearIntervalProblem(RatioProblem):
    a: float
    b: float
    a0: float
    b0: float
    x1: float
    x2: float

    def __post_init__(self):
        if not self.x1 < self.x2:
            raise InvalidProblemError(f"need x1 < x2, got x1={self.x1}, x2={self.x2}", "x2")
        if not self.a > 0:
            raise InvalidProblemError(f"need a > 0, got a={self.a}", "a")
        for name, x in (("x1", self.x1), ("x2", self.x2)):
            if not self.a * x + self.b > 0:
                raise InvalidProblemError(f"need a*{name} + b > 0, got {self.a * x + self.b}", name)

    def eval_W0(self, x):
        return self.a0 * x + self.b0

    def eval_W(self, x):
        return self.a * x + self.b

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        if mode is ReductionMode.DIFFERENCE:
            return linear_argmax(self, beta)
        # (a x + b)(c x + d) is quadratic; ties go to the smaller x
        c, d = self.a0 - beta * self.a, self.b0 - beta * self.b
        candidates = [self.x1]
        lead = self.a * c
        if lead != 0:
            xv = -(self.a * d + self.b * c) / (2 * lead)
            if self.x1 < xv < self.x2:
                candidates.append(xv)
        candidates.append(self.x2)
        return first_max(candidates, lambda x: (self.a * x + self.b) * (c * x + d))

    def domain_center(self):
        return 0.5 * (self.x1 + self.x2)


def linear_argmax(p: LinearIntervalProblem, beta: float) -> float:
    """Endpoint maximizing ``(a0 - beta a) x + b0 - beta b``; ``x1`` when ``beta >= a0/a``."""
    return p.x1 if beta >= p.a0 / p.a else p.x2


def linear_j(p: LinearIntervalProblem, beta: float) -> float:
    x = linear_argmax(p, beta)
    return p.eval_W0(x) - beta * p.eval_W(x)


def linear_solve_closed_form(p: LinearIntervalProblem) -> Solution:
    """Endpoint rule: ``x1`` if ``a b0 - b a0 > 0`` else ``x2``.

    The ratio is monotone on the interval, decreasing exactly when
    ``a b0 - b a0 > 0``.
    """
    x = p.x1 if p.a * p.b0 - p.b * p.a0 > 0 else p.x2
    beta = p.eval_W0(x) / p.eval_W(x)
    return Solution(beta_max=beta, x_max=x, residual=0.0, iterations=0,
                    trace=((beta, 0.0),))
