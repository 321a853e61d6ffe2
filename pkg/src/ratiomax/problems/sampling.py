"""Random valid instances of each family, for property tests and benchmarks.

Coefficients are drawn uniformly from [-10, 10] and redrawn until the
family's invariants hold with a small positivity margin on W, so that
``j`` has a slope bounded away from zero near its root.
"""

from __future__ import annotations

import numpy as np

from .ball import HilbertBallProblem
from .linear import LinearIntervalProblem
from .logratio import LogRatioProblem
from .quadratic import QuadraticIntervalProblem

LOW, HIGH = -10.0, 10.0
W_MARGIN = 0.05


def _endpoints(rng):
    while True:
        x1, x2 = np.sort(rng.uniform(LOW, HIGH, 2))
        if x2 - x1 > 1e-3:
            return float(x1), float(x2)


def _quad_min(a, b, c, x1, x2):
    vals = [(a * x1 + b) * x1 + c, (a * x2 + b) * x2 + c]
    if a != 0:
        v = -b / (2 * a)
        if x1 < v < x2:
            vals.append((a * v + b) * v + c)
    return min(vals)


def random_linear(rng: np.random.Generator) -> LinearIntervalProblem:
    while True:
        a = float(rng.uniform(0.0, HIGH))
        b, a0, b0 = (float(v) for v in rng.uniform(LOW, HIGH, 3))
        x1, x2 = _endpoints(rng)
        if a > 0 and min(a * x1 + b, a * x2 + b) >= W_MARGIN:
            return LinearIntervalProblem(a, b, a0, b0, x1, x2)


def random_quadratic(rng: np.random.Generator) -> QuadraticIntervalProblem:
    while True:
        a = float(rng.uniform(0.0, HIGH))
        b, c, a0, b0, c0 = (float(v) for v in rng.uniform(LOW, HIGH, 5))
        x1, x2 = _endpoints(rng)
        if a > 0 and _quad_min(a, b, c, x1, x2) >= W_MARGIN:
            return QuadraticIntervalProblem(a, b, c, a0, b0, c0, x1, x2)


def _poly(c0, c1, c2):
    def fn(x):
        return (c2 * x + c1) * x + c0
    return fn


def random_logratio(rng: np.random.Generator, grid_resolution: int = 4097) -> LogRatioProblem:
    """Quadratic ``f0 > 0`` and ``f > 1`` (with margin) on a random interval."""
    while True:
        c = [float(v) for v in rng.uniform(LOW, HIGH, 3)]
        d = [float(v) for v in rng.uniform(LOW, HIGH, 3)]
        x1, x2 = _endpoints(rng)
        if (_quad_min(c[2], c[1], c[0], x1, x2) >= W_MARGIN
                and _quad_min(d[2], d[1], d[0], x1, x2) >= 1.0 + W_MARGIN):
            f0_expr = f"{c[0]!r} + {c[1]!r}*x + {c[2]!r}*x^2"
            f_expr = f"{d[0]!r} + {d[1]!r}*x + {d[2]!r}*x^2"
            return LogRatioProblem(_poly(*c), _poly(*d), x1, x2, grid_resolution,
                                   f0_expr=f0_expr, f_expr=f_expr)


def random_ball(rng: np.random.Generator) -> HilbertBallProblem:
    """Dimension in 2..16; ``h`` is drawn above ``r ||w||`` directly.

    Redrawing ``h`` from [-10, 10] would almost never satisfy
    ``h > r ||w||`` in high dimension, so the excess ``h - r ||w||`` is
    drawn from [W_MARGIN, 10] instead.
    """
    n = int(rng.integers(2, 17))
    w0 = rng.uniform(LOW, HIGH, n)
    w = rng.uniform(LOW, HIGH, n)
    h0 = float(rng.uniform(LOW, HIGH))
    r = float(rng.uniform(0.1, 2.0))
    h = r * float(np.linalg.norm(w)) + float(rng.uniform(W_MARGIN, HIGH))
    return HilbertBallProblem(tuple(w0), tuple(w), h0, h, r)


GENERATORS = {
    "linear": random_linear,
    "quadratic": random_quadratic,
    "logratio": random_logratio,
    "ball": random_ball,
}
