"""Helpers shared by the problem families."""

from __future__ import annotations

import math

import numpy as np

from ..errors import NonConvergenceError

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def first_max(candidates, objective):
    """Return the first candidate with the largest objective value."""
    best_x, best_v = None, -math.inf
    for x in candidates:
        v = objective(x)
        if best_x is None or v > best_v:
            best_x, best_v = x, v
    return best_x


def golden_max(fun, lo: float, hi: float, tol: float, max_iter: int = 200):
    """Golden-section maximization of a unimodal ``fun`` on ``[lo, hi]``.

    Stops when the bracket is no wider than ``tol`` (absolute) or when
    it can no longer shrink in floating point.

    Returns:
        ``(x, fun(x))`` for the best probe seen.

    Raises:
        NonConvergenceError: (level "inner") if ``max_iter`` is exhausted.
    """
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = fun(c), fun(d)
    for _ in range(max_iter):
        if hi - lo <= tol or not lo < c < d < hi:
            break
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = fun(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = fun(d)
    else:
        raise NonConvergenceError(
            f"golden-section refinement did not reach width {tol} in {max_iter} steps",
            level="inner")
    return (c, fc) if fc >= fd else (d, fd)


def grid_then_golden(fun, nodes: np.ndarray, values: np.ndarray, tol: float):
    """Refine the best grid node by golden section on its two neighbor cells.

    The grid node wins unless the refined point is strictly better, so the
    result is never worse than the plain scan.
    """
    i = int(np.argmax(values))
    best_x, best_v = float(nodes[i]), float(values[i])
    lo = float(nodes[max(i - 1, 0)])
    hi = float(nodes[min(i + 1, nodes.size - 1)])
    if hi > lo:
        x, v = golden_max(fun, lo, hi, tol)
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v


def evaluate_on(fn, xs: np.ndarray) -> np.ndarray:
    """Evaluate ``fn`` on an array, vectorized when ``fn`` supports it."""
    try:
        out = np.asarray(fn(xs), dtype=np.float64)
        if out.shape == xs.shape:
            return out
        if out.ndim == 0:
            return np.full(xs.shape, float(out))
    except (TypeError, ValueError):
        pass
    return np.array([float(fn(float(x))) for x in xs])


def interval_nodes(x1: float, x2: float, intervals: int) -> np.ndarray:
    """``intervals + 1`` equispaced nodes, nested exactly under doubling."""
    return x1 + (x2 - x1) * (np.arange(intervals + 1) / intervals)


def real_roots_in(poly: np.polynomial.Polynomial, lo: float, hi: float,
                  newton_steps: int = 3) -> list[float]:
    """Real roots of ``poly`` inside ``[lo, hi]``, Newton-polished."""
    if poly.degree() < 1 or not np.any(poly.coef):
        return []
    dpoly = poly.deriv()
    found = []
    for z in poly.roots():
        if abs(z.imag) > 1e-7 * (1.0 + abs(z.real)):
            continue
        x = float(z.real)
        for _ in range(newton_steps):
            slope = dpoly(x)
            if slope == 0:
                break
            x_new = x - poly(x) / slope
            if not math.isfinite(x_new):
                break
            x = x_new
        if lo <= x <= hi:
            found.append(x)
    return sorted(found)
