"""Brute-force maximizers of ``W0 / W`` used to check the solvers.

Nothing here goes through the parametric reduction: the ratio itself is
evaluated on a grid and the best node is returned (first node on ties).
Grid resolutions count subintervals, so doubling a resolution yields a
superset of the previous nodes and can never lower the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .errors import OracleDomainError
from .kernels import polar_scan, ratio_argmax
from .problems._common import evaluate_on, interval_nodes


@dataclass(frozen=True)
class OracleResult:
    """Best grid node.

    ``gap_bound`` is grid spacing times the largest finite-difference slope
    of the ratio on the grid, an estimate of how far the true maximum can
    sit above ``j_star``. It is NaN where no estimate is made.
    """

    x_star: Any
    j_star: float
    resolution: int
    gap_bound: float = math.nan


def grid_max_interval(W0: Callable, W: Callable, x1: float, x2: float,
                      resolution: int) -> OracleResult:
    """Maximize ``W0 / W`` over ``resolution + 1`` equispaced nodes of ``[x1, x2]``.

    Raises:
        OracleDomainError: if ``W`` vanishes at a node.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    nodes = interval_nodes(x1, x2, resolution)
    num = np.ascontiguousarray(evaluate_on(W0, nodes))
    den = np.ascontiguousarray(evaluate_on(W, nodes))
    try:
        idx, value = ratio_argmax(num, den)
    except ZeroDivisionError as exc:
        i = exc.args[0]
        raise OracleDomainError(f"W = 0 at grid node x = {nodes[i]!r}") from None
    ratios = num / den
    spacing = (x2 - x1) / resolution
    slope = float(np.max(np.abs(np.diff(ratios)))) / spacing
    return OracleResult(float(nodes[idx]), float(value), resolution, spacing * slope)


def _disk_basis(w0: np.ndarray, w: np.ndarray):
    """Gram-Schmidt basis of span{w0, w}: 0, 1 or 2 unit columns."""
    vectors = []
    for v in (w0, w):
        v = v.astype(np.float64)
        for u in vectors:
            v = v - (u @ v) * u
        norm = np.linalg.norm(v)
        scale = max(np.linalg.norm(w0), np.linalg.norm(w))
        if norm > 1e-10 * scale:
            vectors.append(v / norm)
    return vectors


def disk_max_ball(p, resolution=2000) -> OracleResult:
    """Maximize the ball ratio on a polar grid of the disk in span{w0, w}.

    The ratio depends on x only through ``<w0, x>`` and ``<w, x>``, so the
    intersection of the ball with span{w0, w} contains a maximizer. With
    ``resolution = m`` (or ``(m, k)``) the grid has ``m + 1`` radii from 0 to
    ``r`` and ``m`` (or ``k``) equispaced angles. A one-dimensional span uses
    ``m * m + 1`` nodes on the diameter instead.
    """
    if isinstance(resolution, tuple):
        n_rad, n_ang = resolution
    else:
        n_rad = n_ang = int(resolution)
    w0 = np.asarray(p.w0, dtype=np.float64)
    w = np.asarray(p.w, dtype=np.float64)
    n = w0.size
    basis = _disk_basis(w0, w)
    if not basis:
        return OracleResult(np.zeros(n), p.h0 / p.h, 0)
    if len(basis) == 1:
        u = basis[0]
        s = np.ascontiguousarray(interval_nodes(-p.r, p.r, n_rad * n_ang))
        num = np.ascontiguousarray(p.h0 + s * float(w0 @ u))
        den = np.ascontiguousarray(p.h + s * float(w @ u))
        idx, value = ratio_argmax(num, den)
        return OracleResult(s[idx] * u, float(value), n_rad * n_ang)
    u, v = basis
    radii = np.ascontiguousarray(p.r * (np.arange(n_rad + 1) / n_rad))
    theta = 2.0 * math.pi * (np.arange(n_ang) / n_ang)
    cosines = np.ascontiguousarray(np.cos(theta))
    sines = np.ascontiguousarray(np.sin(theta))
    try:
        value, i, k = polar_scan(float(w0 @ u), float(w0 @ v), float(w @ u), float(w @ v),
                                 float(p.h0), float(p.h), radii, cosines, sines)
    except ZeroDivisionError:
        raise OracleDomainError("W = 0 at a disk grid node") from None
    x = radii[i] * cosines[k] * u + radii[i] * sines[k] * v
    return OracleResult(x, float(value), n_rad)
