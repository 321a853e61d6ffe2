"""Linear-fractional ratio on a Euclidean ball.

``J(x) = (<w0, x> + h0) / (<w, x> + h)`` over ``||x|| <= r`` with
``h > r ||w||``, which keeps the denominator positive on the ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..core import RatioProblem, ReductionMode, Solution
from ..errors import EstimateUndefinedError, InternalInconsistencyError, InvalidProblemError
from ..kernels import ball_j_sweep
from ._common import first_max


@dataclass(frozen=True)
class HilbertBallProblem(RatioProblem):
    w0: tuple
    w: tuple
    h0: float
    h: float
    r: float
    _w0: np.ndarray = field(init=False, repr=False, compare=False)
    _w: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        w0 = np.ascontiguousarray(self.w0, dtype=np.float64)
        w = np.ascontiguousarray(self.w, dtype=np.float64)
        if w0.ndim != 1 or w0.shape != w.shape or w0.size == 0:
            raise InvalidProblemError(
                f"w0 and w must be non-empty vectors of equal length, got {w0.shape} and {w.shape}", "w")
        if not self.r > 0:
            raise InvalidProblemError(f"need r > 0, got r={self.r}", "r")
        if not self.h > self.r * np.linalg.norm(w):
            raise InvalidProblemError(
                f"need h > r*||w|| = {self.r * np.linalg.norm(w)}, got h={self.h}", "h")
        object.__setattr__(self, "w0", tuple(float(v) for v in w0))
        object.__setattr__(self, "w", tuple(float(v) for v in w))
        w0.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "_w0", w0)
        object.__setattr__(self, "_w", w)

    @property
    def dim(self) -> int:
        return self._w0.size

    def eval_W0(self, x):
        return float(self._w0 @ x) + self.h0

    def eval_W(self, x):
        return float(self._w @ x) + self.h

    def argmax_parametric(self, beta, mode=ReductionMode.DIFFERENCE):
        if mode is ReductionMode.DIFFERENCE:
            return ball_argmax(self, beta)
        return _weighted_argmax(self, beta)

    def domain_center(self):
        return np.zeros(self.dim)


def ball_argmax(p: HilbertBallProblem, beta: float) -> np.ndarray:
    """``r (w0 - beta w) / ||w0 - beta w||``; ``r e1`` when the direction vanishes."""
    wb = p._w0 - beta * p._w
    norm = np.linalg.norm(wb)
    if norm == 0:
        x = np.zeros(p.dim)
        x[0] = p.r
        return x
    return p.r * wb / norm


def ball_j(p: HilbertBallProblem, beta: float) -> float:
    return p.r * float(np.linalg.norm(p._w0 - beta * p._w)) + p.h0 - beta * p.h


def ball_j_many(p: HilbertBallProblem, betas) -> np.ndarray:
    """Vectorized ``ball_j`` over a grid of betas."""
    betas = np.ascontiguousarray(betas, dtype=np.float64)
    return ball_j_sweep(p._w0, p._w, float(p.h0), float(p.h), float(p.r), betas)


def ball_solve_quadratic(p: HilbertBallProblem) -> Solution:
    """Optimal ratio from the squared root equation.

    Squaring ``r ||w0 - beta w|| = beta h - h0`` gives
    ``A beta^2 - 2 B beta + C = 0`` with ``A = r^2 ||w||^2 - h^2 < 0``,
    ``B = r^2 <w0, w> - h0 h``, ``C = r^2 ||w0||^2 - h0^2``. Of its two
    roots, the one with ``beta h - h0 >= 0`` solves the unsquared equation.
    """
    r2 = p.r * p.r
    A = r2 * float(p._w @ p._w) - p.h * p.h
    B = r2 * float(p._w0 @ p._w) - p.h0 * p.h
    C = r2 * float(p._w0 @ p._w0) - p.h0 * p.h0
    disc = B * B - A * C
    if disc < 0:
        # A < 0 and the unsquared equation has a root, so only rounding gets here
        disc = 0.0
    q = B + math.copysign(math.sqrt(disc), B)
    roots = [q / A]
    if q != 0:
        roots.append(C / q)
    scale = abs(p.h0) + abs(p.h) * max(abs(z) for z in roots)
    admissible = [z for z in roots if z * p.h - p.h0 >= -1e-12 * scale]
    if not admissible:
        raise InternalInconsistencyError(
            f"no root of the squared equation satisfies beta*h - h0 >= 0: {roots}")
    beta = min(admissible, key=lambda z: abs(ball_j(p, z)))
    return Solution(beta_max=beta, x_max=ball_argmax(p, beta),
                    residual=abs(ball_j(p, beta)), iterations=0,
                    trace=((beta, ball_j(p, beta)),))


def _unit_w(p: HilbertBallProblem) -> np.ndarray:
    norm = np.linalg.norm(p._w)
    if norm == 0:
        raise EstimateUndefinedError("w = 0: the direction w/||w|| is undefined")
    return p._w / norm


def ball_asymptotic_estimate(p: HilbertBallProblem) -> float:
    """A-priori estimate of the optimal ratio from the large-|beta| asymptote.

    Only meaningful when the optimum is large in magnitude.
    """
    wt = _unit_w(p)
    proj0 = float(p._w0 @ wt)
    proj = float(p._w @ wt)
    if p.h0 + p.r * np.linalg.norm(p._w0) > 0:
        num, den = p.h0 - p.r * proj0, p.h - p.r * proj
    else:
        num, den = p.h0 + p.r * proj0, p.h + p.r * proj
    if den == 0:
        raise EstimateUndefinedError("zero denominator in the asymptotic estimate")
    return num / den


def ball_asymptote_curves(p: HilbertBallProblem, beta_grid) -> list[tuple]:
    """Rows ``(beta, y1, y2, y3, y4)`` for plotting the root equation.

    ``y1 = r ||w0 - beta w||`` and ``y2 = beta h - h0`` cross at the optimum;
    ``y3`` and ``y4`` are the straight-line asymptotes of ``y1`` for
    ``beta -> -inf`` and ``beta -> +inf``.
    """
    wt = _unit_w(p)
    rw = p.r * float(np.linalg.norm(p._w))
    offset = p.r * float(p._w0 @ wt)
    betas = np.ascontiguousarray(beta_grid, dtype=np.float64)
    # with h0 = h = 0 the sweep returns r ||w0 - beta w|| alone
    y1 = ball_j_sweep(p._w0, p._w, 0.0, 0.0, float(p.r), betas)
    return [(beta, v1, beta * p.h - p.h0, -rw * beta + offset, rw * beta - offset)
            for beta, v1 in zip(betas.tolist(), y1.tolist())]


def span_basis(p: HilbertBallProblem) -> np.ndarray:
    """Orthonormal columns spanning ``{w0, w}`` (0, 1 or 2 columns)."""
    m = np.column_stack([p._w0, p._w])
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((p.dim, 0))
    keep = s > 1e-12 * s[0]
    return u[:, keep]


def _weighted_argmax(p: HilbertBallProblem, beta: float) -> np.ndarray:
    """Maximize ``(<w,x> + h)(<w_beta,x> + h_beta)`` over the ball.

    Only the projection onto span{w0, w} matters, so the search runs on a
    disk of radius r in at most two coordinates: interior critical point
    plus every critical point on the boundary circle.
    """
    hb = p.h0 - beta * p.h
    basis = span_basis(p)
    k = basis.shape[1]
    if k == 0:
        x = np.zeros(p.dim)
        x[0] = p.r
        return x
    pw = basis.T @ p._w
    qw = basis.T @ (p._w0 - beta * p._w)

    def objective(z):
        return (float(pw @ z) + p.h) * (float(qw @ z) + hb)

    if k == 1:
        pc, qc, r = pw[0], qw[0], p.r
        cands = [np.array([-r])]
        if pc * qc != 0:
            zv = -(pc * hb + qc * p.h) / (2 * pc * qc)
            if -r < zv < r:
                cands.append(np.array([zv]))
        cands.append(np.array([r]))
    else:
        cands = []
        mat = np.outer(pw, qw) + np.outer(qw, pw)
        rhs = -(hb * pw + p.h * qw)
        if abs(np.linalg.det(mat)) > 1e-14 * max(1.0, np.abs(mat).max() ** 2):
            z = np.linalg.solve(mat, rhs)
            if np.linalg.norm(z) <= p.r:
                cands.append(z)
        cands.extend(_circle_critical_points(pw, qw, p.h, hb, p.r))
    z = first_max(cands, objective)
    return basis @ z


def _circle_critical_points(pw, qw, h, hb, r):
    """Critical points of ``(r p.e + h)(r q.e + hb)`` on ``e = (cos t, sin t)``.

    Uses the half-angle substitution ``u = tan(t/2)``, which turns the
    stationarity condition into a polynomial of degree at most 4; the
    point ``t = pi`` (``u = inf``) is added separately.
    """
    P = np.polynomial.Polynomial
    cos_ = P([1.0, 0.0, -1.0])
    sin_ = P([0.0, 2.0])
    one = P([1.0, 0.0, 1.0])
    a = r * (pw[0] * cos_ + pw[1] * sin_)
    b = r * (qw[0] * cos_ + qw[1] * sin_)
    da = r * (-pw[0] * sin_ + pw[1] * cos_)
    db = r * (-qw[0] * sin_ + qw[1] * cos_)
    poly = da * (b + hb * one) + db * (a + h * one)
    angles = [math.pi]
    coef = poly.coef
    if coef.size and np.any(np.abs(coef) > 1e-15 * max(1.0, np.abs(coef).max())):
        for u in poly.roots():
            if abs(u.imag) <= 1e-7 * (1.0 + abs(u.real)):
                angles.append(2.0 * math.atan(float(u.real)))
    else:
        angles.append(0.0)
    return [_polish_on_circle(pw, qw, h, hb, r, t) for t in sorted(angles)]


def _polish_on_circle(pw, qw, h, hb, r, t, steps=3):
    """Newton steps on the angular derivative; keeps the better of start and result."""
    def value(s):
        e = np.array([math.cos(s), math.sin(s)])
        return (r * float(pw @ e) + h) * (r * float(qw @ e) + hb)

    start = t
    for _ in range(steps):
        c, s = math.cos(t), math.sin(t)
        pe, qe = pw[0] * c + pw[1] * s, qw[0] * c + qw[1] * s
        pd, qd = -pw[0] * s + pw[1] * c, -qw[0] * s + qw[1] * c
        f1 = r * pd * (r * qe + hb) + r * qd * (r * pe + h)
        f2 = 2 * r * r * pd * qd - r * pe * (r * qe + hb) - r * qe * (r * pe + h)
        if f2 == 0 or not math.isfinite(f1 / f2):
            break
        t = t - f1 / f2
    if value(t) < value(start):
        t = start
    return r * np.array([math.cos(t), math.sin(t)])
