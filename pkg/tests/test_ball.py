import math

import numpy as np
import pytest

from ratiomax import ReductionMode, SolverOptions, Strategy, ratio_value, solve_ratio_max
from ratiomax.errors import InvalidProblemError
from ratiomax.problems import (
    HilbertBallProblem,
    ball_argmax,
    ball_asymptote_curves,
    ball_asymptotic_estimate,
    ball_j,
    ball_solve_quadratic,
)
from ratiomax.problems.sampling import random_ball

from .conftest import SQRT105


def test_argmax_at_zero(example1):
    np.testing.assert_allclose(ball_argmax(example1, 0.0), np.array(example1.w0) / SQRT105)


def test_argmax_degenerate_direction():
    p = HilbertBallProblem((2.0, 4.0), (1.0, 2.0), 1.0, 5.0, 1.5)
    x = ball_argmax(p, 2.0)
    np.testing.assert_array_equal(x, [1.5, 0.0])


def test_j_values(example1, example2):
    assert ball_j(example1, 0.0) == pytest.approx(25.25, abs=0.01)
    assert ball_j(example2, 0.0) == pytest.approx(-4.75, abs=0.01)
    beta = 43.61
    assert abs(ball_j(example1, beta)) <= 1e-2 * abs(example1.h0 - beta * example1.h)


def test_quadratic_route(example1, example2):
    s1, s2 = ball_solve_quadratic(example1), ball_solve_quadratic(example2)
    assert s1.beta_max == pytest.approx(43.61, abs=0.01)
    assert s2.beta_max == pytest.approx(-1.18, abs=0.01)
    assert s1.residual <= 1e-9 and s2.residual <= 1e-9
    same = HilbertBallProblem((1.0, -2.0, 0.5), (1.0, -2.0, 0.5), 4.0, 4.0, 1.0)
    assert ball_solve_quadratic(same).beta_max == pytest.approx(1.0, abs=1e-12)


def test_optimal_vector_example1(example1):
    sol = ball_solve_quadratic(example1)
    x = sol.x_max
    assert np.linalg.norm(x) == pytest.approx(1.0)
    # maximizer coincidence: the ratio at x_max is beta_max
    assert ratio_value(example1, x) == pytest.approx(sol.beta_max, abs=1e-10)


def test_estimates(example1, example2):
    assert ball_asymptotic_estimate(example1) == pytest.approx(41.95, abs=0.01)
    assert ball_asymptotic_estimate(example2) == pytest.approx(-2.04, abs=0.01)
    same = HilbertBallProblem((1.0, 1.0), (1.0, 1.0), 3.0, 3.0, 1.0)
    assert ball_asymptotic_estimate(same) == 1.0


def test_asymptote_curves(example1):
    rows = ball_asymptote_curves(example1, [0.0, 1e4])
    beta, y1, y2, y3, y4 = rows[0]
    assert y1 == pytest.approx(SQRT105) and y2 == -15.0
    beta, y1, y2, y3, y4 = rows[1]
    assert abs(y1 - y4) < 1e-2
    # y1 and y2 cross at the optimum
    b = ball_solve_quadratic(example1).beta_max
    grid = np.linspace(43.0, 44.0, 101)
    diffs = [r[1] - r[2] for r in ball_asymptote_curves(example1, grid)]
    k = next(i for i in range(100) if diffs[i] > 0 >= diffs[i + 1])
    assert grid[k] <= b <= grid[k + 1]


def test_validation():
    with pytest.raises(InvalidProblemError):
        HilbertBallProblem((1.0,), (1.0,), 0.0, 1.0, 1.0)  # h == r||w||
    with pytest.raises(InvalidProblemError):
        HilbertBallProblem((1.0, 2.0), (1.0,), 0.0, 5.0, 1.0)
    with pytest.raises(InvalidProblemError):
        HilbertBallProblem((1.0,), (1.0,), 0.0, 5.0, 0.0)


def test_quadratic_vs_iterative(rng):
    for _ in range(300):
        p = random_ball(rng)
        a = ball_solve_quadratic(p).beta_max
        b = solve_ratio_max(p, opts=SolverOptions(strategy=Strategy.HYBRID)).beta_max
        assert b == pytest.approx(a, abs=1e-9)


def test_estimate_branch_sign(rng):
    for _ in range(300):
        p = random_ball(rng)
        beta = ball_solve_quadratic(p).beta_max
        if p.h0 + p.r * np.linalg.norm(p.w0) > 0:
            assert beta > 0
        else:
            assert beta <= 0


def test_scale_invariance(rng):
    for _ in range(100):
        p = random_ball(rng)
        lam = float(rng.uniform(0.1, 10))
        q = HilbertBallProblem(tuple(lam * np.array(p.w0)), p.w, lam * p.h0, p.h, p.r)
        a, b = solve_ratio_max(p), solve_ratio_max(q)
        assert b.beta_max == pytest.approx(lam * a.beta_max, rel=1e-9, abs=1e-9)
        np.testing.assert_allclose(b.x_max, a.x_max, atol=1e-6)


def _disk_grid(p, n_r=50, n_a=200):
    """10^4 points of the disk in span{w0, w}, lifted to R^n."""
    q, _ = np.linalg.qr(np.column_stack([p.w0, p.w]))
    rr = p.r * np.sqrt(np.arange(1, n_r + 1) / n_r)
    th = 2 * math.pi * np.arange(n_a) / n_a
    s = (rr[:, None] * np.cos(th)[None, :]).ravel()
    t = (rr[:, None] * np.sin(th)[None, :]).ravel()
    return s[:, None] * q[:, 0] + t[:, None] * q[:, 1]


@pytest.mark.parametrize("mode", list(ReductionMode))
def test_argmax_exact_against_disk_grid(mode, rng):
    for _ in range(200):
        p = random_ball(rng)
        beta = float(rng.uniform(-30, 30))
        pts = _disk_grid(p)
        w0x = pts @ np.array(p.w0) + p.h0
        wx = pts @ np.array(p.w) + p.h
        vals = w0x - beta * wx if mode is ReductionMode.DIFFERENCE else wx * (w0x - beta * wx)
        x = p.argmax_parametric(beta, mode)
        assert np.linalg.norm(x) <= p.r * (1 + 1e-12)
        a, b = p.eval_W0(x), p.eval_W(x)
        got = a - beta * b if mode is ReductionMode.DIFFERENCE else b * (a - beta * b)
        assert got >= vals.max() - 1e-9 * max(1.0, abs(vals.max()))
