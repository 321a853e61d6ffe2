import math

import numpy as np
import pytest

from ratiomax import solve_ratio_max
from ratiomax.errors import OracleDomainError
from ratiomax.oracle import disk_max_ball, grid_max_interval
from ratiomax.problems import HilbertBallProblem, ball_solve_quadratic


def test_interval_example():
    res = grid_max_interval(lambda x: x, lambda x: x * x + 1, 0.0, 2.0, 2000)
    assert res.x_star == 1.0 and res.j_star == 0.5
    assert res.resolution == 2000
    assert 0 < res.gap_bound < 1e-3


def test_interval_first_node_on_ties():
    res = grid_max_interval(lambda x: 3.0 + 0 * x, lambda x: 1.0 + 0 * x, -1.0, 1.0, 10)
    assert res.x_star == -1.0


def test_interval_domain_error():
    with pytest.raises(OracleDomainError):
        grid_max_interval(lambda x: x, lambda x: x - 0.5, 0.0, 1.0, 10)


def test_interval_lower_bound_and_refinement():
    W0 = lambda x: np.sin(3 * x) + 2  # noqa: E731
    W = lambda x: 1.5 + np.cos(x)  # noqa: E731
    xs = np.linspace(0, 4, 4_000_001)
    truth = np.max(W0(xs) / W(xs))
    prev = -math.inf
    for m in (10, 20, 40, 80, 160, 320):
        res = grid_max_interval(W0, W, 0.0, 4.0, m)
        assert res.j_star <= truth + 1e-15
        assert res.j_star >= prev
        assert truth - res.j_star <= res.gap_bound + 1e-12
        prev = res.j_star


def test_disk_examples(example1, example2):
    for p in (example1, example2):
        res = disk_max_ball(p, 2000)
        assert res.j_star == pytest.approx(ball_solve_quadratic(p).beta_max, abs=0.01)
        assert np.linalg.norm(res.x_star) <= p.r + 1e-12


def test_disk_refinement_monotone(example1):
    vals = [disk_max_ball(example1, m).j_star for m in (25, 50, 100, 200)]
    assert vals == sorted(vals)


def test_disk_collinear_span():
    p = HilbertBallProblem((2.0, 0.0, 0.0), (1.0, 0.0, 0.0), 1.0, 3.0, 1.0)
    res = disk_max_ball(p, 100)
    # (1 + 2s) / (3 + s) is increasing in s, so s = r
    assert res.j_star == pytest.approx(0.75)
    assert res.j_star == pytest.approx(solve_ratio_max(p).beta_max, abs=1e-12)


def test_disk_zero_vectors():
    p = HilbertBallProblem((0.0, 0.0), (0.0, 0.0), 1.0, 4.0, 1.0)
    assert disk_max_ball(p).j_star == 0.25
