import math

import numpy as np
import pytest

from ratiomax.errors import InvalidProblemError
from ratiomax.expr import Expression
from ratiomax.problems import LogRatioProblem, log_ratio_solve_direct, log_ratio_solve_nested
from ratiomax.problems.sampling import random_logratio


def test_identity_is_one():
    f = Expression("3 + x^2")
    p = LogRatioProblem(f, f, 0.0, 2.0)
    assert log_ratio_solve_direct(p).beta_max == pytest.approx(1.0, abs=1e-12)
    assert log_ratio_solve_nested(p).beta_max == pytest.approx(1.0, abs=1e-12)


def test_exponential_pair():
    # ln(e^{2x}) / ln(e^x) = 2 everywhere on [1, 2]
    p = LogRatioProblem(Expression("exp(2*x)"), Expression("exp(x)"), 1.0, 2.0)
    assert log_ratio_solve_direct(p).beta_max == pytest.approx(2.0, abs=1e-10)
    assert log_ratio_solve_nested(p).beta_max == pytest.approx(2.0, abs=1e-10)


def test_against_dense_grid():
    p = LogRatioProblem(Expression("1 + x^2"), Expression("2 + x"), 0.0, 1.0)
    xs = np.linspace(0.0, 1.0, 10_000_001)
    best = np.max(np.log1p(xs**2) / np.log(2 + xs))
    sol = log_ratio_solve_direct(p)
    assert sol.beta_max == pytest.approx(best, abs=1e-6)
    assert sol.beta_max >= best - 1e-12


def test_gamma_at_zero_is_max_f0():
    p = LogRatioProblem(Expression("1 + x^2"), Expression("2 + x"), 0.0, 1.0)
    _, gamma = p.power_ratio_max(0.0)
    assert gamma == pytest.approx(2.0, abs=1e-12)


def test_nested_matches_direct(rng):
    for _ in range(10):
        p = random_logratio(rng)
        a = log_ratio_solve_direct(p).beta_max
        b = log_ratio_solve_nested(p).beta_max
        assert b == pytest.approx(a, abs=1e-6)


def test_rejects_nonpositive_log():
    with pytest.raises(InvalidProblemError):
        LogRatioProblem(Expression("2 + x"), Expression("0.5 + x"), 0.0, 1.0)  # ln f crosses 0
    with pytest.raises(InvalidProblemError):
        LogRatioProblem(Expression("x"), Expression("2 + x"), 0.0, 1.0)  # f0 = 0 at x1


def test_accepts_plain_callables():
    p = LogRatioProblem(lambda x: 2.0 + x, lambda x: math.e + 0 * x, 0.0, 1.0)
    assert log_ratio_solve_direct(p).beta_max == pytest.approx(math.log(3.0), abs=1e-9)
