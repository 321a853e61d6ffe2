import math

import numpy as np
import pytest

from ratiomax.problems import HilbertBallProblem, LinearIntervalProblem, QuadraticIntervalProblem

W0_EX = (1, 1, 1, 1, 1, 0, 0, 0, 0, 10)
W_EX = (1, 0, 0, 0, 0, 1, 1, 1, 1, 1)
SQRT105 = math.sqrt(105.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def example1():
    return HilbertBallProblem(W0_EX, W_EX, 15.0, 2.7, 1.0)


@pytest.fixture
def example2():
    return HilbertBallProblem(W0_EX, W_EX, -15.0, 2.7, 1.0)


@pytest.fixture
def lin_increasing():
    """2x / (x + 1) on [0, 1]."""
    return LinearIntervalProblem(a=1, b=1, a0=2, b0=0, x1=0, x2=1)


@pytest.fixture
def quad_bump():
    """x / (x^2 + 1) on [0, 2]."""
    return QuadraticIntervalProblem(a=1, b=0, c=1, a0=0, b0=1, c0=0, x1=0, x2=2)
