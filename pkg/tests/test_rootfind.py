import numpy as np
import pytest

from ratiomax import SolverOptions
from ratiomax.errors import InvalidBracketError, NoBracketError, NonConvergenceError
from ratiomax.problems import ball_j, ball_j_many
from ratiomax.rootfind import Bracket, bisect, find_bracket, hybrid_solve


class Counting:
    def __init__(self, fn):
        self.fn = fn
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return self.fn(x)


def neg(b):
    return -b


def test_bracket_rejects_wrong_orientation():
    with pytest.raises(InvalidBracketError):
        Bracket(-1.0, 1.0, -1.0, 1.0)
    with pytest.raises(InvalidBracketError):
        Bracket(1.0, -1.0, 1.0, -1.0)


def test_find_bracket_linear_one_expansion():
    j = Counting(neg)
    br = find_bracket(j, 0.5, 2.0, 10)
    assert (br.beta_lo, br.beta_hi) == (-0.5, 0.5)
    assert j.calls == 2


def test_find_bracket_example2(example2):
    br = find_bracket(lambda b: ball_j(example2, b), 0.0, 2.0, 64)
    assert br.beta_lo <= -2.0 and br.beta_hi <= 0.0
    assert br.j_lo > 0 > br.j_hi
    # j(-2) = sqrt(173) - 15 + 5.4
    assert ball_j(example2, -2.0) == pytest.approx(np.sqrt(173.0) - 9.6, rel=1e-14)


def test_find_bracket_example1(example1):
    br = find_bracket(lambda b: ball_j(example1, b), 0.0, 2.0, 64)
    assert br.beta_lo <= 43.61 <= br.beta_hi
    assert br.beta_hi > 43.61


def test_find_bracket_seed_at_root():
    br = find_bracket(neg, 0.0, 2.0, 4)
    assert br.beta_lo < 0 < br.beta_hi


@pytest.mark.parametrize("budget", [1, 3, 7])
def test_find_bracket_call_budget(budget):
    j = Counting(lambda b: 1.0)  # never changes sign
    with pytest.raises(NoBracketError) as info:
        find_bracket(j, 0.0, 2.0, budget)
    assert j.calls <= 2 * budget + 1
    assert len(info.value.last_interval) == 2


def test_find_bracket_validates_args():
    with pytest.raises(ValueError):
        find_bracket(neg, 0.0, 1.0, 5)
    with pytest.raises(ValueError):
        find_bracket(neg, 0.0, 2.0, 0)


def test_bisect_linear():
    rep = bisect(neg, Bracket(-1.0, 1.0, 1.0, -1.0), SolverOptions())
    assert rep.root == 0.0
    assert rep.evaluations == 1


def test_bisect_offset_root_tolerance():
    opts = SolverOptions(tolerance_j=1e-10)
    rep = bisect(lambda b: 0.3 - b, Bracket(-1.0, 1.0, 1.3, -0.7), opts)
    assert abs(0.3 - rep.root) <= 1e-10 or rep.final_bracket_width <= opts.tolerance_beta
    assert -1.0 <= rep.root <= 1.0


@pytest.mark.parametrize("fixture, expected", [("example1", 43.61), ("example2", -1.18)])
def test_bisect_examples(fixture, expected, request):
    p = request.getfixturevalue(fixture)
    j = lambda b: ball_j(p, b)  # noqa: E731
    rep = bisect(j, find_bracket(j, 0.0), SolverOptions())
    assert rep.root == pytest.approx(expected, abs=0.01)


def test_bisect_nonconvergence():
    with pytest.raises(NonConvergenceError):
        bisect(lambda b: 0.3 - b, Bracket(-1.0, 1.0, 1.3, -0.7), SolverOptions(max_iterations=3))


def test_evaluation_accounting():
    j = Counting(lambda b: 0.123 - b)
    rep = bisect(j, Bracket(-4.0, 4.0, 4.123, -3.877), SolverOptions())
    assert rep.evaluations == j.calls
    j2 = Counting(lambda b: 0.123 - b)
    rep2 = hybrid_solve(j2, lambda b: b + 0.01, Bracket(-4.0, 4.0, 4.123, -3.877), SolverOptions())
    assert rep2.evaluations == j2.calls


def test_bracket_invariant_preserved_during_bisect():
    seen = []

    def j(b):
        v = 0.77 - b ** 3
        seen.append((b, v))
        return v

    bisect(j, Bracket(-2.0, 2.0, 8.77, -7.23), SolverOptions())
    root = 0.77 ** (1 / 3)
    for b, v in seen:
        assert (v > 0) == (b < root) or abs(v) <= 1e-10


def test_hybrid_with_midpoint_proposer_matches_bisect():
    shadow = {"lo": -1.0, "hi": 1.0}

    def j(b):
        v = -b + 0.2
        if v > 0:
            shadow["lo"] = b
        elif v < 0:
            shadow["hi"] = b
        return v

    def midpoint(_beta):
        return shadow["lo"] + (shadow["hi"] - shadow["lo"]) / 2

    br = Bracket(-1.0, 1.0, 1.2, -0.8)
    ref = bisect(lambda b: -b + 0.2, br, SolverOptions())
    got = hybrid_solve(j, midpoint, br, SolverOptions())
    assert got == ref


def test_hybrid_constant_proposer_falls_back():
    br = Bracket(-1.0, 1.0, 1.3, -0.7)
    rep = hybrid_solve(lambda b: 0.3 - b, lambda b: br.beta_lo, br, SolverOptions())
    assert rep.root == pytest.approx(0.3, abs=1e-10)


def test_hybrid_dinkelbach_beats_bisection(example1):
    from ratiomax import dinkelbach_step

    j_b = Counting(lambda b: ball_j(example1, b))
    j_h = Counting(lambda b: ball_j(example1, b))
    opts = SolverOptions(tolerance_j=1e-10)
    br = find_bracket(lambda b: ball_j(example1, b), 0.0)
    rb = bisect(j_b, br, opts)
    rh = hybrid_solve(j_h, lambda b: dinkelbach_step(example1, b), br, opts)
    assert rh.root == pytest.approx(43.61, abs=0.01)
    assert j_h.calls < j_b.calls


def test_determinism(example1):
    j = lambda b: ball_j(example1, b)  # noqa: E731
    br = find_bracket(j, 0.0)
    assert bisect(j, br, SolverOptions()) == bisect(j, br, SolverOptions())


def test_ball_j_many_matches_scalar(example1):
    betas = np.linspace(-50, 50, 11)
    np.testing.assert_allclose(ball_j_many(example1, betas),
                               [ball_j(example1, b) for b in betas], rtol=1e-13, atol=1e-12)
