"""Root finding for strictly sign-structured scalar functions.

All routines assume the orientation of ``j``: positive left of the root,
negative right of it. Brackets with the opposite orientation are rejected
instead of being swapped, which surfaces sign errors in problem code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidBracketError, NoBracketError, NonConvergenceError


@dataclass(frozen=True)
class Bracket:
    beta_lo: float
    beta_hi: float
    j_lo: float
    j_hi: float

    def __post_init__(self):
        if not self.beta_lo < self.beta_hi:
            raise InvalidBracketError(
                f"need beta_lo < beta_hi, got [{self.beta_lo!r}, {self.beta_hi!r}]")
        if not (self.j_lo > 0 and self.j_hi < 0):
            raise InvalidBracketError(
                f"need j_lo > 0 > j_hi, got j_lo={self.j_lo!r}, j_hi={self.j_hi!r}")

    @property
    def width(self) -> float:
        return self.beta_hi - self.beta_lo


@dataclass(frozen=True)
class RootReport:
    """Outcome of a bracketed root search.

    ``value`` is ``j(root)``; ``evaluations`` counts calls to the
    evaluator made by the search itself (the bracket ends are not
    re-evaluated).
    """

    root: float
    evaluations: int
    final_bracket_width: float
    value: float


def find_bracket(j_evaluator: Callable[[float], float], beta_seed: float,
                 expansion_factor: float = 2.0, budget: int = 64, *,
                 initial_step: float = 1.0, j_seed: float | None = None) -> Bracket:
    """Grow an interval from ``beta_seed`` until ``j`` changes sign.

    The sign of ``j(beta_seed)`` tells on which side the root lies, so only
    that side is probed, at distances ``initial_step * factor**k``. If the
    seed is itself an exact root, both sides are probed symmetrically.

    Args:
        j_evaluator: the function whose root is sought.
        beta_seed: starting point.
        expansion_factor: growth factor of the probe distance, > 1.
        budget: maximum number of expansion rounds, >= 1.
        initial_step: first probe distance.
        j_seed: ``j(beta_seed)`` if already known; saves one call.

    Raises:
        NoBracketError: if the budget runs out without a sign change.
    """
    if not expansion_factor > 1:
        raise ValueError("expansion_factor must be > 1")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    j0 = j_evaluator(beta_seed) if j_seed is None else j_seed
    step = initial_step
    lo = hi = beta_seed
    j_lo = j_hi = j0
    for _ in range(budget):
        if j0 == 0:
            lo, hi = beta_seed - step, beta_seed + step
            j_lo, j_hi = j_evaluator(lo), j_evaluator(hi)
            if j_lo > 0 and j_hi < 0:
                return Bracket(lo, hi, j_lo, j_hi)
        elif j0 > 0:
            probe = beta_seed + step
            j_probe = j_evaluator(probe)
            hi = probe
            if j_probe < 0:
                return Bracket(lo, probe, j_lo, j_probe)
            if j_probe > 0:
                lo, j_lo = probe, j_probe
        else:
            probe = beta_seed - step
            j_probe = j_evaluator(probe)
            lo = probe
            if j_probe > 0:
                return Bracket(probe, hi, j_probe, j_hi)
            if j_probe < 0:
                hi, j_hi = probe, j_probe
        step *= expansion_factor
    raise NoBracketError(
        f"no sign change of j found after {budget} expansions from {beta_seed!r}; "
        f"last probed interval [{lo!r}, {hi!r}]", (lo, hi))


def _best_end(lo, hi, j_lo, j_hi):
    return (lo, j_lo) if abs(j_lo) <= abs(j_hi) else (hi, j_hi)


def bisect(j_evaluator: Callable[[float], float], bracket: Bracket, opts) -> RootReport:
    """Plain bisection until ``|j| <= tolerance_j`` or width ``<= tolerance_beta``."""
    lo, hi, j_lo, j_hi = bracket.beta_lo, bracket.beta_hi, bracket.j_lo, bracket.j_hi
    evals = 0
    while True:
        root, val = _best_end(lo, hi, j_lo, j_hi)
        if abs(val) <= opts.tolerance_j or hi - lo <= opts.tolerance_beta:
            return RootReport(root, evals, hi - lo, val)
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            # adjacent floats: the bracket cannot shrink further
            return RootReport(root, evals, hi - lo, val)
        if evals >= opts.max_iterations:
            raise NonConvergenceError(
                f"bisection exceeded {opts.max_iterations} iterations; "
                f"bracket [{lo!r}, {hi!r}]")
        j_mid = j_evaluator(mid)
        evals += 1
        if j_mid > 0:
            lo, j_lo = mid, j_mid
        elif j_mid < 0:
            hi, j_hi = mid, j_mid
        else:
            return RootReport(mid, evals, hi - lo, j_mid)


def hybrid_solve(j_evaluator: Callable[[float], float],
                 step_proposer: Callable[[float], float],
                 bracket: Bracket, opts) -> RootReport:
    """Proposal steps safeguarded by a maintained bracket.

    Each iteration asks ``step_proposer(beta_lo)`` for a new point. The
    proposal is used only if it lies strictly inside the current bracket;
    otherwise the midpoint is taken. After two consecutive accepted
    proposals that fail to halve ``|j|``, one bisection step is forced.
    """
    lo, hi, j_lo, j_hi = bracket.beta_lo, bracket.beta_hi, bracket.j_lo, bracket.j_hi
    evals = 0
    slow = 0
    best_abs = min(abs(j_lo), abs(j_hi))
    while True:
        root, val = _best_end(lo, hi, j_lo, j_hi)
        if abs(val) <= opts.tolerance_j or hi - lo <= opts.tolerance_beta:
            return RootReport(root, evals, hi - lo, val)
        if evals >= opts.max_iterations:
            raise NonConvergenceError(
                f"hybrid search exceeded {opts.max_iterations} iterations; "
                f"bracket [{lo!r}, {hi!r}]")
        cand = None
        if slow < 2:
            proposal = step_proposer(lo)
            if math.isfinite(proposal) and lo < proposal < hi:
                cand = proposal
        bisected = cand is None
        if bisected:
            cand = lo + (hi - lo) / 2
            slow = 0
            if not lo < cand < hi:
                return RootReport(root, evals, hi - lo, val)
        j_c = j_evaluator(cand)
        evals += 1
        if j_c > 0:
            lo, j_lo = cand, j_c
        elif j_c < 0:
            hi, j_hi = cand, j_c
        else:
            return RootReport(cand, evals, hi - lo, j_c)
        if not bisected:
            slow = slow + 1 if abs(j_c) > 0.5 * best_abs else 0
        best_abs = min(best_abs, abs(j_c))
