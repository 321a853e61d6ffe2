"""Command-line front end.

Exit codes: 0 success, 1 example check failed, 2 input error,
3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import dump_config, load_config
from .core import ReductionMode, Solution, Strategy, evaluate_j, ratio_value, solve_ratio_max
from .errors import ConfigError, NoBracketError, NonConvergenceError, RatioMaxError
from .examples import DEFAULT_TOLERANCE, run_examples
from .problems import (
    ball_asymptote_curves,
    ball_asymptotic_estimate,
    log_ratio_solve_nested,
)

EXIT_OK, EXIT_EXAMPLES, EXIT_INPUT, EXIT_CONVERGENCE = 0, 1, 2, 3

CURVE_HEADER = ("beta", "j", "ratio_at_xbeta")
ASYMPTOTE_HEADER = ("beta", "y1", "y2", "y3", "y4")


class InputError(Exception):
    """Bad command-line input that is not a config problem."""


@dataclass(frozen=True)
class CurveSample:
    beta: float
    j: float
    ratio_at_xbeta: float


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _solve(cfg, strategy=None, tol=None, route="direct") -> Solution:
    opts = cfg.solver_options(strategy=strategy, tolerance_j=tol)
    problem = cfg.build()
    if cfg.family == "logratio" and route == "nested":
        return log_ratio_solve_nested(problem, opts)
    return solve_ratio_max(problem, cfg.mode, opts)


def _x_repr(x):
    if isinstance(x, np.ndarray):
        return [float(v) for v in x]
    return float(x)


def cmd_solve(args, out) -> int:
    cfg = load_config(args.config)
    if args.dump_config:
        out.write(dump_config(cfg))
        return EXIT_OK
    sol = _solve(cfg, args.strategy, args.tol, args.route)
    estimate = ball_asymptotic_estimate(cfg.build()) if cfg.family == "ball" else None
    record = {
        "beta_max": sol.beta_max,
        "x_max": _x_repr(sol.x_max),
        "residual": sol.residual,
        "iterations": sol.iterations,
        "estimate": estimate,
    }
    if args.json:
        out.write(json.dumps(record) + "\n")
        return EXIT_OK
    x = record["x_max"]
    x_text = ", ".join(f"{v:.12g}" for v in x) if isinstance(x, list) else f"{x:.12g}"
    out.write(f"family      {cfg.family}\n")
    out.write(f"beta_max    {sol.beta_max:.12g}\n")
    out.write(f"x_max       {x_text}\n")
    out.write(f"residual    {sol.residual:.3e}\n")
    out.write(f"iterations  {sol.iterations}\n")
    if estimate is not None:
        out.write(f"estimate    {estimate:.12g}\n")
    return EXIT_OK


def _beta_grid(args, cfg):
    lo, hi = args.beta_from, args.beta_to
    if lo is None or hi is None:
        beta_max = _solve(cfg).beta_max
        lo = min(0.0, beta_max) if lo is None else lo
        hi = max(0.0, beta_max) if hi is None else hi
    if args.samples < 1:
        raise InputError("--samples must be >= 1")
    if args.samples == 1:
        return np.array([lo])
    if not lo < hi:
        raise InputError(f"need --from < --to, got {lo} and {hi}")
    return np.linspace(lo, hi, args.samples)


def curve_samples(problem, betas, mode=ReductionMode.DIFFERENCE) -> list:
    rows = []
    for beta in betas:
        x, j = evaluate_j(problem, float(beta), mode)
        rows.append(CurveSample(float(beta), j, ratio_value(problem, x)))
    return rows


def _write_csv(args, header, rows, out):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    text = buf.getvalue()
    if args.out in (None, "-"):
        out.write(text)
        return
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None


def cmd_curve(args, out) -> int:
    cfg = load_config(args.config)
    if args.dump_config:
        out.write(dump_config(cfg))
        return EXIT_OK
    betas = _beta_grid(args, cfg)
    rows = curve_samples(cfg.build(), betas, cfg.mode)
    _write_csv(args, CURVE_HEADER, [(s.beta, s.j, s.ratio_at_xbeta) for s in rows], out)
    return EXIT_OK


def cmd_asymptote(args, out) -> int:
    cfg = load_config(args.config)
    if cfg.family != "ball":
        raise InputError(f"asymptote needs a ball config, got family {cfg.family!r}")
    if args.dump_config:
        out.write(dump_config(cfg))
        return EXIT_OK
    betas = _beta_grid(args, cfg)
    _write_csv(args, ASYMPTOTE_HEADER, ball_asymptote_curves(cfg.build(), betas), out)
    return EXIT_OK


def cmd_examples(args, out, overrides=None) -> int:
    checks = run_examples(args.tol, overrides)
    out.write(f"{'example':<10} {'quantity':<9} {'expected':>10} {'actual':>14}  result\n")
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        out.write(f"{c.name:<10} {c.quantity:<9} {c.expected:>10.2f} {c.actual:>14.6f}  {status}\n")
    failed = [c for c in checks if not c.passed]
    if failed:
        out.write(f"{len(failed)} of {len(checks)} checks failed at tolerance {args.tol:g}\n")
        return EXIT_EXAMPLES
    out.write(f"all {len(checks)} checks passed at tolerance {args.tol:g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratiomax",
        description="Maximize W0(x)/W(x) by parametric reduction and root finding.")
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="config file, or a shipped name such as example1")
    common.add_argument("--dump-config", action="store_true",
                        help="print the normalized config and exit")

    p = sub.add_parser("solve", parents=[common], help="solve one problem")
    p.add_argument("--strategy", choices=[s.value for s in Strategy])
    p.add_argument("--tol", type=float, help="absolute tolerance on |j(beta)|")
    p.add_argument("--route", choices=["direct", "nested"], default="direct",
                   help="log-ratio route (ignored for other families)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_solve)

    for name, handler, what in (("curve", cmd_curve, "beta, j(beta), J(x_beta)"),
                                ("asymptote", cmd_asymptote, "y1..y4 for ball problems")):
        p = sub.add_parser(name, parents=[common], help=f"CSV sweep of {what}")
        p.add_argument("--from", dest="beta_from", type=float)
        p.add_argument("--to", dest="beta_to", type=float)
        p.add_argument("--samples", type=int, default=101)
        p.add_argument("--out", help="output path (default: stdout)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("examples", help="reproduce the two built-in ball examples")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(handler=cmd_examples)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, out)
    except (ConfigError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NonConvergenceError, NoBracketError) as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except RatioMaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
