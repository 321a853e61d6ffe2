"""Problem config files.

A config is plain ``key = value`` text with exactly one family section and
an optional ``[solver]`` section. ``#`` starts a comment. Vectors are
comma-separated numbers; log-ratio evaluators are expressions in ``x``
(see :mod:`ratiomax.expr`)::

    [ball]
    w0 = 1, 1, 1, 1, 1, 0, 0, 0, 0, 10
    w  = 1, 0, 0, 0, 0, 1, 1, 1, 1, 1
    h0 = 15
    h  = 2.7
    r  = 1

    [solver]
    strategy = hybrid
    tolerance_j = 1e-10

Every error is reported with the file and line it comes from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .core import ReductionMode, SolverOptions, Strategy
from .errors import ConfigError, InvalidProblemError
from .expr import Expression, ExpressionError
from .problems import (
    HilbertBallProblem,
    LinearIntervalProblem,
    LogRatioProblem,
    QuadraticIntervalProblem,
)

DATA_DIR = Path(__file__).parent / "data"

# field -> kind; order is the dump order
FAMILIES = {
    "linear": {"a": "real", "b": "real", "a0": "real", "b0": "real", "x1": "real", "x2": "real"},
    "quadratic": {"a": "real", "b": "real", "c": "real", "a0": "real", "b0": "real",
                  "c0": "real", "x1": "real", "x2": "real"},
    "logratio": {"f0_expr": "expr", "f_expr": "expr", "x1": "real", "x2": "real",
                 "grid_resolution": "count", "refine_tolerance": "real"},
    "ball": {"w0": "vector", "w": "vector", "h0": "real", "h": "real", "r": "real"},
}
OPTIONAL = {"logratio": {"grid_resolution", "refine_tolerance"}}
SOLVER_FIELDS = {
    "strategy": "strategy",
    "mode": "mode",
    "tolerance_j": "real",
    "tolerance_beta": "real",
    "max_iterations": "count",
}


@dataclass(frozen=True)
class ProblemConfig:
    """Parsed config: family name, family fields and solver overrides.

    ``lines`` maps field names to source line numbers and is ignored by
    equality, so a dumped and re-parsed config compares equal.
    """

    family: str
    params: dict
    solver: dict = field(default_factory=dict)
    path: str | None = field(default=None, compare=False)
    lines: dict = field(default_factory=dict, compare=False, repr=False)

    def build(self):
        """Construct the problem object, mapping invariant failures to lines."""
        p = self.params
        try:
            if self.family == "linear":
                return LinearIntervalProblem(**p)
            if self.family == "quadratic":
                return QuadraticIntervalProblem(**p)
            if self.family == "ball":
                return HilbertBallProblem(**p)
            kwargs = {k: v for k, v in p.items() if k not in ("f0_expr", "f_expr")}
            return LogRatioProblem(Expression(p["f0_expr"]), Expression(p["f_expr"]),
                                   f0_expr=p["f0_expr"], f_expr=p["f_expr"], **kwargs)
        except InvalidProblemError as exc:
            line = self.lines.get(exc.field, self.lines.get("[family]"))
            name = f"{exc.field}: " if exc.field else ""
            raise ConfigError(f"{name}{exc}", self.path, line) from None

    def solver_options(self, **overrides) -> SolverOptions:
        kwargs = {k: v for k, v in self.solver.items() if k != "mode"}
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        if "strategy" in kwargs:
            kwargs["strategy"] = Strategy(kwargs["strategy"])
        try:
            return SolverOptions(**kwargs)
        except ValueError as exc:
            raise ConfigError(f"solver: {exc}", self.path, self.lines.get("[solver]")) from None

    @property
    def mode(self) -> ReductionMode:
        return ReductionMode(self.solver.get("mode", ReductionMode.DIFFERENCE.value))


def _parse_value(kind, raw, path, lineno, key):
    def fail(msg):
        raise ConfigError(f"{key}: {msg}", path, lineno)

    if kind == "expr":
        try:
            Expression(raw)
        except ExpressionError as exc:
            fail(str(exc))
        return raw
    if kind == "strategy":
        if raw not in {s.value for s in Strategy}:
            fail(f"expected one of bisect, dinkelbach, hybrid; got {raw!r}")
        return raw
    if kind == "mode":
        if raw not in {m.value for m in ReductionMode}:
            fail(f"expected difference or weighted_difference; got {raw!r}")
        return raw
    if kind == "count":
        try:
            value = int(raw)
        except ValueError:
            fail(f"expected an integer, got {raw!r}")
        return value
    parts = [s.strip() for s in raw.split(",")] if kind == "vector" else [raw]
    numbers = []
    for part in parts:
        try:
            number = float(part)
        except ValueError:
            fail(f"expected a number, got {part!r}")
        if not math.isfinite(number):
            fail(f"expected a finite number, got {part!r}")
        numbers.append(number)
    return tuple(numbers) if kind == "vector" else numbers[0]


def parse_config(text: str, path: str | None = None) -> ProblemConfig:
    """Parse and validate config text.

    Raises:
        ConfigError: on any syntax or validation problem.
    """
    family = None
    section = None
    params: dict = {}
    solver: dict = {}
    lines: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"malformed section header {line!r}", path, lineno)
            name = line[1:-1].strip()
            if name == "solver":
                if "[solver]" in lines:
                    raise ConfigError("duplicate [solver] section", path, lineno)
                lines["[solver]"] = lineno
            elif name in FAMILIES:
                if family is not None:
                    raise ConfigError(f"second family section [{name}]; exactly one is allowed",
                                      path, lineno)
                family = name
                lines["[family]"] = lineno
            else:
                raise ConfigError(f"unknown section [{name}]", path, lineno)
            section = name
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {line!r}", path, lineno)
        key, raw = (s.strip() for s in line.split("=", 1))
        if section is None:
            raise ConfigError(f"{key}: entry outside any section", path, lineno)
        schema = SOLVER_FIELDS if section == "solver" else FAMILIES[section]
        target = solver if section == "solver" else params
        if key not in schema:
            raise ConfigError(f"unknown field {key!r} in [{section}]", path, lineno)
        if key in target:
            raise ConfigError(f"duplicate field {key!r}", path, lineno)
        target[key] = _parse_value(schema[key], raw, path, lineno, key)
        if section != "solver":
            lines[key] = lineno
        else:
            lines[f"solver.{key}"] = lineno
    if family is None:
        raise ConfigError("no family section; expected one of " + ", ".join(FAMILIES), path)
    missing = [k for k in FAMILIES[family] if k not in params and k not in OPTIONAL.get(family, ())]
    if missing:
        raise ConfigError(f"[{family}] is missing field(s): {', '.join(missing)}",
                          path, lines["[family]"])
    ordered = {k: params[k] for k in FAMILIES[family] if k in params}
    cfg = ProblemConfig(family, ordered, solver, path, lines)
    cfg.build()
    cfg.solver_options()
    return cfg


def resolve_path(name: str) -> Path:
    """A real file path, or the shipped config of that name (e.g. ``example1``)."""
    path = Path(name)
    if path.exists():
        return path
    shipped = DATA_DIR / f"{name}.cfg"
    if shipped.exists():
        return shipped
    return path


def load_config(name: str) -> ProblemConfig:
    path = resolve_path(name)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", str(path)) from None
    return parse_config(text, str(path))


def shipped_configs() -> list[Path]:
    return sorted(DATA_DIR.glob("*.cfg"))


def _format(kind, value):
    if kind == "vector":
        return ", ".join(repr(v) for v in value)
    if kind == "real":
        return repr(float(value))
    return str(value)


def dump_config(cfg: ProblemConfig) -> str:
    """Render a config that parses back to an equal :class:`ProblemConfig`."""
    out = [f"[{cfg.family}]"]
    schema = FAMILIES[cfg.family]
    for key, value in cfg.params.items():
        out.append(f"{key} = {_format(schema[key], value)}")
    if cfg.solver:
        out.append("")
        out.append("[solver]")
        for key in SOLVER_FIELDS:
            if key in cfg.solver:
                out.append(f"{key} = {_format(SOLVER_FIELDS[key], cfg.solver[key])}")
    return "\n".join(out) + "\n"
