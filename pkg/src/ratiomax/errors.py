"""Exception hierarchy shared by the solver, problem families and CLI."""


class RatioMaxError(Exception):
    """Base class for all errors raised by ratiomax."""


class ModeViolationError(RatioMaxError):
    """The denominator functional breaks the sign requirement of the reduction mode."""


class DivisionDomainError(RatioMaxError):
    """The denominator vanishes where a ratio is requested."""


class InvalidProblemError(RatioMaxError, ValueError):
    """Problem data violates a family's validity invariants.

    Attributes:
        field: name of the offending input field, if one can be singled out.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class InvalidBracketError(RatioMaxError, ValueError):
    """A bracket does not satisfy beta_lo < beta_hi, j_lo > 0 > j_hi."""


class NoBracketError(RatioMaxError):
    """Bracket expansion ran out of budget without a sign change.

    Attributes:
        last_interval: the last probed (beta_lo, beta_hi) pair.
    """

    def __init__(self, message, last_interval):
        super().__init__(message)
        self.last_interval = last_interval


class NonConvergenceError(RatioMaxError):
    """An iteration budget was exhausted before the tolerances were met.

    Attributes:
        trace: list of (beta, j) pairs evaluated so far.
        level: which loop failed ("outer", "inner", or "root").
    """

    def __init__(self, message, trace=(), level="root"):
        super().__init__(f"[{level}] {message}")
        self.detail = message
        self.trace = list(trace)
        self.level = level


class UnsupportedStrategyError(RatioMaxError, ValueError):
    """The requested strategy cannot be combined with the reduction mode."""


class EstimateUndefinedError(RatioMaxError):
    """The asymptotic estimate has a zero denominator."""


class InternalInconsistencyError(RatioMaxError):
    """A closed-form route found no admissible root where one must exist."""


class OracleDomainError(RatioMaxError):
    """A brute-force oracle hit a grid node where W = 0."""


class ConfigError(RatioMaxError):
    """A problem config could not be parsed or validated.

    Attributes:
        line: 1-based line number of the offending entry, if known.
    """

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.path = path
        self.line = line
