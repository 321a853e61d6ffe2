import pytest

from ratiomax.config import dump_config, load_config, parse_config, shipped_configs
from ratiomax.core import ReductionMode, Strategy
from ratiomax.errors import ConfigError

GOOD = """\
# comment
[linear]
a = 1
b = 1     # trailing comment
a0 = 2
b0 = 0
x1 = 0
x2 = 1

[solver]
strategy = dinkelbach
mode = weighted_difference
tolerance_j = 1e-8
"""


@pytest.mark.parametrize("path", shipped_configs(), ids=lambda p: p.stem)
def test_round_trip_shipped(path):
    cfg = load_config(str(path))
    again = parse_config(dump_config(cfg))
    assert again == cfg
    assert dump_config(again) == dump_config(cfg)


def test_shipped_names_resolve():
    assert load_config("example1").params["h0"] == 15.0
    assert {p.stem for p in shipped_configs()} >= {"example1", "example2", "linear",
                                                    "quadratic", "logratio"}


def test_good_parse():
    cfg = parse_config(GOOD)
    assert cfg.family == "linear"
    assert cfg.mode is ReductionMode.WEIGHTED_DIFFERENCE
    opts = cfg.solver_options()
    assert opts.strategy is Strategy.DINKELBACH and opts.tolerance_j == 1e-8
    assert cfg.solver_options(strategy="bisect").strategy is Strategy.BISECTION


def _error(text):
    with pytest.raises(ConfigError) as info:
        parse_config(text, "t.cfg")
    return info.value


@pytest.mark.parametrize("text, line", [
    ("[linear]\na = 1\nb = x\n", 3),
    ("[linear]\nbogus = 1\n", 2),
    ("[linear\n", 1),
    ("[nope]\n", 1),
    ("a = 1\n", 1),
    ("[linear]\na = 1\na = 2\n", 3),
    ("[linear]\na = 1\njunk\n", 3),
    ("[ball]\nw0=1\nw=1\nh0=0\nh=inf\nr=1\n", 5),
    ("[linear]\na=1\nb=1\na0=1\nb0=1\nx1=0\nx2=1\n[quadratic]\n", 8),
    ("[solver]\nstrategy = newton\n", 2),
    ("[logratio]\nf0_expr = 1 + y\n", 2),
])
def test_line_precise_errors(text, line):
    err = _error(text)
    assert err.line == line
    assert str(err).startswith(f"t.cfg:{line}:")


def test_invariant_errors_point_at_field():
    # W = x - 0.5 is negative at the left endpoint
    err = _error("[linear]\na = 1\nb = -0.5\na0 = 1\nb0 = 0\nx1 = 0\nx2 = 1\n")
    assert err.line == 6 and "x1" in str(err)
    err = _error("[ball]\nw0 = 1, 2\nw = 1\nh0 = 0\nh = 5\nr = 1\n")
    assert err.line is not None


def test_missing_fields():
    err = _error("[linear]\na = 1\n")
    assert "missing" in str(err) and err.line == 1


def test_no_family():
    assert "no family" in str(_error("# empty\n"))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "absent.cfg"))
