import os
from fractions import Fraction
from pathlib import Path

import pytest

import contactlie as cl

GOLDEN = Path(os.environ.get("CONTACTLIE_GOLDEN_DIR", Path(__file__).parent.parent / "golden"))

BLOCK1 = "ell: 1 0 0 0 0 0\nj0: zero\ngamma: 1 0 0\ngamma: 0 1 0\ngamma: 0 0 1\n"
BLOCK2N = "ell: 0 1 0 0 0 0\nj0: naturals\ngamma: 1 0 0\ngamma: 0 1 0\ngamma: 0 0 1\n"


@pytest.fixture
def block1():
    return cl.Config.from_text(BLOCK1)


@pytest.fixture
def block2n():
    return cl.Config.from_text(BLOCK2N)


def test_config_properties(block1):
    assert block1.ell == [1, 0, 0, 0, 0, 0]
    assert block1.j0 == "zero"
    assert block1.rank == 1
    assert block1.gamma_rank == 3


def test_config_error_names_constraint():
    with pytest.raises(cl.ConfigError) as info:
        cl.Config.from_text("ell: 1 0 0 0 0 0\nj0: zero\ngamma: 1 0 0\ngamma: 0 0 1\n")
    assert info.value.constraint == "gamma-units"
    assert isinstance(info.value, ValueError)


def test_parse_error_line():
    with pytest.raises(cl.ParseError) as info:
        cl.Config.from_text("ell: 1 0 0 0 0 0\nj0: maybe\n")
    assert info.value.line == 2


def test_bracket_value(block1):
    u = cl.Element(block1, "x[0,2,0]")
    v = cl.Element(block1, "x[0,0,2]")
    w = cl.bracket(u, v)
    assert w.terms() == {"x[0,1,1]": Fraction(4)}
    assert cl.bracket(v, u) == -w
    assert cl.bracket_operator(u, v) == w


def test_unit_action_is_twice_zero_derivative(block2n):
    # [1, x^{a,i}] = 2 a_0 x^{a,i} + 2 i_0 x^{a,i-1_0}
    one = cl.Element(block2n, "x[0,0,0]")
    v = cl.Element(block2n, "x[3,1,-2]t[2,0,1]")
    assert cl.bracket(one, v).terms() == {
        "x[3,1,-2]t[1,0,1]": Fraction(4),
        "x[3,1,-2]t[2,0,1]": Fraction(6),
    }


def test_element_arithmetic(block1):
    u = cl.Element(block1, "x[0,1,0] - 1/2*x[1,0,0]")
    assert (u - u).is_zero()
    assert Fraction(2, 3) * u == cl.Element(block1, "2/3*x[0,1,0] - 1/3*x[1,0,0]")
    assert (u * u).terms() == {"x[0,2,0]": 1, "x[1,1,0]": -1, "x[2,0,0]": Fraction(1, 4)}


def test_golden_tables_match():
    dirs = sorted(d for d in GOLDEN.iterdir() if d.is_dir())
    assert len(dirs) >= 8
    for d in dirs:
        cfg = cl.Config.from_file(str(d / "config.txt"))
        window = [ln.strip() for ln in (d / "window.txt").read_text().splitlines() if ln.strip()]
        assert cl.table_csv(cfg, window) == (d / "table.csv").read_text(), d.name


def test_structure_table_rows(block1):
    rows = cl.structure_table(block1, ["x[0,1,1]"])
    assert rows == [("x[0,1,1]", "x[0,1,1]", "0", "0")]


def test_suite_deterministic(block2n):
    ok, a = cl.run_suite(block2n, seed=4, pairs=50, triples=20, functionals=2)
    _, b = cl.run_suite(block2n, seed=4, pairs=50, triples=20, functionals=2)
    assert ok and a == b
    assert "result: PASS" in a


def test_suite_detects_corrupted_bracket(block2n):
    ok, report = cl.run_suite(block2n, seed=1, pairs=50, triples=30, functionals=1, corrupt=True)
    assert not ok
    assert "jacobi: FAIL" in report


def test_derivations(block1, block2n):
    checked, failed = cl.check_derivation(block2n, "ad(x[0,1,0]) + dt(1b) + dmu(1,0,0)", samples=50)
    assert (checked, failed) == (50, 0)
    _, failed = cl.check_derivation(block1, "dstar(1)", samples=100)
    assert failed > 0
    d = cl.decompose(block2n, "3*ad(x[0,1,0]) - dt(1b) + 1/2*dmu(1,0,0)")
    assert d["outer"] == {"1b": Fraction(-1)}
    assert d["mu"] == [Fraction(1, 2), 0, 0]
    assert d["inner"] == "3*x[0,1,0]"
    with pytest.raises(cl.ResidualError) as info:
        cl.decompose(block1, "dstar(1)")
    assert info.value.witness
    with pytest.raises(cl.AmbiguousError):
        cl.decompose(block1, "ad(x[0,1,0])", support_radius=1, window_radius=0)


def test_trivialize_round_trip(block1, block2n):
    g = {"x[0,1,1]": 1, "x[1,2,0]": Fraction(-3, 2), "2*x[-1,0,1]": "5/2"}
    kind, f = cl.trivialize_coboundary(block1, g, radius=2)
    assert kind == "B"
    assert f == {"x[0,1,1]": 1, "x[1,2,0]": Fraction(-3, 2), "x[-1,0,1]": 5}
    assert cl.verify_coboundary(block1, g, f, radius=1)[1] == 0
    assert cl.verify_coboundary(block1, g, {}, radius=1)[1] > 0

    kind, f = cl.trivialize_coboundary(block2n, {"x[1,0,0]t[1,0,0]": 2}, radius=1)
    assert kind == "A"
    assert f == {"x[1,0,0]t[1,0,0]": 2}


def test_unsupported_regime():
    block4 = cl.Config.from_text("ell: 0 0 0 1 0 0\nj0: zero\ngamma: 1 0 0\ngamma: 0 1 0\n")
    with pytest.raises(cl.TrivializationError):
        cl.trivialize_coboundary(block4, {"x[0,1,0]": 1})
