import io
import subprocess
import sys

import pytest

from biquasile import fixtures
from biquasile.cli import main

DATA = fixtures._DATA


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_check_ok():
    code, text = run("check", str(DATA / "algebras" / "X1.bq"))
    assert code == 0 and "order 3" in text


def test_check_exchange_failure(tmp_path, order3):
    from biquasile.algebra import latin_squares
    good = {X.key() for X in order3}
    sq = [tuple(tuple(v + 1 for v in r) for r in t) for t in latin_squares(3)]
    s, d = next((s, d) for s in sq for d in sq if (s, d) not in good)
    p = tmp_path / "bad.bq"
    p.write_text("order 3\n" + "\n".join(" ".join(map(str, a + b)) for a, b in zip(s, d)) + "\n")
    code, text = run("check", str(p))
    assert code == 1 and "fails at" in text


def test_check_malformed(tmp_path):
    p = tmp_path / "m.bq"
    p.write_text("order 2\n1 2 2\n")
    assert run("check", str(p))[0] == 2
    assert run("check", str(tmp_path / "missing.bq"))[0] == 2


def test_color_examples():
    assert run("color", "6_1-01", "--alexander", "7", "2", "3", "4") == (0, "49\n")
    assert run("color", "unknot", "X1") == (0, "9\n")
    assert run("color", "torus_sphere", "alexander:7,2,3,4") == (0, "343\n")
    assert run("color", "hopf", "order2", "--oracle") == (0, "8\n")


def test_color_list():
    code, text = run("color", "unknot", "order2", "--list")
    assert code == 0 and text == "1 1\n1 2\n2 1\n2 2\n"


def test_color_budget(monkeypatch):
    monkeypatch.setenv("BIQUASILE_ORACLE_BUDGET", "100")
    assert run("color", "8_1", "X1", "--oracle")[0] == 3


def test_color_errors():
    assert run("color", "nowhere", "X1")[0] == 2
    assert run("color", "unknot")[0] == 2
    assert run("color", "unknot", "alexander:4,2,1,1")[0] == 1
    assert run("color", "unknot", "alexander:4,x")[0] == 2


def test_invariant():
    w = str(DATA / "weights" / "phi.bw")
    assert run("invariant", "L", "order2_xor", w) == (0, "4u+4\n")
    assert run("invariant", "2_1", "order2_xor", w) == (0, "4\n")


def test_enumerate():
    code, text = run("enumerate", "1")
    assert code == 0 and text.endswith("# total 1\n")
    assert run("enumerate", "2")[1].count("order 2") == 4


def test_resolve_torus():
    code, text = run("resolve", "torus", "+")
    assert code == 0 and text == "regions 2\n"


def test_compare():
    code, text = run("compare", "8_1", "10_1", "--algebras", "X1", "X2")
    assert code == 0 and text.splitlines()[-1] == "distinguished"
    code, text = run("compare", "8_1", "8_1", "--algebras", "X1")
    assert text.splitlines()[-1] == "not distinguished"
    code, text = run("compare", "hopf", "torus", "--weight", "order2_xor", str(DATA / "weights" / "phi.bw"))
    assert "4u+4 vs 4" in text


def test_table_deterministic(tmp_path):
    a = run("table", "--format", "lines")
    b = run("table", "--format", "lines", "--jobs", "2")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[0] == "2_1 X1 9"
    fixtures.write_corpus(tmp_path)
    assert run("table", str(tmp_path), "--format", "lines") == a


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "biquasile.cli", "color", "unknot", "X2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "9\n"


@pytest.mark.parametrize("schema", ["A", "B"])
def test_schema_flag(schema):
    assert run("color", "unknot", "X1", "--schema", schema) == (0, "9\n")
