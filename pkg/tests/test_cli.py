import io
import json

import jsonschema
import pytest

from tbetti.cli import main
from tbetti.schemas import BETTI, CERTIFICATE, SCAN, VERIFY


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_gens_transversal():
    code, out, _ = run("gens", "transversal", "--blocks", "2,2", "--t", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "vars: y1_1 y1_2 y2_1 y2_2" and len(lines) == 5


def test_gens_jt():
    code, out, _ = run("gens", "jt", "--n", "2", "--t", "2", "--b", "2")
    assert code == 0
    assert out.splitlines()[1:] == ["z1^2", "z1 z2", "z2^2", "z2 z3"]
    code, out2, _ = run("gens", "jt", "--n", "2", "--t", "2", "--method", "representation")
    assert out2 == out
    code, js, _ = run("gens", "jt", "--n", "2", "--t", "2", "--format", "json")
    assert json.loads(js)["count"] == 4


def test_gens_bad_shape():
    code, _, err = run("gens", "transversal", "--blocks", "2", "--t", "2")
    assert code == 2 and "t" in err


def test_usage_errors():
    assert run("frobnicate")[0] == 2
    assert run("betti", "--t", "2")[0] == 2
    assert run("betti", "--blocks", "2,2", "--t", "2", "--field", "9")[0] == 2
    assert run("betti", "--n", "2", "--t", "2", "--method", "resolution")[0] == 2


def test_betti_formula_table():
    code, out, _ = run("betti", "--blocks", "2,2", "--t", "2", "--method", "formula")
    assert code == 0
    js = json.loads(out)
    jsonschema.validate(js, BETTI)
    assert js["total"] == [4, 4, 1]
    code, out, _ = run("betti", "--blocks", "2,2", "--t", "2", "--format", "csv")
    assert out.splitlines() == ["q,j,beta", "0,2,4", "1,3,4", "2,4,1"]
    code, out, _ = run("betti", "--blocks", "2,2", "--t", "2", "--format", "table")
    assert out.splitlines()[0].split() == ["q", "j", "beta"]


@pytest.mark.parametrize("method", ["formula", "ek", "oracle"])
def test_betti_jt_methods(method):
    code, out, _ = run("betti", "--n", "3", "--t", "3", "--b", "2", "--method", method)
    assert code == 0 and json.loads(out)["total"] == [8, 12, 6, 1]


@pytest.mark.parametrize("method", ["formula", "oracle", "resolution"])
def test_betti_transversal_methods(method):
    code, out, _ = run("betti", "--blocks", "2,1,2", "--t", "2", "--method", method)
    assert code == 0 and json.loads(out)["total"] == [8, 14, 9, 2]


def test_betti_family_override():
    code, out, _ = run("betti", "--n", "3", "--b", "2", "--t", "2", "--family", "transversal")
    assert json.loads(out)["total"] == [12, 28, 27, 12, 2]


def test_betti_file_oracle(tmp_path):
    f = tmp_path / "ideal.txt"
    f.write_text("vars: a b\na\nb\n")
    code, out, _ = run("betti", "--file", str(f), "--method", "oracle", "--multigraded")
    js = json.loads(out)
    jsonschema.validate(js, BETTI)
    assert code == 0 and js["total"] == [2, 1]
    assert {"q": 1, "alpha": [1, 1], "dim": 1} in js["multigraded"]
    assert run("betti", "--file", str(f), "--method", "formula")[0] == 2
    assert run("betti", "--file", str(tmp_path / "missing.txt"), "--method", "oracle")[0] == 2


def test_betti_ek_not_stable():
    code, out, err = run("betti", "--blocks", "2,2", "--t", "2", "--method", "ek")
    assert code == 1 and "not stable" in err
    assert json.loads(out)["witness"]["shifted"] == "y1_1^2"


def test_betti_budget():
    code, _, err = run("betti", "--blocks", "2,2,2", "--t", "2", "--method", "oracle",
                       "--budget", "10")
    assert code == 3 and "64" in err


def test_betti_prime_field():
    code, out, _ = run("betti", "--blocks", "2,2", "--t", "2", "--method", "oracle",
                       "--field", "GF(32003)")
    assert json.loads(out)["field"] == "GF(32003)"


def test_verify_comparison_suite():
    code, out, _ = run("verify", "thm36", "--n-max", "8")
    js = json.loads(out)
    jsonschema.validate(js, VERIFY)
    assert code == 0 and js["passed"] and len(js["suites"][0]["rows"]) == 21


def test_verify_identities():
    code, out, _ = run("verify", "identities", "--range", "12")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_resolution():
    code, out, _ = run("verify", "resolution", "--blocks", "2,2,2", "--t", "2")
    js = json.loads(out)
    assert code == 0
    for row in js["suites"][0]["rows"]:
        jsonschema.validate(row, CERTIFICATE)
    code, out, err = run("verify", "resolution", "--blocks", "2,2,2", "--t", "2",
                         "--signs", "literal")
    assert code == 1 and "d_squared" in err


@pytest.mark.parametrize("suite", ["stability", "radical", "generators"])
def test_verify_other_suites(suite):
    code, out, _ = run("verify", suite, "--n-max", "5")
    assert code == 0 and json.loads(out)["passed"]


def test_nu():
    code, out, _ = run("nu", "--n", "2", "--t", "2")
    js = json.loads(out)
    assert code == 0 and js["nu"] == [1, 2, 1] and js["match"]
    assert run("nu", "--n", "3", "--t", "2", "--b", "3")[0] == 2


def test_compare():
    code, out, _ = run("compare", "--n", "5", "--t", "4")
    rows = json.loads(out)["rows"]
    assert code == 0 and rows[0]["status"] == "proved-equal"
    code, out, _ = run("compare", "--n-max", "4", "--format", "csv")
    assert out.splitlines()[0].startswith("n,t,")
    assert run("compare", "--n", "3", "--t", "4")[0] == 2


def test_scan_schema_and_determinism(tmp_path):
    code, out, _ = run("scan", "--n-max", "6", "--seed", "3")
    assert code == 0
    js = json.loads(out)
    jsonschema.validate(js, SCAN)
    assert len(js["rows"]) == 21
    assert {r["status"] for r in js["rows"] if r["t"] >= r["n"] - 2} == {"proved-equal"}
    assert run("scan", "--n-max", "6", "--seed", "3")[1] == out


def test_plots(tmp_path):
    for argv, name in [(["scan", "--n-max", "4"], "scan.png"),
                       (["compare", "--n-max", "3"], "compare.svg"),
                       (["betti", "--blocks", "2,2", "--t", "2"], "betti.pdf")]:
        path = tmp_path / name
        code, out, _ = run(*argv, "--plot", str(path))
        assert code == 0 and path.stat().st_size > 0
        assert json.loads(out)["figure"] == str(path)
    first = (tmp_path / "scan.png").read_bytes()
    run("scan", "--n-max", "4", "--plot", str(tmp_path / "scan.png"))
    assert (tmp_path / "scan.png").read_bytes() == first
