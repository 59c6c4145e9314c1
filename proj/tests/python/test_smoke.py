import json
import math
import os
import pathlib

import pytest

import etaricci

SPECS = pathlib.Path(os.environ.get("ETARICCI_SPECS_DIR", pathlib.Path(__file__).parents[2] / "specs"))

SOL3 = {"f1": "exp(-x3)", "f2": "exp(x3)"}


def test_expressions():
    assert etaricci.eval_expr("exp(x3) + x1", [1.0, 0.0, 0.5]) == pytest.approx(math.exp(0.5) + 1.0)
    d = etaricci.diff_expr("x1^3", 1)
    assert etaricci.eval_expr(d, [2.0, 0.0, 0.0]) == pytest.approx(12.0)
    with pytest.raises(ValueError):
        etaricci.eval_expr("x1 +", [0.0, 0.0, 0.0])


def test_classify_and_ricci():
    assert etaricci.classify(SOL3) == "BOTH3"
    ric = etaricci.ricci(SOL3, [0.1, 0.2, 0.3])
    assert ric[2][2] == pytest.approx(-2.0)
    assert ric[0][0] == pytest.approx(0.0, abs=1e-12)
    oracle = etaricci.ricci_oracle(SOL3, [0.1, 0.2, 0.3])
    assert oracle[2][2] == pytest.approx(-2.0, abs=1e-4)


def test_flatness():
    v = etaricci.flatness({"f1": "1", "f2": "1/(x3 - 2)", "domain": {"x3": [3, 4]}})
    assert v["criterion_holds"] is True
    assert v["agrees"] is True
    assert etaricci.flatness(SOL3)["criterion_holds"] is False


def test_solve_and_check():
    spec = etaricci.solve(SOL3, "gs", {"c1": "1", "c2": "0.5"})
    report = etaricci.check_soliton(spec)
    assert report["verdict"] is True
    assert report["kind"] == "steady"
    spec["mu"] = "2.1"
    report = etaricci.check_soliton(spec)
    assert report["verdict"] is False
    r33 = [e for e in report["equations"] if e["equation"] == [3, 3]][0]
    assert r33["max_abs"] == pytest.approx(0.1, abs=1e-6)


def test_catalogue():
    examples = etaricci.examples()
    assert "sol3" in examples and "h2xr" in examples
    for name, spec in examples.items():
        assert etaricci.check_soliton(spec)["verdict"], name
    assert "gsm" in etaricci.theorems()


def test_cli():
    code, out, _ = etaricci.run_cli(["--output", "json", "check-soliton", str(SPECS / "sol3_soliton.json")])
    assert code == 0
    assert json.loads(out)["verdict"] is True
    code, _, err = etaricci.run_cli(["curvature", str(SPECS / "missing.json")])
    assert code == 2
    assert "error:" in err
