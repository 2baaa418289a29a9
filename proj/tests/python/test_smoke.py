import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import blockbetti

SCHEMAS = pathlib.Path(os.environ.get("BLOCKBETTI_SCHEMAS", pathlib.Path(__file__).parents[2] / "docs" / "schema"))
CLI = os.environ.get("BLOCKBETTI_CLI")


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def entry(table, i, j):
    return next((e["beta"] for e in table["entries"] if (e["i"], e["j"]) == (i, j)), 0)


def test_triangle_tables():
    out = blockbetti.betti((3, [(1, 2), (1, 3), (2, 3)]))
    jsonschema.validate(out, schema("table"))
    for side in ("monomial", "binomial"):
        assert entry(out[side], 2, 3) == 2
        assert out[side]["distinguished"]["single"]


def test_double_star():
    t = blockbetti.betti("double-star", side="binomial")["binomial"]
    assert t["reg"] == 3
    assert t["extremal"] == [{"i": 5, "j": 8, "beta": 3}]


def test_classify_and_analyze():
    v = blockbetti.classify("T1")
    jsonschema.validate(v, schema("verdict"))
    assert v["forbidden"]["id"] == "T1"
    assert not v["predicted_single_extremal"]
    a = blockbetti.analyze("bowtie")
    jsonschema.validate(a, schema("analysis"))
    assert (a["f"], a["i"], a["decomposition"]["s"]) == (4, 1, 2)


def test_groebner():
    g = blockbetti.groebner(blockbetti.Graph(3, [(1, 3), (2, 3)]))
    jsonschema.validate(g, schema("groebner"))
    assert sorted(g["initial_ideal"]) == ["x1*x3*y2", "x1*y3", "x2*y3"]
    assert blockbetti.initial_equals_buchberger("T0")


def test_verify_is_deterministic():
    checks = ["theorem-main", "prop-product", "corollary-product"]
    a = blockbetti.verify("exhaustive:n<=5", checks, seed=3)
    b = blockbetti.verify("exhaustive:n<=5", checks, seed=3, threads=3)
    assert a == b and a
    for r in a:
        jsonschema.validate(r, schema("report"))
        assert r["verdict"] == "pass"


def test_errors():
    with pytest.raises(ValueError):
        blockbetti.Graph(2, [(1, 3)])
    with pytest.raises(ValueError):
        blockbetti.Graph.parse("1 x\n")
    with pytest.raises(RuntimeError):
        blockbetti.betti("K7", side="binomial")
    with pytest.raises(ValueError):
        blockbetti.verify("cliques:2..3", ["no-such-check"])


@pytest.mark.skipif(CLI is None, reason="command line tool not built alongside")
@pytest.mark.parametrize("args,name", [
    (["analyze", "--graph", "bowtie"], "analysis"),
    (["analyze", "--graph", "T1", "--per-component"], "analysis"),
    (["classify", "--graph", "paw"], "verdict"),
    (["groebner", "--graph", "T2"], "groebner"),
    (["betti", "--graph", "K1,3", "--side", "both"], "table"),
    (["betti", "--graph", "T0", "--side", "binomial", "--window", "3,6;6,8", "--mode", "initial-support"], "table"),
    (["betti", "--graph", "T1", "--side", "monomial", "--window", "7,10"], "table"),
])
def test_cli_output_validates(args, name):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema(name))


@pytest.mark.skipif(CLI is None, reason="command line tool not built alongside")
def test_cli_report_stream_validates(tmp_path):
    report = tmp_path / "r.jsonl"
    subprocess.run([CLI, "verify", "--corpus", "named:P3,paw,K1,3,double-star,T0", "--checks", "all",
                    "--report", str(report), "--timing"], check=True, capture_output=True, text=True)
    lines = report.read_text().splitlines()
    assert lines
    for line in lines:
        jsonschema.validate(json.loads(line), schema("report"))
