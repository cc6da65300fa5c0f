import json
from pathlib import Path

import pytest

from cyclecvx.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"
SCHEMA = {"problem", "value", "witness", "algorithm", "elapsed_ms"}


def g(name):
    return str(DATA / name)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_con_p5(capsys):
    assert run(["con", g("p5.graph")]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_pn_c7(capsys):
    assert run(["pn", g("c7.graph")]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_pn_decide_k4_negative(capsys):
    assert run(["pn-decide", g("k4.graph"), "--k", "2"]) == 1
    assert capsys.readouterr().out.strip() == "no hull set with I(S) ≠ V"


def test_pn_decide_bowtie_json(capsys):
    assert run(["pn-decide", g("bowtie.graph"), "--k", "2", "--json"]) == 0
    doc = _json(capsys)
    assert SCHEMA <= doc.keys() and doc["value"] is True
    assert len(doc["layers"]) >= 3


@pytest.mark.parametrize(
    "args, value, algorithm",
    [
        (["con", "c5.graph"], 3, "ext-p4-laden-decomposition"),
        (["con", "co_p5.graph"], 3, "ext-p4-laden-decomposition"),
        (["con", "petersen.graph"], None, "oracle"),
        (["con", "p5.graph", "--oracle"], 4, "oracle"),
        (["pn", "bowtie.graph"], 2, "cactus"),
        (["pn", "k4.graph"], 1, "oracle"),
    ],
)
def test_json_schema(capsys, args, value, algorithm):
    args = [args[0], g(args[1]), *args[2:], "--json"]
    assert run(args) == 0
    doc = _json(capsys)
    assert SCHEMA <= doc.keys()
    assert doc["algorithm"] == algorithm
    if value is not None:
        assert doc["value"] == value


def test_hull_layers(capsys):
    assert run(["hull", g("c5.graph"), "--set", "0,1,2,3", "--json"]) == 0
    doc = _json(capsys)
    assert doc["is_hull_set"] and doc["value"] == 1
    assert doc["layers"] == [[0, 1, 2, 3], [0, 1, 2, 3, 4]]


@pytest.mark.parametrize("name", ["c5.graph", "bowtie.graph", "p5.graph", "co_p5.graph", "k4.graph"])
def test_witness_round_trip(capsys, name):
    for problem, claim in (("con", "convex"), ("pn", "time={value}")):
        assert run([problem, g(name), "--json"]) == 0
        doc = _json(capsys)
        ids = ",".join(map(str, doc["witness"]))
        assert run(["verify-witness", g(name), "--set", ids, "--claim", claim.format(**doc)]) == 0
        assert capsys.readouterr().out.strip() == "ok"


def test_verify_witness_negative(capsys):
    assert run(["verify-witness", g("c5.graph"), "--set", "0,1", "--claim", "hull"]) == 1
    assert run(["verify-witness", g("c5.graph"), "--set", "0,2", "--claim", "independent"]) == 0
    assert run(["verify-witness", g("c5.graph"), "--set", "0,1,2,3", "--claim", "time>=2"]) == 1


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("3\n0 0\n")
    assert run(["con", str(bad)]) == 2
    assert "error" in capsys.readouterr().err
    assert run(["con", str(tmp_path / "missing.graph")]) == 2
    assert run(["hull", g("c5.graph"), "--set", "0,9"]) == 2
    assert run(["verify-witness", g("c5.graph"), "--set", "0", "--claim", "pretty"]) == 2
    assert run(["con", g("c5.graph"), "--bogus"]) == 2


def test_cap_exceeded_message(capsys):
    assert run(["con", g("petersen.graph"), "--cap", "6"]) == 2
    assert "no polynomial algorithm" in capsys.readouterr().err


def test_reduce_is(capsys, tmp_path):
    out, labels = tmp_path / "g.txt", tmp_path / "l.json"
    assert run(["reduce-is", g("c5.graph"), "--out", str(out), "--labels", str(labels)]) == 0
    assert json.loads(labels.read_text())["0"] == "s0"
    assert run(["con", str(out), "--json"]) == 0
    assert _json(capsys)["value"] == 5


def test_reduce_sat(capsys, tmp_path):
    out = tmp_path / "sat.graph"
    args = ["reduce-sat", g("example.cnf"), "--k", "10", "--assignment", "1,2,-3", "--out", str(out), "--json"]
    assert run(args) == 0
    doc = _json(capsys)
    assert doc["n"] == 133 and len(doc["layers"]) == 11
    ids = ",".join(map(str, doc["witness"]))
    assert run(["verify-witness", str(out), "--set", ids, "--claim", "time=10"]) == 0


def test_reduce_sat_rejects_bad_assignment(capsys):
    assert run(["reduce-sat", g("example.cnf"), "--assignment", "-1,-2,-3", "--json"]) == 2
    assert run(["reduce-sat", g("example.cnf"), "--k", "5"]) == 2


@pytest.mark.parametrize("family", ["cactus", "extp4laden"])
def test_gen_then_solve(capsys, tmp_path, family):
    assert run(["gen", "--family", family, "--seed", "3", "--size", "9"]) == 0
    path = tmp_path / "gen.graph"
    path.write_text(capsys.readouterr().out)
    problem = "pn" if family == "cactus" else "con"
    assert run([problem, str(path), "--json"]) == 0
    assert _json(capsys)["algorithm"] in ("cactus", "ext-p4-laden-decomposition")
