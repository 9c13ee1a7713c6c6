import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from nvcat.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def test_validate_ok():
    res = run("validate", CORPUS / "genus2.json")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["ok"] and out["periods_generator"] == 1 and out["lambda"] == 1


def test_validate_bad_triangle(tmp_path):
    doc = {
        "vertices": 3,
        "maximal_simplices": [[0, 1, 2]],
        "xi": [{"edge": [0, 1], "value": 1}, {"edge": [1, 2], "value": 1}],
    }
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    res = run("validate", p)
    assert res.exit_code == 2
    assert json.loads(res.output)["violations"] == [[0, 1, 2]]


def test_validate_missing_file():
    res = run("validate", "nope-does-not-exist.json")
    assert res.exit_code == 2


def test_supp_telescope():
    res = run("supp", CORPUS / "mapping_torus_deg2.json", "--json")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["supp"] == ["1/2", "1"]
    assert out["factors_by_degree"]["0"] == ["t - 1"]
    assert out["factors_by_degree"]["1"] == ["t - 2"]
    assert out["torsion_dim"] == 2


def test_supp_c3():
    out = json.loads(run("supp", CORPUS / "c3.json", "--json").output)
    assert out["supp"] == ["1"]


def test_supp_rejects_exact(tmp_path):
    doc = {
        "vertices": 3,
        "maximal_simplices": [[0, 1], [1, 2], [0, 2]],
        "xi": [{"edge": [0, 1], "value": 1}, {"edge": [1, 2], "value": 1},
               {"edge": [0, 2], "value": 2}],
    }
    p = tmp_path / "exact.json"
    p.write_text(json.dumps(doc))
    res = run("supp", p)
    assert res.exit_code == 2


def test_cover_torus():
    out = json.loads(run("cover", CORPUS / "torus.json", "--json").output)
    by_degree = {d["degree"]: d for d in out["degrees"]}
    assert by_degree[0]["invariant_factors"] == ["t - 1"]
    assert by_degree[1]["invariant_factors"] == ["t - 1"]
    assert all(d["free_rank"] == 0 for d in out["degrees"])


def test_cohom_sampled():
    out = json.loads(run("cohom", CORPUS / "torus.json", "--json").output)
    assert len(out["twists"]) == 5
    for entry in out["twists"]:
        assert entry["dims"] == [0, 0, 0]


def test_cohom_explicit_a():
    out = json.loads(run("cohom", CORPUS / "genus2.json", "--a", "2",
                         "--json").output)
    assert out["twists"] == [{"a": "2", "dims": [0, 2, 0]}]


def test_cohom_prime_field():
    out = json.loads(run("cohom", CORPUS / "torus.json", "--field", "fp:7",
                         "--json").output)
    for entry in out["twists"]:
        assert entry["dims"] == [0, 0, 0]


def test_bound_deterministic_bytes():
    a = run("bound", CORPUS / "genus2.json", "--json", "--seed", "1")
    b = run("bound", CORPUS / "genus2.json", "--json", "--seed", "1")
    assert a.exit_code == 0 and b.exit_code == 0
    assert a.output == b.output


def test_bound_mapping_torus():
    out = json.loads(run("bound", CORPUS / "mapping_torus_deg2.json",
                         "--json").output)
    assert out["best_lower_bound"] == 0


def test_report_replays():
    res = run("report", CORPUS / "genus2.json", "--json")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["replay"]
    assert all(r["ok"] for r in out["replay"])


def test_bad_field_selector():
    res = run("supp", CORPUS / "c3.json", "--field", "r64")
    assert res.exit_code == 2
