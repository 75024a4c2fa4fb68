import csv
import io
import json

import pytest

from brieskorn.cli import main, parse_range
from brieskorn.plumbing import PlumbingGraph, build_asl_graph
from brieskorn.triplet import Triplet


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_d_both(capsys):
    code, out, _ = run(capsys, "d", 3, 5, 7, "--method", "both")
    doc = json.loads(out)
    assert code == 0 and doc["d"] == 2 and doc["match"] is True and doc["d_oracle"] == 2
    assert set(doc) >= {"p", "q", "r", "d", "method", "argmax", "max_f", "qhb_obstructed", "pretzel"}
    assert doc["argmax"] == {"a": 1, "m": 1}


def test_d_even(capsys):
    code, out, _ = run(capsys, "d", 4, 5, 19)
    doc = json.loads(out)
    assert code == 0 and doc["d"] == 6 and doc["method"] == "EvenP"
    assert doc["argmax"] is None and doc["max_f"] is None


def test_d_oracle_budget(capsys):
    code, _, err = run(capsys, "d", 5, 6, 29, "--method", "oracle")
    assert code == 3 and "budget" in err


def test_d_invalid(capsys):
    assert run(capsys, "d", 3, 5, 8)[0] == 2


def test_triplets(capsys):
    code, out, _ = run(capsys, "triplets", 11)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8
    assert rows[0] == {"p": "11", "q": "12", "r": "131", "s": "1", "d": "30"}
    _, out, _ = run(capsys, "triplets", 2)
    assert list(csv.DictReader(io.StringIO(out))) == [{"p": "2", "q": "3", "r": "5", "s": "1", "d": "2"}]
    _, out, _ = run(capsys, "triplets", 3, "--format", "json")
    assert [r["d"] for r in json.loads(out)] == [2, 2]


def test_family(capsys):
    code, out, _ = run(capsys, "family", "1", "--n", "1..50")
    lines = out.splitlines()
    rows = list(csv.DictReader(io.StringIO("\n".join(l for l in lines if not l.startswith("#")))))
    assert code == 0 and len(rows) == 50
    assert all(r["match"] == "true" and int(r["d_computed"]) == 2 * int(r["n"]) for r in rows)
    assert lines[-1].startswith("# family 1: 50 rows, 0 mismatches")
    code, out, _ = run(capsys, "family", "4", "--n", "1..50")
    rows = list(csv.DictReader(io.StringIO(out), restkey="extra"))
    assert code == 0 and all(int(r["d_computed"]) == 6 * int(r["n"]) + 2 for r in rows[:-1])
    code, out, _ = run(capsys, "family", "fibonacci", "--n", "1..10")
    header = out.splitlines()[0].split(",")
    assert code == 0 and "d_expected" not in header


def test_family_config_and_mismatch(capsys, tmp_path):
    wrong = {"name": "wrong", "p": [1, 2], "q": [1, 4], "r": [3, 4], "expected_d": [0, 3], "n_min": 1}
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps(wrong))
    code, out, _ = run(capsys, "family", "--config", path, "--n", "1..3")
    assert code == 4 and "3 mismatches" in out
    assert run(capsys, "family")[0] == 2
    assert run(capsys, "family", "nope")[0] == 2


def test_region(capsys):
    code, out, _ = run(capsys, "region", 11, 12, 131)
    body = [l for l in out.splitlines() if not l.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    assert code == 0 and len(rows) == 6
    best = max(rows, key=lambda r: int(r["f_at_best"]))
    assert best["m"] == "5"
    assert out.splitlines()[-1] == "# argmax a=1 m=5 max_f=-23 d=30"
    _, out, _ = run(capsys, "region", 3, 5, 7)
    rows = list(csv.DictReader(io.StringIO(out.split("#")[0])))
    assert [r["in_region"] for r in rows] == ["false", "true"]
    assert run(capsys, "region", 4, 5, 19)[0] == 2


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", 2, 3, 5, "--format", "dot")
    assert code == 0 and out.count("label=") == 8 and out.startswith("//")
    code, out, _ = run(capsys, "graph", 3, 5, 7, "--format", "json")
    g = PlumbingGraph.from_json(json.loads(out))
    assert code == 0 and g == build_asl_graph(Triplet(3, 5, 7))
    assert run(capsys, "graph", 3, 5, 8)[0] == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "r.csv"
    assert run(capsys, "region", 3, 5, 7, "-o", path)[0] == 0
    assert path.read_text().startswith("m,delta")


def test_deterministic(capsys):
    outs = {run(capsys, "region", 11, 12, 131)[1] for _ in range(2)}
    assert len(outs) == 1


def test_oracle_check_small(capsys):
    code, out, _ = run(capsys, "oracle-check", "--max-p", 3, "--max-t", 6)
    doc = json.loads(out)
    assert code == 0 and doc["all_match"]
    assert [r["triplet"] for r in doc["triplets"]] == [[2, 3, 5], [3, 4, 11], [3, 5, 7]]
    for rec in doc["triplets"]:
        assert set(rec) == {"triplet", "d_oracle", "d_fast", "match", "enumerated", "seconds"}


def test_oracle_check_budget_skips(capsys):
    _, out, _ = run(capsys, "oracle-check", "--max-p", 3, "--max-t", 2, "--max-budget", 10000)
    doc = json.loads(out)
    assert doc["skipped"] == [[3, 4, 11]]


def test_oracle_check_fault(capsys):
    code, out, _ = run(capsys, "oracle-check", "--max-p", 3, "--max-t", 2, "--inject-fault")
    doc = json.loads(out)
    assert code == 4 and not doc["all_match"]
    assert all(r["match"] is False for r in doc["triplets"])


def test_parse_range():
    assert parse_range("1..50") == range(1, 51)
    assert parse_range("7") == range(7, 8)
    with pytest.raises(Exception):
        parse_range("5..1")
