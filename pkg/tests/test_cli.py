import csv
import io
import json
import subprocess
import sys

import pytest

from srnt import cli
from srnt.cli import main, parse_value
from srnt.enumeration import COLUMNS, enumerate_for_q, enumerate_up_to_n


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_text_table():
    code, text = run("enumerate", "--max-n", "1000", "--format", "text")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 22
    assert lines[0].split() == ["n", "k", "c", "s", "ℓ", "λ₁", "λ₂", "m₁", "m₂", "K₁", "K₂"]
    assert lines[1].split() == "10 3 1 3 6 1 -2 5 4 4 1".split()


def test_enumerate_csv_round_trip():
    code, text = run("enumerate", "--q", "9", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 11
    assert sorted(int(r["c"]) for r in rows) == [2, 4, 9, 12, 15, 18, 27, 36, 72, 81, 90]
    parsed = [tuple(parse_value(r[c]) for c in COLUMNS) for r in rows]
    assert parsed == [p.as_row() for p in enumerate_for_q(9)]


def test_enumerate_json_round_trip():
    code, text = run("enumerate", "--max-n", "1000", "--format", "json")
    data = json.loads(text)
    assert code == 0 and list(data[0]) == list(COLUMNS)
    assert [tuple(d[c] for c in COLUMNS) for d in data] == [p.as_row() for p in enumerate_up_to_n(1000)]


@pytest.mark.parametrize("argv", [
    ("enumerate", "--q", "0"),
    ("enumerate",),
    ("enumerate", "--q", "3", "--max-n", "100"),
    ("enumerate", "--max-n", "5"),
    ("enumerate", "--q", "x"),
    ("enumerate", "--q", "3", "--format", "xml"),
    ("derive", "--k", "3"),
    ("derive", "--k", "3", "--lambda", "1", "--c", "1"),
    ("derive", "--k", "2", "--c", "1"),
    ("linked-pair", "--q", "0"),
    ("construct", "foo"),
    ("bogus",),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_derive_infeasible():
    code, text = run("derive", "--k", "9", "--c", "4")
    assert code == 1 and "infeasible" in text and "krein-2" in text and "degree-bound" in text


def test_derive_moore_q7():
    code, text = run("derive", "--k", "57", "--c", "1", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["verdict"] == "feasible" and data["params"]["n"] == 3250


def test_derive_petersen_text_and_lambda_form():
    code, text = run("derive", "--k", "3", "--c", "1")
    assert code == 0 and text.splitlines()[-1].split() == "10 3 1 3 6 1 -2 5 4 4 1".split()
    assert run("derive", "--lambda", "1", "--c", "1")[1] == text


def test_derive_csv_shows_fractions():
    code, text = run("derive", "--lambda", "4", "--c", "3", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert code == 1 and row["failures"] == "m1-not-integer" and row["m1"] == "2356/11"


def test_linked_pair_q3():
    code, text = run("linked-pair", "--q", "3", "--format", "csv")
    rows = {r["graph"]: r for r in csv.DictReader(io.StringIO(text))}
    assert code == 0
    assert (rows["X"]["k"], rows["X"]["c"], rows["X"]["n"]) == ("57", "12", "324")
    assert (rows["X'"]["k"], rows["X'"]["c"], rows["X'"]["n"]) == ("45", "9", "266")
    assert "open existence" in run("linked-pair", "--q", "3")[1]


@pytest.mark.parametrize("q,x,xp", [(1, (5, 2), (3, 1)), (2, (22, 6), (16, 4))])
def test_linked_pair_known(q, x, xp):
    data = json.loads(run("linked-pair", "--q", str(q), "--format", "json")[1])
    assert (data["unprimed"]["k"], data["unprimed"]["c"]) == x
    assert (data["primed"]["k"], data["primed"]["c"]) == xp
    assert data["existence"].startswith("known")


def test_construct_and_verify(tmp_path):
    p = tmp_path / "p.json"
    code, text = run("construct", "petersen", "--out", str(p))
    data = json.loads(p.read_text())
    assert code == 0 and text == "" and data["n"] == 10 and len(data["edges"]) == 15
    code, text = run("verify", str(p), "--full")
    assert code == 0 and "X2 diameter: 3" in text and "antipodal 2-fold cover of K3" in text


def test_construct_higman_sims_and_verify(tmp_path):
    p = tmp_path / "hs.json"
    code, text = run("construct", "higman-sims", "--out", str(p), "--canonical-hash")
    assert code == 0 and len(text.strip()) == 64
    assert len(json.loads(p.read_text())["edges"]) == 1100
    code, text = run("verify", str(p), "--full")
    assert code == 0 and "X2 certifies as SRNT (k=16, c=4) at 100 of 100 vertices" in text


def test_canonical_hash_stable():
    a = run("construct", "gewirtz", "--canonical-hash")[1]
    b = run("construct", "gewirtz", "--canonical-hash")[1]
    assert a == b


def test_verify_k33(tmp_path):
    p = tmp_path / "k33.json"
    p.write_text(json.dumps({"n": 6, "edges": [[i, j] for i in range(3) for j in range(3, 6)]}))
    code, text = run("verify", str(p))
    assert code == 1 and "bipartite" in text


def test_verify_malformed(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 3, "edges": [[0, 1], [2, 1]]}')
    assert run("verify", str(p))[0] == 4
    assert "$.edges[1]" in capsys.readouterr().err
    assert run("verify", str(tmp_path / "missing.json"))[0] == 4


def test_construct_io_failure(tmp_path):
    assert run("construct", "petersen", "--out", str(tmp_path / "no" / "such" / "dir.json"))[0] == 4


def test_overflow_exit_code(monkeypatch):
    def boom(q):
        raise OverflowError("too big")
    monkeypatch.setattr(cli, "enumerate_for_q", boom)
    assert run("enumerate", "--q", "3")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "srnt", "derive", "--k", "22", "--c", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1200" in proc.stdout
