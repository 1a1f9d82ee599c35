import csv
import os

import pytest

from endlam.cli import run


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _rows(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_build_and_verify(workdir):
    assert run(["build", "--p", "5", "--e0", "16", "--ratio", "2",
                "--depth", "6", "--out", "seq.json"]) == 0
    assert os.path.exists("seq.json")
    assert os.path.exists("seq.json.manifest.json")
    assert run(["verify-p", "--seq", "seq.json", "--out", "rep.csv"]) == 0
    rows = _rows("rep.csv")
    assert rows[0] == ["clause", "k", "detail", "ok"]
    assert all(r[-1] == "pass" for r in rows[1:])


def test_even_p_is_usage_error(workdir):
    assert run(["build", "--p", "6", "--e0", "16", "--ratio", "2",
                "--depth", "4", "--out", "x.json"]) == 2


def test_unknown_flag_is_usage_error(workdir):
    assert run(["build", "--p", "5", "--bogus", "1", "--out", "x.json"]) == 2
    assert run(["no-such-command"]) == 2


def test_intersections_and_skip_rows(workdir):
    run(["build", "--p", "5", "--e0", "16", "--ratio", "2",
         "--depth", "6", "--out", "seq.json"])
    assert run(["intersections", "--seq", "seq.json", "--pairs", "0,4,0,2",
                "--out", "t.csv"]) == 0
    rows = _rows("t.csv")
    assert rows[1] == ["0", "4", "256", "transport"]
    assert rows[2] == ["0", "2", "2", "transport"]


def test_annular_modes(workdir):
    run(["build", "--p", "5", "--e0", "16", "--ratio", "2",
         "--depth", "6", "--out", "seq.json"])
    with open("triples.csv", "w") as fh:
        fh.write("i,k,j\n0,2,4\n1,3,5\n")
    assert run(["annular", "--seq", "seq.json", "--triples", "triples.csv",
                "--mode", "estimate", "--out", "ann.csv"]) == 0
    rows = _rows("ann.csv")
    assert rows[1][:3] == ["0", "2", "4"]
    assert rows[1][5] == "estimated"
    assert run(["annular", "--seq", "seq.json", "--triples", "triples.csv",
                "--mode", "exact", "--window-cap", "2",
                "--out", "ann2.csv"]) == 0
    rows = _rows("ann2.csv")
    assert any(r[5] == "skipped" for r in rows[1:])


def test_distance(workdir):
    run(["build", "--p", "5", "--e0", "16", "--ratio", "2",
         "--depth", "6", "--out", "seq.json"])
    assert run(["distance", "--seq", "seq.json", "--i", "0", "--j", "5",
                "--out", "d.csv"]) == 0
    rows = _rows("d.csv")
    assert rows[1][3] == "5"
    assert int(rows[1][2]) <= 5


def test_constants_file(workdir):
    run(["build", "--p", "5", "--e0", "16", "--ratio", "2",
         "--depth", "6", "--out", "seq.json"])
    with open("consts.txt", "w") as fh:
        fh.write("# verifier constants\nB0=5\nG0=50\n")
    assert run(["distance", "--seq", "seq.json", "--i", "0", "--j", "5",
                "--constants", "consts.txt", "--out", "d.csv"]) == 0
    import json
    with open("d.csv.manifest.json") as fh:
        manifest = json.load(fh)
    assert manifest["constants_resolved"] == {"B0": "5", "G0": "50"}


def test_missing_seq_file(workdir):
    assert run(["verify-p", "--seq", "nope.json", "--out", "r.csv"]) == 2
