import json
from pathlib import Path

import pytest

from pamona.cli import main
from pamona.formats import parse_semigroup


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, spec in [("c2", "cyclic 2"), ("n2", "null 2"), ("c4", "cyclic 4"), ("b5", "brandt5"),
                       ("q2", "inflate cyclic 2"), ("e3", "chain 3"), ("lz", "leftzero 2"),
                       ("rz", "rightzero 2"), ("ac", "antichain 2")]:
        p = tmp_path / f"{name}.sg"
        assert main(["gen", *spec.split(), "-o", str(p)]) == 0
        out[name] = str(p)
    return out


def test_gen_outputs(files, capsys):
    assert parse_semigroup(files["q2"]).order == 3
    assert main(["gen", "mn", "3", "6"]) == 0
    assert capsys.readouterr().out.startswith("semigroup v1 8")
    assert main(["gen", "munn", files["ac"]]) == 0
    assert capsys.readouterr().out.startswith("semigroup v1 5")
    assert main(["gen", "product", files["c2"], files["c2"]]) == 0


def test_gen_usage_errors(capsys):
    assert main(["gen", "nosuch", "3"]) == 2
    assert main(["gen", "cyclic"]) == 2
    assert main(["gen", "cyclic", "3", "extra"]) == 2
    assert main(["bogus"]) == 2


def test_analyze(files, capsys):
    assert main(["analyze", files["b5"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("order 5")
    assert main(["analyze", files["b5"], "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["inverse"] is True and info["fundamental"] is True


def test_lattice(files, capsys):
    assert main(["lattice", files["c2"]]) == 0
    assert capsys.readouterr().out.startswith("3 members")
    assert main(["lattice", files["b5"], "--inverse", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")
    assert main(["lattice", files["n2"], "--inverse"]) == 2


def test_pa(files, capsys, tmp_path):
    out = tmp_path / "pa.sg"
    assert main(["pa", files["c2"], "--table", str(out)]) == 0
    assert "|PA(S)| = 3" in capsys.readouterr().out
    assert parse_semigroup(str(out)).order == 3
    assert main(["pa", files["b5"], "--inverse-only"]) == 0
    assert main(["pa", files["b5"], "--cap", "5"]) == 3


def test_iso(files, capsys):
    assert main(["iso", files["c2"], files["c2"]]) == 0
    assert main(["iso", files["c2"], files["n2"]]) == 1
    assert main(["iso", files["lz"], files["rz"]]) == 1
    assert main(["iso", files["lz"], files["rz"], "--anti"]) == 0
    assert main(["iso", files["c2"], "/nonexistent.sg"]) == 2


def test_paiso(files, capsys, tmp_path):
    w = tmp_path / "w.txt"
    assert main(["paiso", files["c2"], files["n2"], "--witness", str(w)]) == 0
    assert len(w.read_text().split()) == 3
    assert main(["paiso", files["c4"], files["q2"]]) == 1
    assert "not PA-isomorphic" in capsys.readouterr().out


def test_bad_file_is_usage_error(tmp_path):
    p = tmp_path / "bad.sg"
    p.write_text("semigroup v1 2\n0 1\n")
    assert main(["analyze", str(p)]) == 2


def test_census(tmp_path, capsys):
    d = tmp_path / "c3"
    assert main(["census", "-n", "3", "--out", str(d)]) == 0
    assert capsys.readouterr().out.startswith("24 semigroups")
    assert len((d / "index.txt").read_text().splitlines()) == 24
    assert main(["census", "-n", "2", "--pa-classes"]) == 0
    assert main(["census", "-n", "2", "--anti"]) == 0
    assert main(["census", "-n", "5"]) == 3


def test_census_deterministic(capsys):
    main(["census", "-n", "3", "--pa-classes"])
    a = capsys.readouterr().out
    main(["--jobs", "2", "census", "-n", "3", "--pa-classes"])
    assert capsys.readouterr().out == a


def test_verify_quick_matches_golden(capsys):
    assert main(["verify", "--machine"]) == 0
    golden = (Path(__file__).parent / "golden" / "verify_quick.txt").read_text()
    assert capsys.readouterr().out == golden


def test_verify_timings(capsys):
    assert main(["verify", "--machine", "--timings"]) == 0
    line = capsys.readouterr().out.splitlines()[1]
    assert line.split("\t")[2].endswith("s")
