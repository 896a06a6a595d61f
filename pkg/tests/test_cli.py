from __future__ import annotations

import json

import pytest

from monopart.cli import main
from monopart.generators import g6, remark2
from monopart.graph import format_graph, parse_graph


@pytest.fixture(autouse=True)
def _restore_cap(monkeypatch):
    monkeypatch.delenv("MONO_ORACLE_CAP", raising=False)


def _write(tmp_path, g, name="g.graph"):
    path = tmp_path / name
    path.write_text(format_graph(g))
    return str(path)


def test_generate_is_deterministic(tmp_path, capsys):
    out = tmp_path / "x.graph"
    assert main(["generate", "colored", "n=9", "p_edge=0.5", "p_red=0.5", "--seed", "4", "-o", str(out)]) == 0
    first = out.read_text()
    assert main(["generate", "colored", "n=9", "p_edge=0.5", "p_red=0.5", "--seed", "4", "-o", str(out)]) == 0
    assert out.read_text() == first
    assert parse_graph(first)[0].n == 9


def test_cover_json(tmp_path, capsys):
    assert main(["cover", "-i", _write(tmp_path, g6()), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["size"] == len(data["components"])


def test_twopaths_modes(tmp_path, capsys):
    path = _write(tmp_path, remark2(8))
    for mode in ("c4", "kpp", "single"):
        assert main(["twopaths", "-i", path, "--mode", mode, "--json"]) == 0
        capsys.readouterr()


def test_verify_ok(tmp_path, capsys):
    assert main(["verify", "-i", _write(tmp_path, remark2(7))]) == 0
    assert "MISMATCH" not in capsys.readouterr().out


def test_partition_with_marks(tmp_path, capsys):
    text = format_graph(remark2(7), perturbed=[(2, 3)])
    path = tmp_path / "m.graph"
    path.write_text(text)
    assert main(["partition", "-i", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    used = {tuple(e) for piece in data["pieces"] for e in piece["edges"]}
    assert (2, 3) not in used


def test_cycle_commands(tmp_path, capsys):
    path = _write(tmp_path, remark2(8))
    assert main(["cycle", "-i", path, "--ell", "3", "--json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["cycle"]) >= 4
    assert main(["cycle", "-i", path, "--quarter", "--p", "2"]) == 0


def test_exit_codes(tmp_path, capsys):
    assert main(["degmatch", "-i", _write(tmp_path, remark2(7))]) == 2
    assert main(["cover", "-i", str(tmp_path / "missing.graph")]) == 4
    bad = tmp_path / "bad.graph"
    bad.write_text("n 2\n0 5 r\n")
    assert main(["cover", "-i", str(bad)]) == 4
    assert main(["generate", "remark2", "n=2"]) == 2
    assert main(["experiment", "--module", "cover"]) == 2


def test_experiment_and_falsify(tmp_path, capsys):
    out = tmp_path / "exp"
    assert main(["experiment", "--module", "cover", "--family", "colored", "--param", "n=7",
                 "--param", "p_edge=0.5", "--param", "p_red=0.5", "--trials", "3", "-o", str(out)]) == 0
    assert (out / "report.json").exists() and (out / "trials.csv").exists()
    assert main(["falsify", "schconj", "--budget", "5", "--json"]) == 0
    capsys.readouterr()
    assert main(["falsify", "schconj", "--budget", "3"]) == 0
    assert "no counterexample" in capsys.readouterr().out
