from __future__ import annotations

import io
import json

import pytest

from k24minor.catalog import FamilySpec, build_family
from k24minor.cli import main
from k24minor.core_graph import complete_bipartite, emit_graph6, parse_graph6
from k24minor.recognizer import certificate_from_json, verify_certificate


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_free_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["check", "-"], "D?{\n")
    d = json.loads(out)
    assert code == 0 and d["schema"] == "k24cert/1" and d["verdict"] == "free"


def test_check_minor_exit_code(capsys, monkeypatch):
    g6 = emit_graph6(complete_bipartite(2, 4))
    code, out, _ = run(capsys, monkeypatch, ["check", "-"], g6 + "\n")
    assert code == 1 and json.loads(out)["verdict"] == "minor"


def test_check_writes_certificate(tmp_path, capsys, monkeypatch):
    g = build_family(FamilySpec(7, 2, 3))
    src = tmp_path / "g.g6"
    src.write_text(emit_graph6(g) + "\n")
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, monkeypatch, ["check", str(src), "--cert", str(cert)])
    assert code == 0 and out.strip() == "free"
    assert verify_certificate(g, certificate_from_json(json.loads(cert.read_text())))


def test_check_edge_list(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["check", "--format", "edges", "-"], "0 1\n1 2\n2 0\n")
    assert code == 0 and json.loads(out)["verdict"] == "free"


def test_parse_error_is_2(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["check", "--format", "g6", "-"], "~~~bad\n")
    assert code == 2 and err


def test_missing_file_is_2(capsys, monkeypatch, tmp_path):
    code, _, _ = run(capsys, monkeypatch, ["check", str(tmp_path / "none.g6")])
    assert code == 2


def test_usage_error_is_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_oracle(capsys, monkeypatch):
    g6 = emit_graph6(complete_bipartite(2, 4))
    code, out, _ = run(capsys, monkeypatch, ["oracle", "--t", "4", "-"], g6)
    assert code == 1 and json.loads(out)["minor"]["t"] == 4
    code, out, err = run(capsys, monkeypatch, ["oracle", "--t", "5", "-"], g6)
    assert code == 0 and json.loads(out)["minor"] is None and "no minor" in err


def test_oracle_rooted(capsys, monkeypatch):
    g6 = emit_graph6(complete_bipartite(2, 3))
    code, _, _ = run(capsys, monkeypatch, ["oracle", "--t", "3", "--rooted", "0,1", "-"], g6)
    assert code == 1
    code, _, _ = run(capsys, monkeypatch, ["oracle", "--t", "3", "--rooted", "0", "-"], g6)
    assert code == 2


def test_budget_exit_code(capsys, monkeypatch):
    g6 = emit_graph6(build_family(FamilySpec(11, 3, 6)))
    code, _, err = run(capsys, monkeypatch, ["--budget", "1", "oracle", "--t", "4", "-"], g6)
    assert code == 3 and "budget" in err


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("K24_BUDGET", "1")
    g6 = emit_graph6(build_family(FamilySpec(11, 3, 6)))
    code, _, _ = run(capsys, monkeypatch, ["oracle", "--t", "4", "-"], g6)
    assert code == 3


def test_gen_family_and_exception(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "--family", "6,2,3"])
    assert code == 0 and parse_graph6(out.strip()) == build_family(FamilySpec(6, 2, 3))
    code, out, _ = run(capsys, monkeypatch, ["gen", "--family", "6,1,3,+", "--format", "edges"])
    assert code == 0 and len(out.strip().splitlines()) >= 10
    code, out, _ = run(capsys, monkeypatch, ["gen", "--exception", "C+"])
    assert code == 0 and parse_graph6(out.strip()).n == 8
    code, _, _ = run(capsys, monkeypatch, ["gen", "--family", "6,5,1"])
    assert code == 2
    code, _, _ = run(capsys, monkeypatch, ["gen", "--exception", "nope"])
    assert code == 2


def test_enum(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["enum", "--n", "12"])
    assert code == 0 and len(out.split()) == 16
    code, out, _ = run(capsys, monkeypatch, ["enum", "--n", "6", "--ids"])
    assert "K33" in out


def test_hamilton(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["hamilton", "-"], emit_graph6(build_family(FamilySpec(7, 2, 3))))
    assert code == 0 and json.loads(out)["kind"] == "cycle"
    code, out, _ = run(capsys, monkeypatch, ["hamilton", "-"], emit_graph6(complete_bipartite(2, 3)))
    assert code == 0 and json.loads(out)["kind"] == "path"
    code, _, _ = run(capsys, monkeypatch, ["hamilton", "-"], emit_graph6(complete_bipartite(2, 4)))
    assert code == 1


def test_apex(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["apex", "-"], emit_graph6(build_family(FamilySpec(9, 3, 4))))
    assert code == 0 and json.loads(out) == {"apex": [8], "planar": True}
    code, _, _ = run(capsys, monkeypatch, ["apex", "-"], emit_graph6(complete_bipartite(2, 4)))
    assert code == 1


def test_audit_selected_suites(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["audit", "--hasse", "--suite", "counting"])
    assert code == 0 and "PASS  hasse" in out and "PASS  counting" in out
    code, _, _ = run(capsys, monkeypatch, ["audit", "--suite", "bogus"])
    assert code == 2


def test_audit_json(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["audit", "--table1", "--json"])
    rep = json.loads(out)
    assert code == 0 and rep["suites"]["table1"]["ok"]
