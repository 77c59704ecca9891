"""CLI behavior: outputs, exit codes, and byte-for-byte JSON determinism."""

import json
import subprocess
import sys

import pytest

from dlagraph import cli
from dlagraph.suites import CheckCase


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_text(capsys):
    code, out, err = run_cli(capsys, "classify", "--graph", "Sigma", "--algebra", "a2")
    assert code == 0
    assert "scope: Theorem1" in out
    assert "summands: so(16)" in out
    assert "dim: 120" in out


def test_classify_json_shape(capsys):
    code, out, _ = run_cli(capsys, "classify", "--graph", "Omega", "--algebra", "a14", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "algebra", "n", "E", "connected", "bipartite", "scope", "summands", "dim",
    }
    assert payload["n"] == 4
    assert payload["E"] == 4
    assert payload["connected"] is True
    assert payload["bipartite"] is None
    assert payload["dim"] == 126


def test_classify_out_of_scope_exit_3(capsys):
    code, out, _ = run_cli(capsys, "classify", "--graph", "L:4", "--algebra", "a2")
    assert code == 3
    assert "rerun with --oracle" in out


def test_classify_oracle_fallback(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--graph", "C:5", "--algebra", "a2", "--oracle", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["scope"] == "OracleFallback"
    assert payload["dim"] > 0


def test_close_json_frozen_dim(capsys):
    code, out, _ = run_cli(capsys, "close", "--graph", "Omega", "--algebra", "a2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 56
    assert payload["n"] == 4
    assert payload["basis"] == sorted(payload["basis"])
    assert len(payload["basis"]) == 56


def test_close_limit_exit_4(capsys):
    code, _, err = run_cli(
        capsys, "close", "--graph", "K:4", "--algebra", "a22", "--limit", "10"
    )
    assert code == 4
    assert "limit" in err


def test_close_basis_listing(capsys):
    code, out, _ = run_cli(
        capsys, "close", "--graph", "K:2", "--algebra", "a14", "--basis"
    )
    assert code == 0
    assert "dim: 6" in out
    assert "  XX" in out


def test_frustration_member_text(capsys):
    code, out, _ = run_cli(
        capsys, "frustration", "member",
        "--graph", "Sigma", "--algebra", "a2", "--target", "XIIYI",
    )
    assert code == 0
    assert "target XIIYI: member" in out
    assert "start g" in out
    assert out.strip().endswith("product: XIIYI")


def test_frustration_member_negative(capsys):
    # on two vertices the a2 generators commute: nothing new is reachable
    code, out, _ = run_cli(
        capsys, "frustration", "member",
        "--graph", "K:2", "--algebra", "a2", "--target", "ZZ",
    )
    assert code == 0
    assert "not a member" in out


def test_frustration_member_kernel_cap_exit_4(capsys):
    code, _, err = run_cli(
        capsys, "frustration", "member",
        "--graph", "K:6", "--algebra", "a22", "--target", "XXXXXX",
    )
    assert code == 4
    assert "kernel" in err


def test_frustration_build_json(capsys):
    code, out, _ = run_cli(
        capsys, "frustration", "build", "--graph", "K:2", "--algebra", "b3", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == ["XI", "YI", "IX", "IY"]
    # single-site letters anticommute on the same site only
    assert payload["edges"] == [[0, 1], [2, 3]]


def test_frustration_build_alt(capsys):
    code, out, _ = run_cli(
        capsys, "frustration", "build",
        "--graph", "K:2", "--algebra", "a14", "--alt", "--json",
    )
    assert code == 0
    assert json.loads(out)["generators"] == ["XX", "ZI", "IZ"]


def test_involution_text(capsys):
    code, out, _ = run_cli(
        capsys, "involution", "--l", "2", "--m", "2", "--algebra", "a14"
    )
    assert code == 0
    assert "closure dim on K_{2,2}: 56" in out
    assert "fixed-point dim inside K_4 closure: 56" in out
    assert out.strip().endswith("PASS")


def test_involution_json(capsys):
    code, out, _ = run_cli(
        capsys, "involution", "--l", "1", "--m", "3", "--algebra", "a4", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["block_dim"] == payload["fixed_dim"] == payload["formula_dim"] == 30
    assert payload["formula_applicable"] is True
    assert payload["match"] is True


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "pauli", "--cases", "200", "--seed", "5")
    assert code == 0
    assert "suite pauli: 8/8 passed" in out
    assert "FAIL" not in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setitem(
        cli.SUITES, "pauli",
        lambda **kwargs: [CheckCase("rigged", False, "boom")],
    )
    code, out, _ = run_cli(capsys, "verify", "pauli")
    assert code == 1
    assert "FAIL rigged | boom" in out
    assert "0/1 passed" in out


def test_bad_graph_spec_exit_2(capsys):
    code, _, err = run_cli(capsys, "classify", "--graph", "Q:9", "--algebra", "a2")
    assert code == 2
    assert "bad graph spec" in err


def test_bad_algebra_exit_2():
    with pytest.raises(SystemExit) as wrapped:
        cli.main(["classify", "--graph", "K:3", "--algebra", "a99"])
    assert wrapped.value.code == 2


def test_graph_file_text(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("n 4\n0 1\n1 2\n1 3\n2 3\n")
    code, out, _ = run_cli(capsys, "classify", "--graph", str(path), "--algebra", "a16")
    assert code == 0
    assert "dim: 120" in out


def test_graph_file_json(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run_cli(capsys, "close", "--graph", str(path), "--algebra", "a2", "--json")
    assert code == 0
    assert json.loads(out)["dim"] == 56


def test_qubit_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("DLA_MAX_N", "4")
    code, _, err = run_cli(capsys, "close", "--graph", "K:5", "--algebra", "b3")
    assert code == 2
    assert "qubit cap" in err
    monkeypatch.setenv("DLA_MAX_N", "5")
    code, out, _ = run_cli(capsys, "close", "--graph", "K:5", "--algebra", "b3")
    assert code == 0
    assert "dim: 15" in out


def test_json_byte_determinism():
    cmd = [
        sys.executable, "-m", "dlagraph.cli",
        "close", "--graph", "Sigma", "--algebra", "a2", "--json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.count(b"\n") == 1
    assert json.loads(first.stdout)["dim"] == 120


def test_verify_json_byte_determinism():
    cmd = [
        sys.executable, "-m", "dlagraph.cli",
        "verify", "frustration", "--json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["failed"] == 0
    assert payload["total"] == 7
