"""Command-line surface: exit codes, output shapes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rodpade.cli import main

CLI = [sys.executable, "-m", "rodpade"]


def run_cli(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=False)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_pade_legendre_summary(capsys):
    code, data = run_json(capsys, ["pade", "--m", "1", "--r", "1", "--alphas", "1", "--n", "1"])
    assert code == 0
    assert data["ok"] is True
    assert data["table"]["P"][0] == ["1", "-2"]
    assert data["determinant"]["delta"] == "1/2"
    assert data["verification"]["orthogonality_ok"] is True


def test_pade_rejects_weight_zero(capsys):
    code = main(["pade", "--m", "1", "--r", "1", "--alphas", "1", "--n", "0"])
    assert code == 2


def test_pade_weight_zero_exits_2():
    proc = run_cli("pade", "--m", "1", "--r", "1", "--alphas", "1", "--n", "0")
    assert proc.returncode == 2


def test_pade_appendix_logpow(capsys):
    code, data = run_json(capsys, ["pade", "--appendix-logpow", "--m", "2", "--n", "1"])
    assert code == 0
    assert data["kind"] == "logpow"
    assert data["determinant"]["delta"] == "-1/6"
    assert [row["label"] for row in data["table"]["rows"]] == ["log^1", "log^2"]


def test_det_subcommand(capsys):
    code, data = run_json(capsys, ["det", "--m", "1", "--r", "1", "--alphas", "1", "--n", "2"])
    assert code == 0
    assert data["determinant"]["delta"] == "1/3"
    assert data["determinant"]["abs_identity_ok"] is True


def test_criterion_exit_codes(capsys):
    code, data = run_json(
        capsys, ["criterion", "--m", "1", "--r", "1", "--alphas", "1", "--beta", "30", "--place", "inf"]
    )
    assert code == 0
    assert data["conclusion"] == ["Li_1(1/30)"]
    code, data = run_json(
        capsys, ["criterion", "--m", "1", "--r", "1", "--alphas", "1", "--beta", "29", "--place", "inf"]
    )
    assert code == 3
    assert data["conclusion"] == []


def test_criterion_validation_exit(capsys):
    code = main(["criterion", "--m", "2", "--r", "1", "--alphas", "1,1", "--beta", "30"])
    assert code == 2


def test_audit_lcm(capsys):
    code, data = run_json(capsys, ["audit", "--lcm", "10000"])
    assert code == 0
    assert data["ok"] is True
    assert 0.9 < data["growth_ratio"] < 1.1


def test_audit_bounds_range(capsys):
    code, data = run_json(
        capsys,
        ["audit", "--m", "1", "--r", "1", "--alphas", "1", "--n", "1..3", "--place", "inf"],
    )
    assert code == 0
    assert data["all_hold"] is True
    assert len(data["reports"]) == 3
    assert data["decay"] is None


def test_audit_with_decay(capsys):
    code, data = run_json(
        capsys,
        [
            "audit", "--m", "1", "--r", "1", "--alphas", "1",
            "--n", "2..5", "--place", "inf", "--beta", "30",
        ],
    )
    assert code == 0
    assert data["decay"]["ok"] is True


def test_audit_bad_beta_exits_2(capsys):
    code = main(
        ["audit", "--m", "1", "--r", "1", "--alphas", "1", "--beta", "1", "--place", "inf", "--n", "1"]
    )
    assert code == 2


def test_logpow_identities(capsys):
    code, data = run_json(capsys, ["logpow-identities", "--n", "3"])
    assert code == 0
    assert data["ok"] is True


def test_csv_format_runs(capsys):
    code = main(["det", "--m", "1", "--r", "1", "--alphas", "1", "--n", "1", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert "determinant.delta,1/2" in out


def test_csv_table_rows(capsys):
    code = main(["pade", "--m", "1", "--r", "1", "--alphas", "1", "--n", "1", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert "table.P[0],1,-2" in out
    assert "table.rows[0].label,Li_1(1/z)" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(
        ["criterion", "--m", "1", "--r", "1", "--alphas", "1", "--beta", "30", "--out", str(path)]
    )
    assert code == 0
    assert json.loads(path.read_text())["conclusion"] == ["Li_1(1/30)"]


def test_config_document_json(tmp_path, capsys):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"m": 1, "r": 1, "alphas": ["1"], "n": 1}))
    code, data = run_json(capsys, ["pade", "--config", str(path)])
    assert code == 0
    assert data["table"]["P"][0] == ["1", "-2"]


def test_config_document_flags_win(tmp_path, capsys):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"m": 1, "r": 1, "alphas": ["1"], "n": 1}))
    code, data = run_json(capsys, ["det", "--config", str(path), "--n", "2"])
    assert code == 0
    assert data["n"] == 2
    assert data["determinant"]["delta"] == "1/3"


def test_verification_failure_exits_1(capsys, monkeypatch):
    import rodpade.logpow

    monkeypatch.setattr(rodpade.logpow, "verify_En_identities", lambda n: False)
    code, data = run_json(capsys, ["logpow-identities", "--n", "2"])
    assert code == 1
    assert data["ok"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ("pade", "--m", "1", "--r", "2", "--alphas", "1", "--n", "1"),
        ("criterion", "--m", "2", "--r", "1", "--alphas", "1,2", "--beta", "30", "--place", "p2"),
        ("audit", "--m", "1", "--r", "1", "--alphas", "1", "--n", "1..2", "--place", "p3"),
        ("det", "--appendix-logpow", "--m", "2", "--n", "1"),
    ],
)
def test_byte_identical_reruns(argv):
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first.returncode == second.returncode
    assert first.stdout == second.stdout
