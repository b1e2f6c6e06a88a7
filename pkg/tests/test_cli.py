"""CLI contract: exit codes, config precedence, golden output, determinism."""

import os
import subprocess
import sys
from pathlib import Path

import pytest

from cybelab.cli import main
from cybelab.report import Report

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args, env_extra=None, capsys=None):
    code = None
    env_backup = {}
    if env_extra:
        for k, v in env_extra.items():
            env_backup[k] = os.environ.get(k)
            os.environ[k] = v
    try:
        code = main(args)
    finally:
        for k, v in env_backup.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v
    return code


def test_exit_zero_on_all_pass(capsys):
    code = run_cli(["shift", "--format", "machine"])
    out = capsys.readouterr().out
    assert code == 0
    rep = Report.parse(out)
    assert rep.all_pass and rep.suite == "shift"


def test_exit_one_on_failures(capsys):
    code = run_cli(["cybe", "--format", "machine"])
    out = capsys.readouterr().out
    assert code == 1
    rep = Report.parse(out)
    assert rep.counts["fail"] >= 1


def test_exit_two_on_config_error(capsys):
    assert run_cli(["shift", "--pencil", "1,2"]) == 2
    assert run_cli(["shift", "--window", "99"]) == 2


def test_exit_two_on_bad_expression(capsys):
    assert run_cli(["cybe", "--expr", "t/(l-m"]) == 2


def test_expr_check_is_recorded(capsys):
    code = run_cli(["cybe", "--expr", "t/(l-m)", "--format", "machine"])
    out = capsys.readouterr().out
    rep = Report.parse(out)
    expr_checks = [c for c in rep.checks if c.check == "cybe.expr"]
    assert len(expr_checks) == 1 and expr_checks[0].status == "pass"


def test_out_file_and_determinism(tmp_path, capsys):
    p1 = tmp_path / "a.txt"
    p2 = tmp_path / "b.txt"
    assert run_cli(["shift", "--format", "machine", "--seed", "3",
                    "--out", str(p1)]) == 0
    assert run_cli(["shift", "--format", "machine", "--seed", "3",
                    "--out", str(p2)]) == 0
    a = Report.parse(p1.read_text())
    b = Report.parse(p2.read_text())
    assert a.serialize(include_timing=False) == b.serialize(include_timing=False)


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cybelab.conf"
    cfg.write_text("window=5\nseed=11\nformat=machine\n")
    code = run_cli(["shift"], env_extra={"CYBELAB_CONFIG": str(cfg)})
    out = capsys.readouterr().out
    rep = Report.parse(out)
    assert code == 0 and rep.window == 5 and rep.seed == 11
    # flags override the file
    code = run_cli(["shift", "--window", "6"],
                   env_extra={"CYBELAB_CONFIG": str(cfg)})
    out = capsys.readouterr().out
    assert Report.parse(out).window == 6


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("windoww=5\n")
    assert run_cli(["shift"], env_extra={"CYBELAB_CONFIG": str(cfg)}) == 2


def test_golden_shift_report(capsys):
    code = run_cli(["shift", "--format", "machine", "--seed", "20240817"])
    out = capsys.readouterr().out
    got = Report.parse(out).serialize(include_timing=False)
    golden = (GOLDEN / "shift.report").read_text()
    assert got == golden


def test_golden_gram_report(capsys):
    code = run_cli(["gram", "--format", "machine", "--seed", "20240817"])
    out = capsys.readouterr().out
    got = Report.parse(out).serialize(include_timing=False)
    golden = (GOLDEN / "gram.report").read_text()
    assert got == golden


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cybelab.cli", "shift"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "shift.invert-weyl-r1" in proc.stdout
