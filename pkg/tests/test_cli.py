"""CLI surface: exit codes, round trips, deterministic reports."""

import json

import pytest

from qgfourier import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- padic calculator ---------------------------------------------------------


def test_padic_norm(capsys):
    code, out, _ = run(capsys, "padic", "norm", "--prime", "5", "1*5^-2+3")
    assert code == 0 and out.strip() == "25"


def test_padic_char(capsys):
    code, out, _ = run(capsys, "padic", "char", "--prime", "2", "1*2^-1", "1")
    assert code == 0 and out.strip() == "zeta(2)^1"
    code, out, _ = run(capsys, "padic", "char", "--prime", "2", "1", "1")
    assert code == 0 and out.strip() == "1"


def test_padic_integrate(capsys):
    code, out, _ = run(capsys, "padic", "integrate", "--prime", "3", "--ball", "3^2*Zp")
    assert code == 0 and out.strip() == "1/9"


def test_padic_eval_round_trip(capsys):
    code, out, _ = run(capsys, "padic", "eval", "--prime", "2", "101.01")
    assert code == 0
    code2, out2, _ = run(capsys, "padic", "eval", "--prime", "2", out.strip())
    assert code2 == 0 and out2 == out


def test_padic_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "padic", "norm", "--prime", "5", "9*5^1")
    assert code == 2 and "error" in err


# -- laurent pair -------------------------------------------------------------


def test_fourier_laurent(capsys):
    code, out, _ = run(capsys, "fourier", "--pair", "laurent", "--element", "e_3")
    assert code == 0 and out.strip() == "delta_3"
    code, out, _ = run(capsys, "fourier", "--pair", "laurent", "--element", "delta_3", "--inverse")
    assert code == 0 and out.strip() == "e_3"


def test_fourier_laurent_mixed_sides(capsys):
    code, _, err = run(capsys, "fourier", "--pair", "laurent", "--element", "e_1 + delta_2")
    assert code == 3


def test_fourier_laurent_bad_term(capsys):
    code, _, _ = run(capsys, "fourier", "--pair", "laurent", "--element", "spam_3")
    assert code == 2


# -- finite quantum groups ----------------------------------------------------


def test_fourier_builtin_round_trip(capsys):
    code, out, _ = run(capsys, "fourier", "--builtin", "Z2", "--element", "[1,0]")
    assert code == 0
    values = json.dumps(json.loads(out))
    code, out2, _ = run(capsys, "fourier", "--builtin", "Z2", "--inverse", "--element", values)
    assert code == 0 and json.loads(out2) == [1, 0]


def test_fourier_wrong_length_exits_3(capsys):
    code, _, _ = run(capsys, "fourier", "--builtin", "Z2", "--element", "[1,0,0]")
    assert code == 3


def test_dual_builtin_and_reread(tmp_path, capsys):
    out_file = tmp_path / "dual.json"
    code, _, _ = run(capsys, "dual", "--builtin", "S3", "--side", "group-algebra", "--output", str(out_file))
    assert code == 0
    obj = json.loads(out_file.read_text())
    assert obj["dual"]["dim"] == 6
    # the written dual is itself a valid input
    in_file = tmp_path / "in.json"
    in_file.write_text(json.dumps(obj["dual"]))
    code, out, _ = run(capsys, "dual", "--input", str(in_file))
    assert code == 0 and json.loads(out)["dual"]["dim"] == 6


def test_dual_malformed_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "dual", "--input", str(bad))
    assert code == 2


def test_dual_axiom_failure_exits_3(tmp_path, capsys):
    # serialize Fun(Z2), then corrupt the multiplication table
    code, out, _ = run(capsys, "dual", "--builtin", "Z2")
    obj = json.loads(out)["dual"]
    obj["mult"] = [[0, 0, 0, {"order": 1, "coeffs": [[1, 1]]}], [0, 1, 1, {"order": 1, "coeffs": [[1, 1]]}]]
    bad = tmp_path / "corrupt.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "dual", "--input", str(bad))
    assert code == 3
    assert all(json.loads(line)["status"] == "fail" for line in out.splitlines() if line)


# -- check --------------------------------------------------------------------


def test_check_is_deterministic(capsys):
    args = ("check", "--suite", "types,axioms", "--seed", "42")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["failed"] == 0 and summary["seed"] == 42 and summary["total"] == len(lines) - 1


def test_check_unknown_suite_exits_2(capsys):
    code, _, _ = run(capsys, "check", "--suite", "nonsense")
    assert code == 2


def test_check_reports_are_jsonl(capsys):
    code, out, _ = run(capsys, "check", "--suite", "types")
    assert code == 0
    for line in out.strip().splitlines():
        rec = json.loads(line)
        assert "summary" in rec or rec["status"] in ("pass", "fail", "skip")
