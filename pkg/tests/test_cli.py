import subprocess
import sys

import pytest

from onestm.cli import main

from .conftest import GOLDEN


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_halts(capsys):
    assert run_cli(capsys, "run", "--builtin", "mcc", "--input", "uuuu00h") == (0, "HALTS steps=20\n", "")


def test_run_diverges(capsys):
    code, out, _ = run_cli(capsys, "run", "--builtin", "mcc", "--input", "uu00h")
    assert (code, out) == (1, "DIVERGES reason=blank-escape at=13\n")


def test_run_unknown(capsys):
    code, out, _ = run_cli(capsys, "run", "--builtin", "mcc", "--input", "uuuuuuuu0000h", "--fuel", "50")
    assert (code, out) == (2, "UNKNOWN fuel=50\n")


def test_run_foreign_symbol(capsys):
    code, out, err = run_cli(capsys, "run", "--builtin", "mcc", "--input", "uux")
    assert code == 3 and out == ""
    assert "'x' at position 2" in err


def test_run_from_file(capsys, tmp_path):
    path = tmp_path / "grower.machine"
    path.write_text("blank _\ninput 1\nrule _ 1 R\nrule 1 1 L\n")
    code, out, _ = run_cli(capsys, "run", "--file", str(path), "--input", "1")
    assert (code, out) == (1, "DIVERGES reason=translated-cycle at=4\n")


def test_run_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.machine"
    path.write_text("blank _\ninput u\nrule u U R\nrule u U R\n")
    code, _, err = run_cli(capsys, "run", "--file", str(path), "--input", "u")
    assert code == 3
    assert "DuplicateRule" in err and "MissingTransition 'U'" in err


def test_run_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "run", "--file", str(tmp_path / "nope"), "--input", "u")
    assert code == 3 and "cannot read" in err


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["run", "--input", "h"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["verify", "thm2", "--nmax", "-1"])
    assert info.value.code == 3
    assert run_cli(capsys, "run", "--builtin", "unary-vs-base:12", "--input", "h")[0] == 3


def test_trace_figure(capsys, golden):
    code, out, _ = run_cli(capsys, "trace", "--builtin", "mcc", "--input", "uuuu00h")
    assert code == 0
    assert out == golden("figure1.txt") + "HALTS steps=20\n"


def test_trace_immediate_halt(capsys):
    assert run_cli(capsys, "trace", "--builtin", "mcc", "--input", "h") == (0, " _ [h] _\nHALTS steps=0\n", "")


def test_trace_line_count(capsys):
    code, out, _ = run_cli(capsys, "trace", "--builtin", "mcc", "--input", "u0h")
    *lines, outcome = out.splitlines()
    assert code == 0
    assert outcome == f"HALTS steps={len(lines) - 1}"


def test_trace_diverging_stops_at_detection(capsys):
    code, out, _ = run_cli(capsys, "trace", "--builtin", "mcc", "--input", "uu00h")
    *lines, outcome = out.splitlines()
    assert (code, outcome, len(lines)) == (1, "DIVERGES reason=blank-escape at=13", 14)
    assert lines[-1].startswith(" _ [_]")


@pytest.mark.parametrize("base, name", [("2", "mcc.machine"), ("10", "base10.machine")])
def test_generate(capsys, golden, base, name):
    assert run_cli(capsys, "generate", "--base", base) == (0, golden(name), "")


def test_generate_out_of_range(capsys):
    code, out, err = run_cli(capsys, "generate", "--base", "11")
    assert code == 3 and out == "" and "base" in err


@pytest.mark.parametrize(
    "argv, name",
    [
        (["verify", "thm2", "--nmax", "40", "--mmax", "5"], "verify_thm2.out"),
        (["verify", "pump", "--p", "3", "--witness-max", "8"], "verify_pump_p3.out"),
        (["verify", "thm1", "--gamma", "2", "--kmax", "3"], "verify_thm1_g2.out"),
    ],
)
def test_verify_golden(capsys, golden, argv, name):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0
    assert out == golden(name)
    assert err.startswith("elapsed: ")


def test_verify_counterexample_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "pump", "--p", "3", "--witness-max", "1")
    assert code == 4 and "verdict: FAILS" in out


def test_verify_unknown_policy_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm2", "--nmax", "3", "--mmax", "2", "--fuel", "3")
    assert code == 2 and "verdict: UNDECIDED" in out


def test_verify_bad_kmax(capsys):
    assert run_cli(capsys, "verify", "thm1", "--kmax", "1")[0] == 3


@pytest.mark.slow
def test_verify_thm1_three_symbols(capsys, golden):
    code, out, _ = run_cli(capsys, "verify", "thm1", "--gamma", "3", "--kmax", "3")
    assert code == 0 and out == golden("verify_thm1_g3.out")


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "onestm", "trace", "--builtin", "mcc", "--input", "uuuu00h"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout == (GOLDEN / "figure1.txt").read_text() + "HALTS steps=20\n"
