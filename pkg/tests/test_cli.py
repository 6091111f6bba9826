"""End-to-end command-line checks through run(), plus one real subprocess."""

from __future__ import annotations

import subprocess
import sys

from tracecodes import cli


def test_weights_text_output(capsys):
    rc = cli.run(["weights", "--m", "5", "--h", "1", "--variant", "d0"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "n=15 k=5 d=6"
    assert out[1:] == ["0 1", "6 10", "8 15", "10 6"]


def test_construct_machine_format(capsys):
    rc = cli.run(["construct", "--m", "5", "--h", "1", "--variant", "d1",
                  "--format", "machine"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert "m=5" in out and "n=16" in out and "k=5" in out and "modulus=37" in out
    assert all("=" in line and " " not in line for line in out)


def test_construct_text_names_the_modulus(capsys):
    rc = cli.run(["construct", "--m", "4", "--h", "2", "--variant", "full"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "modulus polynomial: x^4 + x + 1" in out
    assert "k=2" in out  # norm map: rank drops to h


def test_construct_honors_modulus_flag(capsys):
    rc = cli.run(["construct", "--m", "5", "--h", "1", "--variant", "d0",
                  "--modulus", "0b101001"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "modulus=41" in out


def test_verify_default_source_matches(capsys):
    rc = cli.run(["verify", "--m", "5", "--h", "1", "--variant", "d1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "source=T2C status=match" in out
    assert "moment=pass" in out
    assert out.count(" ok") == 4  # zero-weight row plus three table rows


def test_verify_forced_printed_table_fails(capsys):
    rc = cli.run(["verify", "--m", "5", "--h", "1", "--variant", "d1",
                  "--source", "T2"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 1
    assert any(line == "6 expected=7 actual=6 DIFF" for line in out)
    assert any(line == "10 expected=9 actual=10 DIFF" for line in out)
    assert any(line == "8 expected=15 actual=15 ok" for line in out)


def test_verify_uncovered_variant_is_inapplicable(capsys):
    rc = cli.run(["verify", "--m", "3", "--h", "1", "--variant", "full"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "status=inapplicable" in out and "full" in out


def test_verify_norm_collapse_note(capsys):
    rc = cli.run(["verify", "--m", "4", "--h", "2", "--variant", "full"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "status=match" in out
    assert "# " in out and "rank collapse" in out


def test_bad_parameters_exit_2(capsys):
    rc = cli.run(["weights", "--m", "5", "--h", "3", "--variant", "d0"])
    captured = capsys.readouterr()
    assert rc == 2
    assert captured.err.startswith("error:")
    assert captured.out == ""


def test_punctured_needs_even_ratio(capsys):
    rc = cli.run(["construct", "--m", "5", "--h", "1", "--variant", "punctured"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_weil_exact_agreement(capsys):
    rc = cli.run(["weil", "--m", "4", "--h", "1", "--a", "8", "--b", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "kind=exact" in out and "agree=1" in out


def test_weil_magnitude_only(capsys):
    rc = cli.run(["weil", "--m", "3", "--h", "1", "--a", "1", "--b", "1",
                  "--format", "machine"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert "kind=magnitude-only" in out
    assert "closed=+/-4" in out
    assert "agree=1" in out


def test_export_to_file(tmp_path, capsys):
    dest = tmp_path / "gen.txt"
    rc = cli.run(["export", "--m", "5", "--h", "1", "--variant", "d0",
                  "--out", str(dest)])
    assert rc == 0
    lines = dest.read_text().splitlines()
    assert lines[0] == "15 5 5 1 37"
    assert len(lines) == 6
    assert all(len(row) == 15 and set(row) <= {"0", "1"} for row in lines[1:])
    rc = cli.run(["export", "--m", "5", "--h", "1", "--variant", "d0"])
    assert rc == 0
    assert capsys.readouterr().out.splitlines() == lines


def test_sweep_deterministic_and_green(capsys):
    rc1 = cli.run(["sweep", "--m-min", "3", "--m-max", "5"])
    first = capsys.readouterr().out
    rc2 = cli.run(["sweep", "--m-min", "3", "--m-max", "5"])
    second = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert first == second
    assert "# summary cases=" in first


def test_sweep_rejects_bad_range(capsys):
    rc = cli.run(["sweep", "--m-min", "6", "--m-max", "3"])
    assert rc == 2
    assert "bad range" in capsys.readouterr().err


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "tracecodes", "weights",
         "--m", "4", "--h", "1", "--variant", "d1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "n=8 k=4 d=2"
