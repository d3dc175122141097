"""Tests for the command-line front end and the CSV/JSON writers."""

import io
import json
import math
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowzeros.cli import COMMANDS, build_parser, main, run
from lowzeros.io import parse_range, read_csv, write_csv


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCommands:
    def test_figure_csv(self, capsys):
        code, out, _ = _run(capsys, "bounds", "figure", "--which", "fig1", "--beta", "0.51:5:0.01",
                            "--format", "csv")
        assert code == 0
        params, rows = read_csv(out)
        assert params["which"] == "fig1"
        assert params["beta"] == "0.51:5:0.01"
        assert len(rows) == 450
        assert list(rows[0]) == ["beta", "hr_proportion", "thm7_proportion"]
        assert rows[-1]["beta"] == pytest.approx(5.0)

    def test_effective_json(self, capsys):
        code, out, _ = _run(capsys, "effective", "q0", "--t0", "1.0", "--alpha", "2.6",
                            "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["parameters"]["t0"] == 1.0
        row = doc["rows"][0]
        assert set(row) >= {"C", "q0", "T_argmax", "at_edge"}
        assert row["q0"] == pytest.approx(math.pi * math.exp(row["C"]), rel=1e-12)

    def test_weil_balance(self, capsys):
        code, out, _ = _run(capsys, "weil", "balance", "--q", "4", "--tf", "triangle", "--T", "4",
                            "--height", "60", "--format", "json")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert abs(row["residual"]) <= row["tail_bound"]
        assert row["ok"] is True

    @pytest.mark.parametrize("argv", [
        ["tf", "eval", "--tf", "falpha", "--param", "3", "--x", "0:1:0.25"],
        ["tf", "fourier", "--tf", "kernel", "--t", "0,1,2"],
        ["tf", "sigma", "--tf", "triangle"],
        ["arch", "--tf", "triangle", "--T", "2", "--shift", "1"],
        ["primes", "psi", "--x", "100"],
        ["primes", "sum", "--tf", "kernel", "--T", "3", "--kronecker", "-4"],
        ["chars", "build", "--q", "12"],
        ["chars", "conductor", "--q", "30"],
        ["chars", "ortho", "--q", "9"],
        ["weil", "rhs", "--q", "5", "--tf", "falpha", "--param", "3", "--T", "2"],
        ["zeros", "find", "--q", "5", "--height", "10"],
        ["zeros", "stats", "--q", "7", "--threads", "2"],
        ["bounds", "thm1", "--log-q", "1000"],
        ["bounds", "thm1-count", "--q", "1000000"],
        ["bounds", "thm2", "--q", "1000"],
        ["bounds", "thm3", "--q", "1000"],
        ["bounds", "family", "--q", "1000"],
        ["bounds", "proportions", "--beta", "0.2,1"],
        ["bounds", "interval", "--a", "0.5:1:0.25"],
        ["effective", "thm14", "--log-q", "60"],
        ["optimize", "falpha"],
        ["optimize", "section5"],
    ])
    @pytest.mark.parametrize("fmt", ["csv", "json", "text"])
    def test_every_subcommand(self, capsys, argv, fmt):
        code, out, err = _run(capsys, *argv, "--format", fmt)
        assert code == 0, err
        assert out.strip()
        if fmt == "csv":
            params, rows = read_csv(out)
            assert params["command"] == argv[0]
            assert rows
        elif fmt == "json":
            assert json.loads(out)["parameters"]["command"] == argv[0]

    def test_deterministic(self, capsys):
        argv = ["bounds", "proportions", "--beta", "0.6:2:0.1", "--format", "csv"]
        _, a, _ = _run(capsys, *argv)
        _, b, _ = _run(capsys, *argv)
        assert a == b

    def test_run_alias(self, capsys):
        assert run(["optimize", "falpha"]) == 0


class TestExitCodes:
    def test_domain_error(self, capsys):
        code, _, err = _run(capsys, "bounds", "thm1", "--q", "1")
        assert code == 2
        reason = json.loads(err.strip())
        assert reason["error"] == "domain"

    def test_bad_range(self, capsys):
        code, _, err = _run(capsys, "tf", "eval", "--tf", "triangle", "--x", "1:0:1")
        assert code == 2
        assert len(err.strip().splitlines()) == 1

    def test_capacity_error(self, capsys):
        code, _, err = _run(capsys, "weil", "rhs", "--q", "4", "--tf", "triangle", "--T", "40")
        assert code == 3
        assert json.loads(err)["error"] == "CapacityError"
        assert "achieved" in json.loads(err)

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["optimize", "falpha", "--bogus"])
        assert exc.value.code == 2
        assert json.loads(capsys.readouterr().err)["error"] == "usage"

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["nope"])
        assert exc.value.code == 2

    def test_help_lists_subcommands(self):
        text = build_parser().format_help()
        for name, anchor in COMMANDS.items():
            assert name in text
            assert anchor in text

    def test_console_entry(self):
        proc = subprocess.run([sys.executable, "-m", "lowzeros.cli", "optimize", "section5",
                               "--format", "json"], capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["rows"][0]["beta"] == pytest.approx(0.7229, abs=5e-4)


class TestIO:
    finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300)

    @given(st.lists(st.tuples(finite, st.integers(-10**9, 10**9), st.booleans()), min_size=1,
                    max_size=20))
    def test_csv_roundtrip(self, rows):
        data = [{"x": x, "n": n, "flag": b} for x, n, b in rows]
        buf = io.StringIO()
        write_csv(data, {"seed": 0, "which": "fig1"}, buf)
        params, back = read_csv(buf.getvalue())
        assert params == {"seed": "0", "which": "fig1"}
        for orig, got in zip(data, back):
            assert got["n"] == orig["n"]
            assert got["flag"] is orig["flag"]
            assert abs(got["x"] - orig["x"]) <= 1e-6 * abs(orig["x"])

    def test_range_inclusive(self):
        vals = parse_range("0.51:5:0.01")
        assert len(vals) == 450
        assert vals[0] == 0.51 and vals[-1] == 5.0

    def test_range_list_and_scalar(self):
        assert parse_range("1,2.5") == [1.0, 2.5]
        assert parse_range("3") == [3.0]

    @pytest.mark.parametrize("text", ["1:2", "2:1:0.1", "0:1:0", "a:b:c"])
    def test_range_invalid(self, text):
        with pytest.raises(ValueError):
            parse_range(text)
