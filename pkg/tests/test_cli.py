"""Command-line interface: every subcommand, every exit code, determinism."""

import math

import pytest

from kelvinfn.cli import _parse_range, _series_cfg, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_ber_at_origin(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "ber", "--nu", "0", "--x", "0")
        assert code == 0
        assert out.splitlines()[0].endswith("= 1")

    def test_dber_integer_relation(self, capsys):
        """dber at order 0 equals -(pi/2) bei(1) - ker(1)."""
        code, out, _ = run_cli(capsys, "eval", "dber", "--nu", "0", "--x", "1",
                               "--format", "csv")
        assert code == 0
        value = float(out.splitlines()[1].split(",")[3])
        from kelvinfn.kelvin import kelvin_all
        q = kelvin_all(0.0, 1.0)
        assert value == pytest.approx(-math.pi / 2.0 * q.bei - q.ker, rel=1e-12)

    def test_domain_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "ker", "--nu", "0", "--x", "0")
        assert code == 2
        assert "DomainError" in err

    def test_unknown_function_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "blah", "--nu", "0", "--x", "1")
        assert code == 2

    def test_fn_flag_equivalent(self, capsys):
        code1, out1, _ = run_cli(capsys, "eval", "bei", "--nu", "0.5", "--x", "2")
        code2, out2, _ = run_cli(capsys, "eval", "--fn", "bei", "--nu", "0.5",
                                 "--x", "2")
        assert code1 == code2 == 0
        assert out1 == out2


class TestTable:
    def test_single_point(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--nu", "0", "--x", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "nu,x,ber,bei,ker,kei,dber,dbei,dker,dkei,method"
        assert len(lines) == 2

    def test_grid_rows_and_order(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--nu-range", "0:1:0.5",
                               "--x-range", "1:3:1")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1 + 9            # header once, 3x3 rows
        nus = [float(l.split(",")[0]) for l in lines[1:]]
        assert nus == sorted(nus)             # nu-major ordering

    def test_x_zero_convention(self, capsys):
        """ber/bei filled, remaining cells empty, note in the method column."""
        code, out, _ = run_cli(capsys, "table", "--nu", "0", "--x", "0")
        assert code == 0
        row = out.splitlines()[1].split(",")
        assert row[2] == "1"
        assert row[4] == "" and row[5] == "" and row[6] == ""
        assert row[10] == "undefined_at_x0"

    def test_invalid_range_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "table", "--nu-range", "1:0:0.5",
                               "--x-range", "1:2:1")
        assert code == 2

    def test_missing_grid_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "table")
        assert code == 2

    def test_determinism(self, capsys, tmp_path):
        args = ("table", "--nu-range", "0:2:0.4", "--x-range", "0.5:2:0.75")
        p1 = tmp_path / "a.csv"
        p2 = tmp_path / "b.csv"
        assert main(list(args) + ["--out", str(p1)]) == 0
        assert main(list(args) + ["--out", str(p2)]) == 0
        assert p1.read_bytes() == p2.read_bytes()
        assert b"\r" not in p1.read_bytes()


class TestVerify:
    def test_reflection_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "reflection")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "name,nu,x,lhs,rhs,abs_diff,tol,pass"
        assert all(l.endswith(",1") for l in lines[1:])

    def test_degenerate_tolerance_always_passes(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "all", "--tol", "1e300")
        assert code == 0

    def test_impossible_tolerance_exit_1(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "reflection",
                               "--tol", "1e-330", "--format", "plain")
        assert code == 1
        assert "FAIL" in out

    def test_unknown_suite_exit_2(self, capsys):
        with pytest.raises(SystemExit):   # argparse rejects bad choices
            main(["verify", "--suite", "nonsense"])

    def test_theorem5_suite(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "theorem5")
        assert code == 0

    def test_csv_deterministic(self, capsys, tmp_path):
        p1 = tmp_path / "v1.csv"
        p2 = tmp_path / "v2.csv"
        assert main(["verify", "--suite", "appendix", "--out", str(p1)]) == 0
        assert main(["verify", "--suite", "appendix", "--out", str(p2)]) == 0
        assert p1.read_bytes() == p2.read_bytes()


class TestBench:
    def test_single_point(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--nu-range", "0.3",
                               "--x-range", "1")
        assert code == 0
        assert "points = 1" in out
        assert "speedup_ratio" in out

    def test_empty_grid_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--nu-range", "0.3",
                               "--x-range", "0")
        assert code == 2
        assert "empty grid" in err


class TestPlumbing:
    def test_parse_range(self):
        assert _parse_range("1:2:0.5", "t") == [1.0, 1.5, 2.0]
        assert _parse_range("3", "t") == [3.0]
        with pytest.raises(ValueError):
            _parse_range("1:2:0", "t")
        with pytest.raises(ValueError):
            _parse_range("1:2", "t")

    def test_max_terms_env(self, monkeypatch):
        monkeypatch.setenv("KELVIN_MAX_TERMS", "123")
        assert _series_cfg().max_terms == 123
        monkeypatch.delenv("KELVIN_MAX_TERMS")
        assert _series_cfg().max_terms == 500

    def test_env_reaches_evaluation(self, capsys, monkeypatch):
        """A starved term budget changes the computed value."""
        code, out_default, _ = run_cli(capsys, "eval", "ber", "--nu", "0",
                                       "--x", "10", "--format", "csv")
        monkeypatch.setenv("KELVIN_MAX_TERMS", "3")
        code2, out_starved, _ = run_cli(capsys, "eval", "ber", "--nu", "0",
                                        "--x", "10", "--format", "csv")
        assert code == code2 == 0
        assert out_default != out_starved
