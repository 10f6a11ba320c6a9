import json

import pytest

from awgshuffle import cli_main, parse_topology


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyCommand:
    def test_pass_summary_and_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--g", "3", "--m", "2", "--n", "3")
        assert code == 0
        assert "18/18 channels match S(3,6)" in out
        assert "result: PASS" in out

    def test_invalid_dimension_exits_two(self, capsys):
        code, _, err = run(capsys, "verify", "--g", "0", "--m", "1", "--n", "1")
        assert code == 2
        assert "error:" in err

    def test_non_integer_dimension_exits_two(self, capsys):
        code, _, err = run(capsys, "verify", "--g", "x", "--m", "1", "--n", "1")
        assert code == 2
        assert err  # argparse usage text

    def test_capacity_error_exits_two(self, capsys):
        code, _, err = run(capsys, "verify", "--g", "100", "--m", "101", "--n", "100")
        assert code == 2
        assert "over the cap" in err

    def test_report_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, _, _ = run(
            capsys, "verify", "--g", "4", "--m", "3", "--n", "2",
            "--report", str(path),
        )
        assert code == 0
        doc = json.loads(path.read_text())
        assert doc["passed"] is True
        assert doc["params"] == {
            "g": 4, "m": 3, "n": 2, "channel_count": 24, "lambda_count": 4
        }


class TestUsageErrors:
    def test_missing_subcommand(self, capsys):
        code, _, err = run(capsys)
        assert code == 2
        assert "usage" in err

    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "verify", "--g", "3", "--m", "2", "--n", "3", "--wat")
        assert code == 2
        assert "usage" in err

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        assert cli_main(["--help"]) == 0
        capsys.readouterr()


class TestTraceCommand:
    def test_worked_example(self, capsys):
        code, out, _ = run(
            capsys, "trace", "--g", "3", "--m", "2", "--n", "3",
            "--group", "1", "--port", "0", "--lambda", "0",
        )
        assert code == 0
        assert "path: 102 -> 012 -> 021" in out
        assert "input : group 1, port 0, l0" in out
        assert "middle: awg 0, input 1, l0" in out
        assert "output: awg 0, output 2, l0" in out

    def test_uncarried_wavelength_exits_two(self, capsys):
        code, _, err = run(
            capsys, "trace", "--g", "4", "--m", "3", "--n", "2",
            "--group", "0", "--port", "0", "--lambda", "3",
        )
        assert code == 2
        assert "carries wavelengths" in err


class TestTradeoffCommand:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "tradeoff", "--g", "2", "--l", "12")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == [
            "n", "m", "wavelengths", "awg_size", "cables", "channels", "note"
        ]
        assert len(lines) == 7
        assert "g >= n" in lines[1]
        assert "g >= n" not in lines[3]

    def test_csv_file(self, capsys, tmp_path):
        path = tmp_path / "table.csv"
        code, _, _ = run(
            capsys, "tradeoff", "--g", "2", "--l", "12", "--csv", str(path)
        )
        assert code == 0
        content = path.read_text()
        assert content.startswith(
            "n,m,wavelengths,awg_inputs,awg_outputs,cables,channels\n"
        )
        assert "12,1,12,2,12,0,24\n" in content


class TestOracleCommand:
    def test_s36_frozen(self, capsys):
        code, out, _ = run(capsys, "oracle", "--g", "3", "--l", "6")
        assert code == 0
        assert out == "0 3 6 9 12 15 1 4 7 10 13 16 2 5 8 11 14 17\n"

    def test_degenerate(self, capsys):
        code, out, _ = run(capsys, "oracle", "--g", "1", "--l", "1")
        assert code == 0
        assert out == "0\n"


class TestSynthCommand:
    def test_json_output_parses_back(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        code, out, _ = run(
            capsys, "synth", "--g", "3", "--m", "2", "--n", "3", "--out", str(path)
        )
        assert code == 0
        assert f"wrote {path}" in out
        topo = parse_topology(path.read_bytes())
        assert topo.params.channel_count == 18

    def test_dot_output(self, capsys, tmp_path):
        path = tmp_path / "w.dot"
        code, _, _ = run(
            capsys, "synth", "--g", "3", "--m", "1", "--n", "6",
            "--out", str(path), "--format", "dot",
        )
        assert code == 0
        content = path.read_text()
        assert content.count('kind="cable"') == 0
        assert content.count('kind="direct"') == 3

    def test_bad_format_exits_two(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "synth", "--g", "1", "--m", "1", "--n", "1",
            "--out", str(tmp_path / "x"), "--format", "xml",
        )
        assert code == 2
        assert "usage" in err

    def test_unwritable_path_exits_two(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "synth", "--g", "1", "--m", "1", "--n", "1",
            "--out", str(tmp_path / "missing" / "x.json"),
        )
        assert code == 2
        assert "error:" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--g", "3", "--m", "2", "--n", "3"],
            ["trace", "--g", "3", "--m", "2", "--n", "3",
             "--group", "1", "--port", "0", "--lambda", "0"],
            ["tradeoff", "--g", "2", "--l", "12"],
            ["oracle", "--g", "4", "--l", "6"],
        ],
    )
    def test_repeated_invocations_byte_identical(self, capsys, argv):
        first_code, first_out, _ = run(capsys, *argv)
        second_code, second_out, _ = run(capsys, *argv)
        assert first_code == second_code
        assert first_out.encode() == second_out.encode()

    def test_repeated_synth_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "synth", "--g", "4", "--m", "3", "--n", "2", "--out", str(a))
        run(capsys, "synth", "--g", "4", "--m", "3", "--n", "2", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()
