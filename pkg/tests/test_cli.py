"""Command-line interface and rendering tests.

Golden strings here pin the exact bytes of each output format; any
formatting change must update them deliberately.
"""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bourbaki.cli import run
from bourbaki.errors import ParameterError
from bourbaki.render import csv_table, decimal_12, format_rational, format_value

F = Fraction

CSV_F_LEVEL_1 = "x_num,x_den,y_num,y_den\n0,1,0,1\n1,3,2,3\n2,3,1,3\n1,1,1,1\n"

SVG_BIG_F_LEVEL_1 = (
    '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 900 900" '
    'width="900" height="900">\n'
    '  <polyline fill="none" stroke="black" stroke-width="1" points="'
    "2.000000,898.000000 300.666667,798.444444 "
    '599.333333,649.111111 898.000000,450.000000"/>\n'
    "</svg>\n"
)


class TestRender:
    @pytest.mark.parametrize(
        "x,text",
        [(F(1, 2), "1/2"), (F(0), "0/1"), (F(1), "1/1"), (F(-3, 4), "-3/4")],
    )
    def test_format_rational(self, x, text):
        assert format_rational(x) == text

    @pytest.mark.parametrize(
        "x,text",
        [
            (F(0), "0.000000000000"),
            (F(1), "1.00000000000"),
            (F(1, 2), "0.500000000000"),
            (F(8, 23), "0.347826086957"),
            (F(1, 14), "0.0714285714286"),
            (F(-1, 4), "-0.250000000000"),
            (F(9999999999999, 10**13), "1.00000000000"),
        ],
    )
    def test_decimal_12(self, x, text):
        assert decimal_12(x) == text

    def test_decimal_12_rejects_floats(self):
        with pytest.raises(ParameterError):
            decimal_12(0.5)

    def test_format_value(self):
        assert format_value(F(8, 23)) == "8/23 (0.347826086957)"


class TestEvalCommands:
    @pytest.mark.parametrize(
        "argv,line",
        [
            (["eval-f", "1/2"], "1/2 (0.500000000000)"),
            (["eval-f", "1/7"], "8/23 (0.347826086957)"),
            (["eval-f", "1/3"], "2/3 (0.666666666667)"),
            (["eval-f", "2/3"], "1/3 (0.333333333333)"),
            (["eval-F", "1"], "1/2 (0.500000000000)"),
            (["eval-F", "1/4"], "1/14 (0.0714285714286)"),
            (["eval-f", "1/3", "--a", "1/2"], "1/2 (0.500000000000)"),
        ],
    )
    def test_exact_lines(self, capsys, argv, line):
        assert run(argv) == 0
        assert capsys.readouterr().out == line + "\n"

    def test_approx_exact_endpoint(self, capsys):
        assert run(["approx-f", "0", "--tol", "0.5"]) == 0
        out = capsys.readouterr().out
        assert out == "lower: 0/1 (0.000000000000)\nupper: 0/1 (0.000000000000)\n"

    def test_approx_interval_width(self, capsys):
        assert run(["approx-f", "0.333333333333", "--tol", "0.000001"]) == 0
        lines = capsys.readouterr().out.splitlines()
        low = F(lines[0].split()[1].split("/")[0] + "/" + lines[0].split()[1].split("/")[1])
        high = F(lines[1].split()[1].split("/")[0] + "/" + lines[1].split()[1].split("/")[1])
        assert low <= high
        assert high - low <= F(1, 10**6)

    def test_closed_form_f(self, capsys):
        assert run(["closed-form", "--target", "f", "--case", "v", "--i", "1", "--j", "2"]) == 0
        out = capsys.readouterr().out
        assert out == "x = 1/12 (0.0833333333333)\nf(x) = 4/15 (0.266666666667)\n"

    def test_closed_form_F(self, capsys):
        assert run(["closed-form", "--target", "F", "--case", "i", "--i", "1"]) == 0
        out = capsys.readouterr().out
        assert out == "x = 1/4 (0.250000000000)\nF(x) = 1/14 (0.0714285714286)\n"


class TestIterateCommand:
    def test_csv_golden(self, tmp_path, capsys):
        path = tmp_path / "f1.csv"
        argv = ["iterate", "--target", "f", "--level", "1", "--format", "csv", "--out", str(path)]
        assert run(argv) == 0
        assert capsys.readouterr().out == ""
        assert path.read_bytes() == CSV_F_LEVEL_1.encode()

    def test_svg_golden(self, tmp_path):
        path = tmp_path / "F1.svg"
        argv = ["iterate", "--target", "F", "--level", "1", "--format", "svg", "--out", str(path)]
        assert run(argv) == 0
        assert path.read_bytes() == SVG_BIG_F_LEVEL_1.encode()

    def test_svg_structure(self, tmp_path):
        path = tmp_path / "f3.svg"
        argv = ["iterate", "--target", "f", "--level", "3", "--format", "svg", "--out", str(path)]
        assert run(argv) == 0
        text = path.read_text()
        assert text.count("<polyline") == 1
        assert 'viewBox="0 0 900 900"' in text
        assert 'stroke-width="1"' in text
        points = text.split('points="')[1].split('"')[0].split()
        assert len(points) == 3**3 + 1
        for pair in points:
            px, py = pair.split(",")
            assert len(px.split(".")[1]) == 6
            assert len(py.split(".")[1]) == 6
            assert 2 <= float(px) <= 898
            assert 2 <= float(py) <= 898

    def test_deterministic_bytes(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for path in (a, b):
            argv = ["iterate", "--target", "f", "--level", "4", "--format", "csv", "--out", str(path)]
            assert run(argv) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_csv_matches_library(self, tmp_path):
        from bourbaki.function import build_iterate

        path = tmp_path / "f2.csv"
        argv = ["iterate", "--target", "f", "--level", "2", "--format", "csv", "--out", str(path)]
        assert run(argv) == 0
        assert path.read_text() == csv_table(build_iterate(2))

    def test_family_table(self, tmp_path):
        path = tmp_path / "fa.csv"
        argv = [
            "iterate", "--target", "f", "--level", "1", "--a", "1/4",
            "--format", "csv", "--out", str(path),
        ]
        assert run(argv) == 0
        assert path.read_text().splitlines()[2] == "1,3,1,4"

    def test_a_rejected_for_antiderivative(self, tmp_path, capsys):
        path = tmp_path / "x.csv"
        argv = [
            "iterate", "--target", "F", "--level", "1", "--a", "2/3",
            "--format", "csv", "--out", str(path),
        ]
        assert run(argv) == 1
        assert not path.exists()


class TestGeometryCommands:
    def test_boxdim_table_golden(self, capsys):
        assert run(["boxdim", "--max-level", "2"]) == 0
        out = capsys.readouterr().out
        assert out == "level delta count\n0 1/1 1\n1 1/3 5\n2 1/9 25\nestimate 1.46497352072\n"

    def test_boxdim_json_shape(self, capsys):
        assert run(["boxdim", "--max-level", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert list(payload.keys()) == ["levels", "estimate"]
        assert [list(entry.keys()) for entry in payload["levels"]] == [
            ["level", "delta", "count"]
        ] * 4
        assert payload["levels"][3] == {"level": 3, "delta": "1/27", "count": 125}
        assert payload["estimate"] == "1.46497352072"

    def test_boxdim_requires_refined_level(self, capsys):
        assert run(["boxdim", "--max-level", "0"]) == 1

    def test_arclength_lines(self, capsys):
        assert run(["arclength", "--max-level", "1"]) == 0
        assert capsys.readouterr().out == "0 1.11803398875\n1 1.12465898910\n"

    def test_measure_golden(self, capsys):
        assert run(["measure", "--digits", "00"]) == 0
        assert capsys.readouterr().out == "4/25 (0.160000000000)\n"

    def test_measure_empty_address(self, capsys):
        assert run(["measure", "--digits", ""]) == 0
        assert capsys.readouterr().out == "1/1 (1.00000000000)\n"

    def test_measure_bad_digit(self, capsys):
        assert run(["measure", "--digits", "013"]) == 1


class TestVerifyCommand:
    def test_json_shape_and_exit(self, capsys):
        assert run(["verify", "--suite", "symmetry", "--cases", "5", "--seed", "9"]) == 0
        captured = capsys.readouterr()
        payload = json.loads(captured.out)
        assert list(payload.keys()) == ["suite", "cases", "failures"]
        assert payload["suite"] == "symmetry"
        assert payload["cases"] == 11
        assert payload["failures"] == []
        assert "elapsed_ms" not in captured.out
        assert "ms)" in captured.err

    def test_defaults(self, capsys):
        assert run(["verify", "--suite", "geometry"]) == 0
        assert json.loads(capsys.readouterr().out)["failures"] == []

    def test_bad_suite(self, capsys):
        assert run(["verify", "--suite", "bogus"]) == 1

    def test_seed_range(self, capsys):
        assert run(["verify", "--suite", "geometry", "--seed", str(2**64)]) == 1

    def test_process_level_determinism(self):
        cmd = [
            sys.executable, "-m", "bourbaki",
            "verify", "--suite", "symmetry", "--cases", "20", "--seed", "3",
        ]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == 0
        assert second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.startswith(b"{")


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["eval-f", "3/2"],
            ["eval-f", "abc"],
            ["eval-f", "1/0"],
            ["eval-f", "-1/2"],
            ["eval-f", "1/2", "--a", "1"],
            ["approx-f", "0.5", "--tol", "0"],
            ["approx-f", "x", "--tol", "0.1"],
            ["closed-form", "--target", "f", "--case", "v", "--i", "1"],
            ["closed-form", "--target", "F", "--case", "v", "--i", "1"],
            ["closed-form", "--target", "F", "--case", "i", "--i", "1", "--j", "2"],
            ["iterate", "--target", "f", "--level", "99", "--format", "csv", "--out", "/dev/null"],
            ["arclength", "--max-level", "99"],
            [],
            ["nonsense"],
            ["eval-f"],
            ["eval-f", "1/2", "--bogus"],
        ],
    )
    def test_invalid_input_exits_1(self, capsys, argv):
        assert run(argv) == 1

    def test_help_exits_0(self, capsys):
        assert run(["--help"]) == 0
        assert "bourbaki" in capsys.readouterr().out
