import json

import pytest
from typer.testing import CliRunner

from cli import app

runner = CliRunner()


def _csv_rows(output: str) -> list[list[str]]:
    lines = [line for line in output.splitlines() if "," in line]
    return [line.split(",") for line in lines[1:]]


def test_cohomology_csv():
    result = runner.invoke(app, ["cohomology", "dualnumbers", "--format", "csv"])
    assert result.exit_code == 0
    assert _csv_rows(result.stdout) == [["0", "2"], ["1", "1"], ["2", "1"], ["3", "1"]]


def test_cohomology_field_override():
    result = runner.invoke(app, ["cohomology", "dualnumbers", "--field", "Fp:2", "--format", "csv"])
    assert result.exit_code == 0
    assert [d for _, d in _csv_rows(result.stdout)] == ["2", "2", "2", "2"]


def _dims_line(output: str) -> str:
    return output.strip().splitlines()[-1]


@pytest.mark.parametrize(
    "args, expected",
    [
        (["--algebra", "dualnumbers.json", "--max-degree", "3"], "2 1 1 1"),
        (["--algebra", "a2.json"], "1 0 0 0"),
        (["--algebra", "a2.json", "--coeff", "dual"], "2 0 0 0"),
        (["--quiver", "a2"], "1 0 0 0"),
        (["dualnumbers"], "2 1 1 1"),
    ],
)
def test_cohomology_text_line(args, expected):
    result = runner.invoke(app, ["cohomology", *args])
    assert result.exit_code == 0
    assert _dims_line(result.stdout) == expected


def test_homology_text_matches_dual_cohomology():
    result = runner.invoke(app, ["homology", "--algebra", "a2.json"])
    assert result.exit_code == 0
    assert _dims_line(result.stdout) == "2 0 0 0"


def test_split_flag_on_split_input():
    result = runner.invoke(app, ["les", "--split", "triangular_kkk", "-n", "1", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["middle"] == [1, 0]


@pytest.mark.parametrize(
    "args",
    [
        ["cohomology", "no_such_algebra"],
        ["cohomology", "dualnumbers", "--field", "R"],
        ["cohomology", "dualnumbers", "--field", "Fp:4"],
        ["cohomology", "k", "--target", "quotient"],
        ["cohomology", "k", "--coeff", "file"],
        ["cohomology", "k", "-n", "0"],
        ["les", "a2"],
        ["cohomology"],
        ["cohomology", "a2", "--algebra", "a2"],
        ["cohomology", "--split", "a2"],
        ["cohomology", "--quiver", "dualnumbers"],
    ],
)
def test_input_errors_exit_with_two(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 2


def test_les_json():
    result = runner.invoke(app, ["les", "triangular_kkk", "-n", "1", "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["connecting_ranks"][0] == 1
    assert report["middle"] == [1, 0]


def test_double_complex_json():
    result = runner.invoke(app, ["double-complex", "t_k", "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["horizontal_zero"] == "pass"
    for n, total in enumerate(report["total"]):
        assert total == sum(report["columns"][f"{p},{n - p}"] for p in range(n + 1))


def test_homology_csv():
    result = runner.invoke(app, ["homology", "a2", "-n", "1", "--format", "csv"])
    assert result.exit_code == 0
    assert _csv_rows(result.stdout) == [["0", "2"], ["1", "0"]]


def test_ext_csv():
    result = runner.invoke(app, ["ext", "dualnumbers", "-n", "2", "--format", "csv"])
    assert result.exit_code == 0
    assert [d for _, d in _csv_rows(result.stdout)] == ["2", "1", "1"]


def test_verify_one_identifier():
    result = runner.invoke(app, ["verify", "prop-3.3", "-n", "1", "--format", "csv"])
    assert result.exit_code == 0
    rows = _csv_rows(result.stdout)
    assert rows
    assert all(row[0] == "prop-3.3" for row in rows)


def test_verify_unknown_identifier():
    result = runner.invoke(app, ["verify", "bogus"])
    assert result.exit_code == 2


def test_double_complex_without_square_zero():
    result = runner.invoke(app, ["double-complex", "cubic_split", "-n", "1", "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["horizontal_zero"] == "not_applicable"
    assert report["blocks"] == {}


def test_double_complex_text_table():
    result = runner.invoke(app, ["double-complex", "t_k", "-n", "1"])
    assert result.exit_code == 0
    assert "q\\p" in result.stdout
    assert "d_h = 0: pass" in result.stdout
    assert "δ^0 blocks: (0,0) rank 0" in result.stdout


@pytest.mark.slow
def test_verify_all():
    result = runner.invoke(app, ["verify", "all", "-n", "1", "--format", "json"])
    assert result.exit_code == 0
    assert len(json.loads(result.stdout)) == 20
