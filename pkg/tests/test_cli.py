"""Tests for the command-line front end (exit codes and exact output)."""

import json

import pytest

from cli.commands import (
    EXIT_BAD_CYCLE,
    EXIT_BAD_PARAMETER,
    EXIT_INVALID,
    EXIT_NOT_CERTIFIED,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNKNOWN_ID,
)
from core.document import pair_to_document, serialize_document
from spirality_cli import main


@pytest.fixture
def family_file(tmp_path):
    path = tmp_path / "family1.json"
    assert main(["family", "--n", "1", "--out", str(path)]) == EXIT_OK
    return path


@pytest.fixture
def control_file(tmp_path, control_pair):
    path = tmp_path / "control.json"
    path.write_text(serialize_document(pair_to_document(control_pair.manifold, control_pair.surface)), encoding="utf-8")
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_family_document_counts(family_file):
    data = json.loads(family_file.read_text(encoding="utf-8"))
    assert len(data["manifold"]["blocks"]) == 3
    assert len(data["manifold"]["tori"]) == 2
    assert len(data["surface"]["pieces"]) == 3
    assert len(data["surface"]["edges"]) == 4
    assert "gamma" in data["cycles"]


def test_family_output_is_deterministic(capsys):
    first = run(capsys, "family", "--n", "3")
    second = run(capsys, "family", "--n", "3")
    assert first[0] == EXIT_OK
    assert first[1] == second[1]


@pytest.mark.parametrize("n", ["0", "-2"])
def test_family_bad_index(capsys, n):
    code, out, err = run(capsys, "family", "--n", n)
    assert code == EXIT_BAD_PARAMETER
    assert out == ""
    assert "at least 1" in err


def test_inspect_family(capsys, family_file):
    code, out, _ = run(capsys, "inspect", str(family_file))
    assert code == EXIT_OK
    assert "VALIDATION: ok" in out
    assert "governor 3/1; non-separable; rank 2" in out
    assert "closed genus 13" in out


def test_inspect_syntax_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"manifold": {"tori": [{"matrix": [[1, 1], [2 1]]}]}}', encoding="utf-8")
    code, out, err = run(capsys, "inspect", str(path))
    assert code == EXIT_PARSE
    assert "line 1, column" in err


def test_inspect_non_simple_matrix(capsys, family_file):
    data = json.loads(family_file.read_text(encoding="utf-8"))
    data["manifold"]["tori"][0]["matrix"] = [[1, 0], [0, 1]]
    family_file.write_text(json.dumps(data), encoding="utf-8")
    code, out, _ = run(capsys, "inspect", str(family_file))
    assert code == EXIT_INVALID
    assert "simplicity" in out


@pytest.mark.parametrize("start,expected", [("middle", "3/1\n"), ("left", "1/3\n")])
def test_slope(capsys, family_file, start, expected):
    code, out, _ = run(capsys, "slope", str(family_file), "--edge", "c1", "--from", start)
    assert code == EXIT_OK
    assert out == expected


@pytest.mark.parametrize("edge,start", [("zz", "left"), ("c1", "left_m")])
def test_slope_unknown_ids(capsys, family_file, edge, start):
    code, out, _ = run(capsys, "slope", str(family_file), "--edge", edge, "--from", start)
    assert code == EXIT_UNKNOWN_ID
    assert out == ""


def test_slope_on_invalid_document(capsys, family_file):
    data = json.loads(family_file.read_text(encoding="utf-8"))
    data["manifold"]["tori"][0]["matrix"] = [[1, 2], [1, 1]]
    family_file.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(capsys, "slope", str(family_file), "--edge", "c1", "--from", "left")
    assert code == EXIT_INVALID
    assert "simplicity" in err


@pytest.mark.parametrize("argv,expected", [
    (["--name", "gamma"], "9/1\n"),
    (["--cycle", "c1:-,c2:+"], "9/1\n"),
    (["--cycle", "c1:+,c1:−"], "1/1\n"),
    (["--cycle", "c1:-,c2:+,c1_m:-,c2_m:+"], "81/1\n"),
])
def test_spirality(capsys, family_file, argv, expected):
    code, out, _ = run(capsys, "spirality", str(family_file), *argv)
    assert code == EXIT_OK
    assert out == expected


def test_spirality_family_ten(capsys, tmp_path):
    path = tmp_path / "family10.json"
    assert main(["family", "--n", "10", "--out", str(path)]) == EXIT_OK
    code, out, _ = run(capsys, "spirality", str(path), "--name", "gamma")
    assert code == EXIT_OK
    assert out == "441/1\n"


@pytest.mark.parametrize("cycle", ["c1:+,c1_m:+", "c1:+", "c1"])
def test_spirality_bad_cycle(capsys, family_file, cycle):
    code, out, _ = run(capsys, "spirality", str(family_file), "--cycle", cycle)
    assert code == EXIT_BAD_CYCLE
    assert out == ""


def test_spirality_unknown_name(capsys, family_file):
    code, _, _ = run(capsys, "spirality", str(family_file), "--name", "delta")
    assert code == EXIT_UNKNOWN_ID


def test_separable(capsys, family_file, control_file):
    code, out, _ = run(capsys, "separable", str(family_file))
    assert code == EXIT_OK
    assert out == "non-separable: generators = {9/1, 9/1}\n"
    code, out, _ = run(capsys, "separable", str(control_file))
    assert code == EXIT_OK
    assert out == "separable\n"


@pytest.mark.parametrize("n,m,code,line", [
    ("10", "1", EXIT_OK, "CERTIFIED: (2·1+1)² = 9 < 21 = 2·10+1\n"),
    ("2", "1", EXIT_NOT_CERTIFIED, "NOT-CERTIFIED: (2·1+1)² = 9 ≥ 5 = 2·2+1\n"),
    ("3", "3", EXIT_NOT_CERTIFIED, "NOT-CERTIFIED: (2·3+1)² = 49 ≥ 7 = 2·3+1\n"),
])
def test_certify(capsys, n, m, code, line):
    assert run(capsys, "certify", "--n", n, "--m", m)[:2] == (code, line)


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "--n", "442", "--m", "10", "--json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["verdict"] == "certified"
    assert record["lhs"] == "441"
    assert record["rhs"] == "885"


def test_certify_bad_parameter(capsys):
    assert run(capsys, "certify", "--n", "0", "--m", "1")[0] == EXIT_BAD_PARAMETER


def test_sparse(capsys):
    assert run(capsys, "sparse", "--k", "3")[:2] == (EXIT_OK, "1\n10\n442\n")
    assert run(capsys, "sparse", "--k", "1")[:2] == (EXIT_OK, "1\n")
    code, out, _ = run(capsys, "sparse", "--k", "5")
    assert out.splitlines()[-1] == str((2 * 783226 + 1) ** 2 + 1)
    assert run(capsys, "sparse", "--k", "0")[0] == EXIT_BAD_PARAMETER


def test_sparse_certify(capsys):
    code, out, _ = run(capsys, "sparse", "--k", "3", "--certify")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[:3] == ["1", "10", "442"]
    assert len(lines) == 6
    assert all(line.startswith("CERTIFIED: ") for line in lines[3:])


def test_report(capsys, tmp_path, family_file):
    out_path = tmp_path / "reports" / "family1.md"
    code, _, _ = run(capsys, "report", str(family_file), "--out", str(out_path))
    assert code == EXIT_OK
    text = out_path.read_text(encoding="utf-8")
    assert text.startswith("# Horizontal Surface Report")
    assert "| c1 | - | middle | left | 3/1 |" in text
    assert "**Governor**: 3/1" in text
    assert "**Separability**: non-separable" in text
    assert "**Closed genus**: 13" in text
    assert "| gamma | `c1:-,c2:+` | 2 | 9/1 |" in text


def test_report_invalid_document(capsys, family_file):
    data = json.loads(family_file.read_text(encoding="utf-8"))
    data["manifold"]["tori"][0]["matrix"] = [[1, 0], [0, 1]]
    family_file.write_text(json.dumps(data), encoding="utf-8")
    code, out, _ = run(capsys, "report", str(family_file))
    assert code == EXIT_INVALID
    assert "**[simplicity]** `T`" in out
    assert "## Slopes" not in out


def test_verbose_flag_accepted(capsys):
    assert run(capsys, "-v", "sparse", "--k", "2")[:2] == (EXIT_OK, "1\n10\n")


@pytest.mark.parametrize("argv", [
    ("certify", "--n", "x", "--m", "1"),
    ("certify", "--n", "10", "--m", "1.5"),
    ("sparse", "--k", "abc"),
    ("family", "--n", "two"),
])
def test_non_integer_parameter(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_BAD_PARAMETER
    assert out == ""
    assert "must be an integer" in err


def test_report_file_matches_stdout(capsys, tmp_path, family_file):
    out_path = tmp_path / "nested" / "family1.md"
    assert run(capsys, "report", str(family_file), "--out", str(out_path))[:2] == (EXIT_OK, "")
    code, out, _ = run(capsys, "report", str(family_file))
    assert code == EXIT_OK
    assert out_path.read_text(encoding="utf-8") == out


def test_malformed_matrix_row_reports_field_path(capsys, family_file):
    data = json.loads(family_file.read_text(encoding="utf-8"))
    data["manifold"]["tori"][0]["matrix"] = [[1, 1], [2]]
    family_file.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(capsys, "inspect", str(family_file))
    assert code == EXIT_PARSE
    assert out == ""
    assert "manifold.tori.0.matrix" in err
