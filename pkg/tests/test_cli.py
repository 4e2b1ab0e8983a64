import json

import pytest
from click.testing import CliRunner

from innerdist import classify, config, core
from innerdist.cli import main


def _invoke(*args):
    return CliRunner().invoke(main, list(args))


@pytest.mark.parametrize(
    "args, want",
    [
        (["dist", "1", "6", "6"], "1"),
        (["max-distance", "8"], "3"),
        (["enumerate-paths", "6", "--count-only"], "10"),
        (["enumerate-paths", "8", "3", "--count-only", "--start", "2"], "18"),
        (["enumerate-cycles", "6", "--count-only"], "6"),
        (["mid-count", "6"], "672"),
        (["mid-count", "6", "--method", "constructive"], "672"),
        (["mid-count", "6", "--method", "brute"], "672"),
    ],
)
def test_scalar_commands(args, want):
    result = _invoke(*args)
    assert result.exit_code == 0, result.output
    assert result.output.strip() == want


def test_json_output():
    result = _invoke("--format", "json", "mid-count", "5")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["schema"] == "1"
    assert (data["n"], data["k"], data["count"]) == (5, 2, 20)


def test_enumerate_paths_json():
    result = _invoke("--format", "json", "enumerate-paths", "6")
    data = json.loads(result.output)
    assert (data["n"], data["k"]) == (6, 2)
    assert len(data["rows"]) == 10
    first = data["rows"][0]
    assert first["row"][0] == 1
    assert len(first["ext_diff"]) == 5


def test_enumerate_paths_csv():
    result = _invoke("--format", "csv", "enumerate-cycles", "8")
    lines = result.output.splitlines()
    assert lines[0] == "row,ext_diff,h"
    assert len(lines) == 1 + 10


def test_classify_row():
    result = _invoke("classify-row", "1 0 -1 -1 0 | 1", "6")
    assert result.exit_code == 0, result.output
    assert "variant=cycle_rotation" in result.output
    assert "offset=5" in result.output


def test_classify_row_leading_minus():
    result = _invoke("--format", "json", "classify-row", "--", "-1 -1 0 1 1 | 0", "6")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["variant"] == "cycle_rotation"
    assert data["row"] == [-1, -1, 0, 1, 1, 0]


def test_classify_row_rejects():
    result = _invoke("classify-row", "6: 1 1 1 1 1 | 1")
    assert result.exit_code == 2
    assert "not a maximum-inner-distance path" in result.output


def test_inner_distance(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("2 6\n1 4 2 6 3 5\n4 1 5 3 6 2\n")
    result = _invoke("inner-distance", str(path))
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "2"


def test_inner_distance_stdin():
    result = CliRunner().invoke(
        main, ["inner-distance", "-"], input="3 3\n1 2 3\n2 3 1\n3 1 2\n"
    )
    assert result.output.strip() == "1"


def test_inner_distance_short_rows(tmp_path):
    path = tmp_path / "short.txt"
    path.write_text("2 6\n1 2 3\n2 3 1\n")
    result = _invoke("inner-distance", str(path))
    assert result.exit_code == 2
    assert "expected 6 cells, got 3" in result.output


def test_inner_distance_invalid(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 3\n1 1 2\n2 3 1\n")
    result = _invoke("inner-distance", str(path))
    assert result.exit_code == 2
    assert "row_repeat" in result.output


def test_construct_odd():
    args = ["--format", "json", "construct", "--odd", "1", "2", "2", "-n", "5"]
    result = _invoke(*args)
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    L = core.validate(data["grid"])
    assert core.inner_distance(L) == data["inner_distance"] == 2


def test_construct_row_product():
    result = _invoke("construct", "--row-product", "6: 3 4 4 3 2", "6: 3 2 2 3 4")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[:2] == ["6 6", "1 4 2 6 3 5"]
    assert [int(line.split()[0]) for line in lines[1:]] == [1, 4, 6, 2, 5, 3]


def test_construct_circulant():
    result = _invoke("construct", "--circulant", "1 3 5 2 4")
    assert result.output.splitlines()[:3] == ["5 5", "1 3 5 2 4", "4 1 3 5 2"]


@pytest.mark.parametrize(
    "args",
    [
        ["construct"],
        ["construct", "--circulant", "1 2 3", "--back-circulant", "1 2 3"],
        ["construct", "--odd", "1", "2", "2"],
        ["construct", "--circulant", "1 1 2"],
        ["max-distance", "2"],
        ["dist", "0", "1", "5"],
        ["verify", "--n-range", "9..6"],
    ],
)
def test_usage_errors(args):
    assert _invoke(*args).exit_code == 2


def test_census_json():
    result = _invoke("--format", "json", "census", "5", "--max-k-only")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["per_k"] == {"2": 20}
    assert data["structure"]["closed_form"] == 20


def test_census_csv():
    result = _invoke("--format", "csv", "census", "4")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "n,k,count,method"
    assert lines[1:3] == ["4,1,576,brute-force", "4,2,0,brute-force"]


def test_verify(monkeypatch):
    monkeypatch.setitem(config, "random_cases", 50)
    result = _invoke("verify", "--n-range", "6..6")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].startswith("PASS P-formula:")
    assert lines[-1].startswith("PASS roundtrip: seed=")


def test_verify_seed(monkeypatch):
    monkeypatch.setitem(config, "random_cases", 50)
    outputs = [
        _invoke("--seed", seed, "verify", "--n-range", "5..6").output
        for seed in ("1", "1", "999")
    ]
    assert "PASS roundtrip: seed=1: 25 rows and squares" in outputs[0]
    assert outputs[0] == outputs[1]
    assert "seed=999" in outputs[2]


def test_verify_failure(monkeypatch):
    monkeypatch.setitem(config, "random_cases", 50)
    generate_paths = classify.generate_paths
    monkeypatch.setattr(classify, "generate_paths", lambda n: generate_paths(n)[1:])
    result = _invoke("verify", "--n-range", "6..6")
    assert result.exit_code == 1
    assert "FAIL P-formula:" in result.output
