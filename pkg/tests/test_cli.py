import json

import pytest

from projeval.cli import (
    EXIT_CONFIG,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    RUBRIC_ENV,
    main,
)

TINY = "tests/fixtures/tiny"


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv(RUBRIC_ENV, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_metrics_on_tiny_fixture(capsys, fixtures_dir):
    code, out, _ = run(capsys, "metrics", "--project", str(fixtures_dir / "tiny"))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["metrics_version"] == 1
    assert doc["class_count"] == 3
    assert doc["total_lines"] == 95
    assert "warnings" not in doc


def test_metrics_on_empty_directory(capsys, tmp_path):
    code, out, _ = run(capsys, "metrics", "--project", str(tmp_path))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["class_count"] == 0
    assert doc["total_lines"] == 0


def test_metrics_on_missing_directory(capsys, tmp_path):
    code, _, err = run(capsys, "metrics", "--project", str(tmp_path / "gone"))
    assert code == EXIT_IO
    assert "i/o error" in err


def test_metrics_markdown_format(capsys, fixtures_dir):
    code, out, _ = run(
        capsys, "metrics", "--project", str(fixtures_dir / "tiny"), "--format", "markdown"
    )
    assert code == EXIT_OK
    assert out.startswith("# Metrics report")
    assert "- class_count: 3" in out


def test_what_if_worked_example(capsys):
    code, out, _ = run(capsys, "what-if", "61", "74", "68")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["success_score"] == pytest.approx(63.27, abs=2.0)
    assert doc["aggregate"]["resolution"] == 1001
    assert len(doc["aggregate"]["mu"]) == 1001
    assert doc["fired_rules"]


def test_what_if_out_of_range_score(capsys):
    code, _, err = run(capsys, "what-if", "120", "50", "50")
    assert code == EXIT_USAGE
    assert "usage error" in err


def test_what_if_non_numeric_score(capsys):
    code, _, err = run(capsys, "what-if", "abc", "50", "50")
    assert code == EXIT_USAGE


def test_bad_resolution_rejected(capsys):
    for bad in ("100", "-5", "11"):
        code, _, err = run(capsys, "what-if", "50", "50", "50", "--resolution", bad)
        assert code == EXIT_USAGE
        assert "resolution" in err


def test_missing_rubric_file(capsys):
    code, _, err = run(capsys, "what-if", "50", "50", "50", "--rubric", "/nope.yaml")
    assert code == EXIT_IO


def test_malformed_rubric_file(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("rubric_version: 1\nvariables: []\n")
    code, _, err = run(capsys, "what-if", "50", "50", "50", "--rubric", str(bad))
    assert code == EXIT_CONFIG
    assert "config error" in err


def test_rubric_env_variable_is_honored(capsys, tmp_path, monkeypatch):
    bad = tmp_path / "bad.yaml"
    bad.write_text("not: a rubric\n")
    monkeypatch.setenv(RUBRIC_ENV, str(bad))
    code, _, _ = run(capsys, "what-if", "50", "50", "50")
    assert code == EXIT_CONFIG


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "what-if", "61", "74", "68", "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["success_score"] == pytest.approx(63.27, abs=2.0)


def test_what_if_markdown_format(capsys):
    code, out, _ = run(capsys, "what-if", "61", "74", "68", "--format", "markdown")
    assert code == EXIT_OK
    assert out.startswith("# Project evaluation report")
    assert "- success score:" in out


def test_evaluate_matches_pinned_report(capsys, fixtures_dir):
    # byte-for-byte against the reviewed report committed next to the fixture
    code, out, _ = run(capsys, "evaluate", "--project", TINY)
    assert code == EXIT_OK
    expected = (fixtures_dir / "tiny" / "expected_evaluate.json").read_text()
    assert out == expected


def test_evaluate_is_deterministic(capsys, fixtures_dir):
    _, first, _ = run(capsys, "evaluate", "--project", str(fixtures_dir / "tiny"))
    _, second, _ = run(capsys, "evaluate", "--project", str(fixtures_dir / "tiny"))
    assert first == second


def test_json_reports_round_trip(capsys, fixtures_dir):
    _, out, _ = run(capsys, "evaluate", "--project", str(fixtures_dir / "tiny"))
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    assert set(doc) >= {"success_score", "label", "fired_rules", "aggregate", "criterion_scores"}


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, )[0] == EXIT_USAGE


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "what-if", "50", "50", "50", "--wat")
    assert code == EXIT_USAGE
