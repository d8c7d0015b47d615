"""Command-line front end: metrics, evaluate, what-if, serve.

Exit codes are a stable contract: 0 success, 1 usage error, 2 rubric or
schema error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ConfigError, EmptyAggregateError, NoRuleFiredError
from .metrics import compute_metrics, extract_classes, scan_tree
from .normalize import score_criterion
from .rubric import (
    EvaluationResult,
    ProjectScores,
    RubricConfig,
    evaluate_project,
    load_reference_rubric,
    load_rubric,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_IO = 3

RUBRIC_ENV = "PROJEVAL_RUBRIC"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="projeval", description="Fuzzy evaluation of student software projects")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, rubric=True):
        if rubric:
            p.add_argument("--rubric", type=Path, default=None, help=f"rubric config (default: ${RUBRIC_ENV} or the shipped reference)")
        p.add_argument("--output", type=Path, default=None, help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "markdown"), default="json")
        p.add_argument("--resolution", type=int, default=1001)

    p_metrics = sub.add_parser("metrics", help="extract raw source-tree metrics")
    p_metrics.add_argument("--project", type=Path, required=True)
    add_common(p_metrics, rubric=False)

    p_eval = sub.add_parser("evaluate", help="full pipeline: scan, normalize, infer")
    p_eval.add_argument("--project", type=Path, required=True)
    add_common(p_eval)

    p_what = sub.add_parser("what-if", help="pure inference from three criterion scores")
    p_what.add_argument("clean_code", type=float)
    p_what.add_argument("functionality", type=float)
    p_what.add_argument("inheritance", type=float)
    add_common(p_what)

    p_serve = sub.add_parser("serve", help="run the HTTP evaluation service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--rubric-store", type=Path, default=Path("rubrics.json"))
    return parser


def _check_resolution(resolution: int):
    if resolution < 101 or resolution % 2 == 0:
        raise UsageError("--resolution must be odd and >= 101")


def _load_rubric_config(path: Path | None) -> RubricConfig:
    if path is None:
        env = os.environ.get(RUBRIC_ENV)
        if env:
            path = Path(env)
    if path is None:
        return load_reference_rubric()
    if not path.exists():
        raise IOError(f"rubric file not found: {path}")
    return load_rubric(path)


def result_to_dict(result: EvaluationResult, criterion_scores=None, warnings=None) -> dict:
    doc = {
        "success_score": result.success_score,
        "label": result.label,
        "fired_rules": [[rid, strength] for rid, strength in result.fired_rules],
        "aggregate": {
            "domain": list(result.aggregate.domain),
            "resolution": result.aggregate.resolution,
            "mu": [float(v) for v in result.aggregate.mu],
        },
    }
    if criterion_scores is not None:
        doc["criterion_scores"] = criterion_scores
    if warnings:
        doc["warnings"] = list(warnings)
    return doc


def result_to_markdown(doc: dict, project: str | None = None) -> str:
    lines = ["# Project evaluation report", ""]
    if project:
        lines += ["## Project", "", f"- source: `{project}`", ""]
    if "criterion_scores" in doc:
        lines += ["## Criterion scores", ""]
        lines += [f"- {name}: {value:.2f}" for name, value in doc["criterion_scores"].items()]
        lines.append("")
    lines += ["## Fired rules", ""]
    lines += [f"- rule {rid}: strength {strength:.4f}" for rid, strength in doc["fired_rules"]]
    lines += ["", "## Result", "", f"- success score: {doc['success_score']:.2f}", f"- label: {doc['label']}"]
    for warning in doc.get("warnings", []):
        lines.append(f"- warning: {warning}")
    lines.append("")
    return "\n".join(lines)


def _emit(text: str, output: Path | None):
    if output is None:
        sys.stdout.write(text + "\n")
    else:
        output.write_text(text + "\n", encoding="utf-8")


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def run_metrics(args) -> int:
    result = scan_tree(args.project)
    classes, warnings = extract_classes(result.units)
    report = compute_metrics(result.units, classes)
    doc = {"metrics_version": 1, **report.as_dict()}
    if result.warnings or warnings:
        doc["warnings"] = result.warnings + warnings
    if args.format == "json":
        _emit(_dump_json(doc), args.output)
    else:
        lines = ["# Metrics report", ""]
        lines += [f"- {k}: {v}" for k, v in doc.items() if k != "warnings"]
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _pipeline_scores(project: Path, rubric: RubricConfig):
    result = scan_tree(project)
    classes, parse_warnings = extract_classes(result.units)
    report = compute_metrics(result.units, classes)
    scores = {
        c.name: score_criterion(report, rubric.profile_for(c.name)) for c in rubric.criteria
    }
    return scores, result.warnings + parse_warnings


def run_evaluate(args) -> int:
    _check_resolution(args.resolution)
    rubric = _load_rubric_config(args.rubric)
    scores, warnings = _pipeline_scores(args.project, rubric)
    project_scores = ProjectScores(**scores)
    try:
        result = evaluate_project(project_scores, list(rubric.criteria), rubric.rule_base, args.resolution)
    except NoRuleFiredError as exc:
        print(f"error: {exc}; criterion scores were {scores}", file=sys.stderr)
        return EXIT_CONFIG
    doc = result_to_dict(result, criterion_scores=scores, warnings=warnings)
    if args.format == "json":
        _emit(_dump_json(doc), args.output)
    else:
        _emit(result_to_markdown(doc, str(args.project)), args.output)
    return EXIT_OK


def run_what_if(args) -> int:
    _check_resolution(args.resolution)
    for value in (args.clean_code, args.functionality, args.inheritance):
        if not 0 <= value <= 100:
            raise UsageError("scores must lie in [0, 100]")
    rubric = _load_rubric_config(args.rubric)
    scores = ProjectScores(args.clean_code, args.functionality, args.inheritance)
    try:
        result = evaluate_project(scores, list(rubric.criteria), rubric.rule_base, args.resolution)
    except NoRuleFiredError as exc:
        print(f"error: {exc}; criterion scores were {scores.as_dict()}", file=sys.stderr)
        return EXIT_CONFIG
    doc = result_to_dict(result)
    if args.format == "json":
        _emit(_dump_json(doc), args.output)
    else:
        _emit(result_to_markdown(doc), args.output)
    return EXIT_OK


def run_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.rubric_store)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handlers = {
            "metrics": run_metrics,
            "evaluate": run_evaluate,
            "what-if": run_what_if,
            "serve": run_serve,
        }
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, EmptyAggregateError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IOError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
