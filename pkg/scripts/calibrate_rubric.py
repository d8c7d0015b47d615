"""Calibrate the reference rubric's membership-function breakpoints.

The term sets and domains are fixed; the breakpoints are not.  We
parameterize each variable by its term peaks p1 < ... < pk on [0, 100]:
edge terms are shoulders (trapezoids saturating at the domain ends),
interior terms are triangles spanning the neighbouring peaks.  That
guarantees full coverage by construction.

A global search (differential evolution, fixed seed) fits the peaks so
the pipeline reproduces the four published reference points:

    (61, 74, 68) -> 63.27     (primary target, weighted hard)
    (100, 82, 84) -> 92
    (67, 34, 100) -> 64
    (100, 63, 100) -> 91

plus sanity anchors: (100,100,100) labels Very Good, (0,0,0) Very Poor,
and the 63.27 case has nonzero Good membership.

Run:  python scripts/calibrate_rubric.py [--write]
With --write the calibrated config replaces src/projeval/data/reference_rubric.yaml.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np
import yaml
from scipy.optimize import differential_evolution

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from projeval.fuzzy import FuzzySet, LinguisticVariable, MembershipFunction
from projeval.rubric import ProjectScores, Rule, RuleBase, best_label, evaluate_project
from projeval.rubric.model import Criterion

DOMAIN = (0.0, 100.0)
RESOLUTION = 1001

RULE_TABLE = [
    # (clean, functionality, inheritance) -> success
    ("High", "High", "High", "Very Good"),
    ("Medium", "High", "High", "Very Good"),
    ("Low", "High", "High", "Good"),
    ("High", "Medium", "Medium", "Good"),
    ("Medium", "Medium", "Medium", "Average"),
    ("Low", "Medium", "Medium", "Average"),
    ("High", "Low", "Low", "Poor"),
    ("Medium", "Low", "Low", "Very Poor"),
    ("Low", "Low", "Low", "Very Poor"),
    ("High", "Very Low", "High", "Average"),
    ("Medium", "Very Low", "High", "Poor"),
    ("Low", "Very Low", "High", "Poor"),
    ("High", "High", "Medium", "Very Good"),
    ("Medium", "High", "Medium", "Good"),
    ("Low", "High", "Medium", "Good"),
    ("High", "Medium", "Low", "Average"),
    ("Medium", "Medium", "Low", "Average"),
    ("Low", "Medium", "Low", "Poor"),
    ("High", "Low", "High", "Average"),
    ("Medium", "Low", "High", "Average"),
    ("Low", "Low", "High", "Poor"),
    ("High", "Very Low", "Medium", "Poor"),
    ("Medium", "Very Low", "Medium", "Poor"),
    ("Low", "Very Low", "Medium", "Very Poor"),
    ("High", "High", "Low", "Good"),
    ("Medium", "High", "Low", "Average"),
    ("Low", "High", "Low", "Poor"),
    ("High", "Medium", "High", "Very Good"),
    ("Medium", "Medium", "High", "Good"),
    ("Low", "Medium", "High", "Average"),
    ("High", "Low", "Medium", "Average"),
    ("Medium", "Low", "Medium", "Average"),
    ("Low", "Low", "Medium", "Poor"),
    ("High", "Very Low", "Low", "Poor"),
    ("Medium", "Very Low", "Low", "Poor"),
    ("Low", "Very Low", "Low", "Very Poor"),
]

TERM_SETS = {
    "clean_code": ["Low", "Medium", "High"],
    "functionality": ["Very Low", "Low", "Medium", "High"],
    "inheritance": ["Low", "Medium", "High"],
    "project_success": ["Very Poor", "Poor", "Average", "Good", "Very Good"],
}

TARGETS = [
    # (inputs, target, weight, slack): error inside +-slack is free
    ((61, 74, 68), 63.27, 25.0, 0.0),   # primary worked example, heavy weight
    ((100, 82, 84), 92.0, 4.0, 2.0),
    ((67, 34, 100), 64.0, 4.0, 2.0),
    ((100, 63, 100), 91.0, 4.0, 2.0),
]

UNIFORMITY_WEIGHT = 0.02  # pulls peaks toward an evenly spaced partition


def grid_variable(name: str, labels: list[str], peaks: np.ndarray) -> LinguisticVariable:
    """Shoulder/triangle partition from sorted term peaks."""
    lo, hi = DOMAIN
    terms = []
    for i, label in enumerate(labels):
        if i == 0:
            mf = MembershipFunction.trapezoidal(lo, lo, peaks[0], peaks[1])
        elif i == len(labels) - 1:
            mf = MembershipFunction.trapezoidal(peaks[-2], peaks[-1], hi, hi)
        else:
            mf = MembershipFunction.triangular(peaks[i - 1], peaks[i], peaks[i + 1])
        terms.append(FuzzySet(label, mf))
    return LinguisticVariable(name, DOMAIN, tuple(terms))


def split_params(x: np.ndarray) -> dict[str, np.ndarray]:
    sizes = {name: len(labels) for name, labels in TERM_SETS.items()}
    out, i = {}, 0
    for name, k in sizes.items():
        out[name] = np.sort(np.clip(x[i : i + k], 0.0, 100.0))
        i += k
    return out


def build_rubric(x: np.ndarray):
    peaks = split_params(x)
    for arr in peaks.values():
        if np.any(np.diff(arr) < 2.0):  # keep peaks apart so triangles are sane
            return None
    variables = {
        name: grid_variable(name, TERM_SETS[name], peaks[name])
        for name in ("clean_code", "functionality", "inheritance")
    }
    output = grid_variable("project_success", TERM_SETS["project_success"], peaks["project_success"])
    criteria = [Criterion(name, variables[name]) for name in ("clean_code", "functionality", "inheritance")]
    rules = [
        Rule(
            rid,
            {
                "clean_code": (None, cc),
                "functionality": (None, fn),
                "inheritance": (None, inh),
            },
            (None, out),
        )
        for rid, (cc, fn, inh, out) in enumerate(RULE_TABLE, start=1)
    ]
    return criteria, RuleBase(tuple(rules), output)


def objective(x: np.ndarray) -> float:
    built = build_rubric(x)
    if built is None:
        return 1e6
    criteria, rule_base = built
    loss = 0.0
    for (cc, fn, inh), target, weight, slack in TARGETS:
        try:
            result = evaluate_project(ProjectScores(cc, fn, inh), criteria, rule_base, 251)
        except Exception:
            return 1e6
        err = max(0.0, abs(result.success_score - target) - slack)
        loss += weight * err**2
    for name, arr in split_params(x).items():
        uniform = np.linspace(0.0, 100.0, len(arr))
        loss += UNIFORMITY_WEIGHT * float(np.sum((arr - uniform) ** 2))
    output = rule_base.output
    # anchor labels at the extremes and Good membership at the worked example
    top = evaluate_project(ProjectScores(100, 100, 100), criteria, rule_base, 251)
    bottom = evaluate_project(ProjectScores(0, 0, 0), criteria, rule_base, 251)
    if best_label(output, top.success_score) != "Very Good":
        loss += 500.0
    if best_label(output, bottom.success_score) != "Very Poor":
        loss += 500.0
    worked = evaluate_project(ProjectScores(61, 74, 68), criteria, rule_base, 251)
    if output.term("Good").mf(worked.success_score) <= 0:
        loss += 500.0
    return loss


def emit_yaml(x: np.ndarray) -> dict:
    peaks = split_params(x)

    def var_doc(name: str) -> dict:
        v = grid_variable(name, TERM_SETS[name], np.round(peaks[name], 1))
        return {
            "name": name,
            "domain": [0, 100],
            "terms": [
                {"label": t.label, "kind": t.mf.kind, "points": [float(p) for p in t.mf.params]}
                for t in v.terms
            ],
        }

    return {
        "rubric_version": 1,
        "variables": [var_doc(n) for n in ("clean_code", "functionality", "inheritance")],
        "output": var_doc("project_success"),
        "criteria": [
            {"name": "clean_code", "weight": "Medium"},
            {"name": "functionality", "weight": "High"},
            {"name": "inheritance", "weight": "Low"},
        ],
        "rules": {
            "exhaustive": True,
            "items": [
                {"id": rid, "when": {"clean_code": cc, "functionality": fn, "inheritance": inh}, "then": out}
                for rid, (cc, fn, inh, out) in enumerate(RULE_TABLE, start=1)
            ],
        },
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--write", action="store_true", help="write the calibrated config")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--maxiter", type=int, default=200)
    args = parser.parse_args()

    bounds = []
    for name, labels in TERM_SETS.items():
        bounds += [(0.0, 100.0)] * len(labels)

    result = differential_evolution(
        objective,
        bounds,
        seed=args.seed,
        maxiter=args.maxiter,
        popsize=20,
        tol=1e-8,
        polish=True,
        updating="deferred",
        workers=-1,
    )
    x = result.x
    print(f"loss = {result.fun:.4f}")
    for name, arr in split_params(x).items():
        print(f"{name}: peaks {np.round(arr, 1)}")

    built = build_rubric(np.concatenate([np.round(split_params(x)[n], 1) for n in TERM_SETS]))
    criteria, rule_base = built
    for (cc, fn, inh), target, _, _s in TARGETS:
        r = evaluate_project(ProjectScores(cc, fn, inh), criteria, rule_base, RESOLUTION)
        print(f"({cc:>5}, {fn:>5}, {inh:>5}) -> {r.success_score:6.2f}  target {target}  label {r.label}")

    if args.write:
        out_path = Path(__file__).resolve().parents[1] / "src" / "projeval" / "data" / "reference_rubric.yaml"
        with open(out_path, "w", encoding="utf-8") as fh:
            yaml.safe_dump(emit_yaml(x), fh, sort_keys=False)
        print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
