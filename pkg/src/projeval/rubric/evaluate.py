"""Project evaluation: crisp criterion scores in, success score out."""

from __future__ import annotations

from ..fuzzy.inference import infer
from ..fuzzy.sampled import defuzzify_centroid
from .model import Criterion, EvaluationResult, ProjectScores, RuleBase


def evaluate_project(
    scores: ProjectScores,
    criteria: list[Criterion],
    rules: RuleBase,
    resolution: int = 1001,
) -> EvaluationResult:
    inputs = {}
    for criterion in criteria:
        inputs[criterion.variable.name] = getattr(scores, criterion.name)
    trace = infer([c.variable for c in criteria], rules.output, rules, inputs, resolution)
    score = defuzzify_centroid(trace.aggregate)
    return EvaluationResult(
        success_score=score,
        fired_rules=tuple(trace.fired()),
        aggregate=trace.aggregate,
        label=best_label(rules.output, score),
    )


def best_label(output, score: float) -> str:
    """Output term with maximal membership at the score, ties to the later
    (better) term; term sets are ordered worst to best."""
    best, best_mu = output.terms[0].label, -1.0
    for term in output.terms:
        mu = term.mf(score)
        if mu >= best_mu:
            best, best_mu = term.label, mu
    return best
