"""Mamdani inference: fuzzify, fire rules, clip, aggregate.

Firing strength combines antecedent memberships with the AND t-norm
(min by default, product optional); implication clips each rule's
consequent at its firing strength; aggregation is the pointwise max of
all clipped consequents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, NoRuleFiredError
from .hedges import apply_hedge
from .sampled import SampledSet, sample_mf
from .variables import LinguisticVariable, fuzzify


@dataclass(frozen=True)
class InferenceTrace:
    aggregate: SampledSet
    firings: tuple[tuple[int, float], ...]  # (rule id, strength), rule order

    def fired(self) -> list[tuple[int, float]]:
        return [(rid, s) for rid, s in self.firings if s > 0]


def infer(
    variables: list[LinguisticVariable],
    output: LinguisticVariable,
    rules,
    inputs: dict[str, float],
    resolution: int = 1001,
    and_op: str = "min",
) -> InferenceTrace:
    """Run one Mamdani cycle and return the aggregated output set plus trace."""
    if and_op not in ("min", "product"):
        raise ConfigError(f"unknown AND operator {and_op!r}")
    if not rules.rules:
        raise ConfigError("empty rule base")
    var_by_name = {v.name: v for v in variables}
    missing = [r.id for r in rules.rules for name in r.antecedents if name not in var_by_name]
    if missing:
        raise ConfigError(f"rules reference unknown variables: {sorted(set(missing))}")
    for v in variables:
        if v.name not in inputs:
            raise ConfigError(f"no input for variable {v.name!r}")

    memberships = {name: fuzzify(var_by_name[name], x) for name, x in inputs.items() if name in var_by_name}

    out_labels = set(output.term_labels())
    sampled_terms = {
        label: sample_mf(output.term(label).mf, output.domain, resolution).mu
        for label in out_labels
    }

    aggregate = np.zeros(resolution)
    firings: list[tuple[int, float]] = []
    for rule in rules.rules:
        degrees = []
        for name, (hedge, term_label) in rule.antecedents.items():
            table = memberships[name]
            if term_label not in table:
                raise ConfigError(f"rule {rule.id}: unknown term {term_label!r} of {name!r}")
            degrees.append(apply_hedge(hedge, table[term_label]))
        strength = min(degrees) if and_op == "min" else float(np.prod(degrees))
        firings.append((rule.id, float(strength)))
        if strength <= 0:
            continue
        c_hedge, c_label = rule.consequent
        if c_label not in out_labels:
            raise ConfigError(f"rule {rule.id}: unknown output term {c_label!r}")
        curve = sampled_terms[c_label]
        if c_hedge is not None:
            curve = apply_hedge(c_hedge, curve)
        aggregate = np.maximum(aggregate, np.minimum(strength, curve))

    if not any(s > 0 for _, s in firings):
        raise NoRuleFiredError("no rule fired for the given inputs")
    return InferenceTrace(SampledSet(output.domain, aggregate), tuple(firings))
