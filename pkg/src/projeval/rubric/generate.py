"""Weight-driven rule generation.

Builds an exhaustive rule base over the product of the criteria's term
sets.  Term sets are ordered worst to best; each antecedent contributes
its normalized term rank, and the consequent is the weight-weighted mean
of those ranks mapped onto the output term set (round half up).
"""

from __future__ import annotations

from itertools import product

from ..errors import ConfigError
from ..fuzzy.variables import LinguisticVariable
from .model import WEIGHT_VALUE, Criterion, Rule, RuleBase


def consequent_index(ranks: list[float], weights: list[float], n_out: int) -> int:
    """Map normalized antecedent ranks in [0, 1] to an output term index."""
    mean = sum(w * r for w, r in zip(weights, ranks)) / sum(weights)
    scaled = mean * (n_out - 1)
    return int(scaled + 0.5)  # round half up; scaled is never negative


def generate_weighted_rules(
    criteria: list[Criterion], output: LinguisticVariable
) -> RuleBase:
    if not criteria:
        raise ConfigError("cannot generate rules from an empty criteria list")
    weights = [float(WEIGHT_VALUE[c.weight]) for c in criteria]
    term_lists = [c.variable.term_labels() for c in criteria]
    n_out = len(output.terms)
    out_labels = output.term_labels()

    rules = []
    for rid, combo in enumerate(product(*(range(len(t)) for t in term_lists)), start=1):
        ranks = [
            idx / (len(terms) - 1) if len(terms) > 1 else 1.0
            for idx, terms in zip(combo, term_lists)
        ]
        consequent = out_labels[consequent_index(ranks, weights, n_out)]
        antecedents = {
            c.variable.name: (None, term_lists[i][combo[i]])
            for i, c in enumerate(criteria)
        }
        rules.append(Rule(rid, antecedents, (None, consequent)))
    return RuleBase(tuple(rules), output)
