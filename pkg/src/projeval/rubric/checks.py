"""Consistency diagnostics for rule bases.

These report problems instead of fixing them; an instructor-supplied (or
published) table stays exactly as written.
"""

from __future__ import annotations

from itertools import combinations

from ..fuzzy.variables import LinguisticVariable
from .model import RuleBase


def dominance_violations(
    rule_base: RuleBase, variables: list[LinguisticVariable]
) -> list[tuple[int, int]]:
    """Pairs (better_rule_id, worse_rule_id) where the first rule's
    antecedents dominate the second's term-wise (term sets are ordered
    worst to best) yet its consequent is strictly worse."""
    ranks = {v.name: {t: i for i, t in enumerate(v.term_labels())} for v in variables}
    out_rank = {t: i for i, t in enumerate(rule_base.output.term_labels())}

    def vec(rule):
        return [ranks[name][rule.antecedents[name][1]] for name in ranks]

    violations = []
    for a, b in combinations(rule_base.rules, 2):
        ra, rb = vec(a), vec(b)
        ca, cb = out_rank[a.consequent[1]], out_rank[b.consequent[1]]
        if all(x >= y for x, y in zip(ra, rb)) and ca < cb:
            violations.append((a.id, b.id))
        elif all(x <= y for x, y in zip(ra, rb)) and ca > cb:
            violations.append((b.id, a.id))
    return violations
