"""Linguistic variables: named term sets of fuzzy sets over a numeric domain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .membership import MembershipFunction

COVERAGE_PROBE = 2001  # grid used to check that terms jointly cover the domain


@dataclass(frozen=True)
class FuzzySet:
    label: str
    mf: MembershipFunction


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    domain: tuple[float, float]
    terms: tuple[FuzzySet, ...]

    def __post_init__(self):
        lo, hi = self.domain
        if hi <= lo:
            raise ValueError(f"{self.name}: empty domain")
        object.__setattr__(self, "domain", (float(lo), float(hi)))
        object.__setattr__(self, "terms", tuple(self.terms))
        labels = [t.label for t in self.terms]
        if len(set(labels)) != len(labels):
            raise ValueError(f"{self.name}: duplicate term labels")
        for t in self.terms:
            s_lo, s_hi = t.mf.support
            if s_lo < lo or s_hi > hi:
                raise ValueError(
                    f"{self.name}/{t.label}: breakpoints outside domain [{lo}, {hi}]"
                )
        xs = np.linspace(lo, hi, COVERAGE_PROBE)
        peak = np.zeros_like(xs)
        for t in self.terms:
            peak = np.maximum(peak, t.mf.evaluate(xs))
        if np.any(peak <= 0):
            gap = xs[np.argmin(peak)]
            raise ValueError(f"{self.name}: no term covers x={gap:.2f}")

    def term(self, label: str) -> FuzzySet:
        for t in self.terms:
            if t.label == label:
                return t
        raise KeyError(f"{self.name}: unknown term {label!r}")

    def term_labels(self) -> list[str]:
        return [t.label for t in self.terms]

    def clamp(self, x: float) -> float:
        lo, hi = self.domain
        return min(max(float(x), lo), hi)


def fuzzify(v: LinguisticVariable, x: float) -> dict[str, float]:
    """Membership degree of the (clamped) crisp value in every term."""
    x = v.clamp(x)
    return {t.label: t.mf(x) for t in v.terms}
