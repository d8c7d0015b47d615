"""Discretized fuzzy sets over a uniform sample grid.

Aggregation and centroid defuzzification operate on these; the grid is
shared between all sets taking part in one inference run.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyAggregateError


@dataclass(frozen=True)
class SampledSet:
    domain: tuple[float, float]
    mu: np.ndarray = field(repr=False)

    def __post_init__(self):
        lo, hi = self.domain
        if hi <= lo:
            raise ValueError("domain must be a nondegenerate interval")
        mu = np.asarray(self.mu, dtype=float)
        if mu.ndim != 1 or mu.size < 2:
            raise ValueError("need at least two samples")
        if np.any(mu < 0) or np.any(mu > 1):
            raise ValueError("membership samples must lie in [0, 1]")
        mu = mu.copy()
        mu.flags.writeable = False
        object.__setattr__(self, "domain", (float(lo), float(hi)))
        object.__setattr__(self, "mu", mu)

    @property
    def resolution(self) -> int:
        return int(self.mu.size)

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], self.mu.size)

    @property
    def step(self) -> float:
        return (self.domain[1] - self.domain[0]) / (self.mu.size - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SampledSet):
            return NotImplemented
        return self.domain == other.domain and np.array_equal(self.mu, other.mu)


def sample_mf(mf, domain: tuple[float, float], resolution: int) -> SampledSet:
    xs = np.linspace(domain[0], domain[1], resolution)
    return SampledSet(domain, mf.evaluate(xs))


def _check_compatible(a: SampledSet, b: SampledSet) -> None:
    if a.domain != b.domain or a.resolution != b.resolution:
        raise ValueError("sets must share domain and resolution")


def set_union(a: SampledSet, b: SampledSet) -> SampledSet:
    _check_compatible(a, b)
    return SampledSet(a.domain, np.maximum(a.mu, b.mu))


def set_intersection(a: SampledSet, b: SampledSet) -> SampledSet:
    _check_compatible(a, b)
    return SampledSet(a.domain, np.minimum(a.mu, b.mu))


def alpha_cut(s: SampledSet, alpha: float) -> list[tuple[float, float]]:
    """Crisp subset {x : mu(x) >= alpha} as disjoint closed intervals.

    alpha must satisfy 0 < alpha <= 1; the cut at 0 is undefined.
    """
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    xs = s.xs
    keep = s.mu >= alpha
    intervals: list[tuple[float, float]] = []
    start = None
    for i, flag in enumerate(keep):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            intervals.append((float(xs[start]), float(xs[i - 1])))
            start = None
    if start is not None:
        intervals.append((float(xs[start]), float(xs[-1])))
    return intervals


def defuzzify_centroid(s: SampledSet) -> float:
    """Discrete centroid sum(x*mu)/sum(mu) of the sampled curve."""
    total = float(np.sum(s.mu))
    if total == 0.0:
        raise EmptyAggregateError("cannot defuzzify an all-zero set")
    return float(np.dot(s.xs, s.mu) / total)
