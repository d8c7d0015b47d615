import numpy as np
import pytest

from projeval.errors import EmptyAggregateError
from projeval.fuzzy import MembershipFunction, SampledSet, defuzzify_centroid, sample_mf

from conftest import random_aggregate_spec, random_sampled_set, sample_aggregate

DOMAIN = (0.0, 100.0)
RES = 1001
STEP = 0.1


def brute_force_centroid(mu: np.ndarray, domain) -> float:
    """Independent oracle: plain-Python accumulation over the samples."""
    num, den = 0.0, 0.0
    n = len(mu)
    for i in range(n):
        x = domain[0] + (domain[1] - domain[0]) * i / (n - 1)
        num += x * mu[i]
        den += mu[i]
    return num / den


def test_symmetric_triangle_centers():
    s = sample_mf(MembershipFunction.triangular(20, 50, 80), DOMAIN, RES)
    assert defuzzify_centroid(s) == pytest.approx(50.0, abs=STEP)


def test_rectangular_plateau_centers():
    mu = np.zeros(RES)
    xs = np.linspace(*DOMAIN, RES)
    mu[(xs >= 20) & (xs <= 40)] = 1.0
    assert defuzzify_centroid(SampledSet(DOMAIN, mu)) == pytest.approx(30.0, abs=STEP)


def test_empty_aggregate_rejected():
    with pytest.raises(EmptyAggregateError):
        defuzzify_centroid(SampledSet(DOMAIN, np.zeros(RES)))


def test_result_stays_inside_support_hull():
    rng = np.random.default_rng(3)
    for _ in range(50):
        s = random_sampled_set(rng)
        c = defuzzify_centroid(s)
        xs = s.xs[s.mu > 0]
        assert xs.min() <= c <= xs.max()
        assert DOMAIN[0] <= c <= DOMAIN[1]


def test_matches_brute_force_oracle_at_10x_resolution():
    rng = np.random.default_rng(11)
    for _ in range(50):
        spec = random_aggregate_spec(rng)
        coarse = defuzzify_centroid(sample_aggregate(spec, RES))
        fine = sample_aggregate(spec, 10 * (RES - 1) + 1)
        assert coarse == pytest.approx(brute_force_centroid(fine.mu, DOMAIN), abs=0.5)
