from pathlib import Path

import numpy as np
import pytest

from projeval.fuzzy import MembershipFunction, SampledSet, sample_mf
from projeval.rubric import load_reference_rubric

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def reference():
    return load_reference_rubric()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_mf(rng: np.random.Generator, domain=(0.0, 100.0)) -> MembershipFunction:
    lo, hi = domain
    if rng.random() < 0.5:
        a, b, c = np.sort(rng.uniform(lo, hi, 3))
        return MembershipFunction.triangular(a, b, c)
    a, b, c, d = np.sort(rng.uniform(lo, hi, 4))
    return MembershipFunction.trapezoidal(a, b, c, d)


def random_aggregate_spec(rng: np.random.Generator, domain=(0.0, 100.0)):
    """Analytic description of an aggregate: clipped MFs combined by max."""
    return [(random_mf(rng, domain), rng.uniform(0.1, 1.0)) for _ in range(rng.integers(1, 4))]


def sample_aggregate(spec, resolution: int, domain=(0.0, 100.0)) -> SampledSet:
    mu = np.zeros(resolution)
    for mf, clip in spec:
        mu = np.maximum(mu, np.minimum(clip, sample_mf(mf, domain, resolution).mu))
    return SampledSet(domain, mu)


def random_sampled_set(
    rng: np.random.Generator, resolution=501, domain=(0.0, 100.0)
) -> SampledSet:
    """Max of a few randomly clipped random MFs: shaped like real aggregates."""
    return sample_aggregate(random_aggregate_spec(rng, domain), resolution, domain)
