import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from projeval.fuzzy import MembershipFunction, evaluate_mf

tri = MembershipFunction.triangular
trap = MembershipFunction.trapezoidal


def test_triangular_peak():
    assert tri(0, 50, 100)(50) == 1.0


def test_triangular_rising_flank():
    # (25 - 0) / (50 - 0), hand-checked
    assert tri(0, 50, 100)(25) == pytest.approx(0.5)


def test_trapezoidal_plateau():
    assert trap(20, 40, 60, 80)(50) == 1.0
    assert trap(20, 40, 60, 80)(40) == 1.0
    assert trap(20, 40, 60, 80)(60) == 1.0


def test_trapezoidal_falling_flank():
    # (80 - 70) / (80 - 60), hand-checked
    assert trap(20, 40, 60, 80)(70) == pytest.approx(0.5)


def test_zero_outside_support():
    mf = tri(10, 50, 90)
    assert mf(9.99) == 0.0
    assert mf(90.01) == 0.0
    assert trap(10, 20, 30, 40)(40.01) == 0.0


def test_degenerate_left_edge_jumps_to_plateau():
    assert tri(0, 0, 50)(0) == 1.0
    assert trap(0, 0, 25, 50)(0) == 1.0


def test_degenerate_right_edge():
    assert tri(50, 100, 100)(100) == 1.0
    assert trap(50, 75, 100, 100)(100) == 1.0


def test_invalid_ordering_rejected():
    with pytest.raises(ValueError):
        tri(50, 40, 100)
    with pytest.raises(ValueError):
        trap(0, 10, 5, 20)
    with pytest.raises(ValueError):
        MembershipFunction("gaussian", (0, 1))


def test_evaluate_mf_helper():
    assert evaluate_mf(tri(0, 50, 100), 50) == 1.0


@st.composite
def mfs(draw):
    pts = sorted(draw(st.lists(st.floats(0, 100), min_size=4, max_size=4)))
    if draw(st.booleans()):
        return tri(*pts[:3])
    return trap(*pts)


@given(mfs(), st.floats(-50, 150))
def test_membership_always_in_unit_interval(mf, x):
    mu = mf(x)
    assert 0.0 <= mu <= 1.0


@given(mfs())
def test_zero_beyond_support(mf):
    lo, hi = mf.support
    assert mf(lo - 1e-6) == 0.0
    assert mf(hi + 1e-6) == 0.0


@given(mfs())
def test_piecewise_linear_midpoint(mf):
    # linearity inside each segment: value at a segment midpoint equals the
    # mean of the endpoints' values
    p = mf.params
    for a, b in zip(p, p[1:]):
        if b - a > 1e-9:
            inner_a, inner_b = a + (b - a) * 1e-3, b - (b - a) * 1e-3
            mid = (inner_a + inner_b) / 2
            assert mf(mid) == pytest.approx((mf(inner_a) + mf(inner_b)) / 2, abs=1e-9)


def test_vectorized_matches_scalar():
    mf = trap(10, 30, 60, 95)
    xs = np.linspace(-10, 110, 241)
    vec = mf.evaluate(xs)
    assert vec.tolist() == [mf(float(x)) for x in xs]
