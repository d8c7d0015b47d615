import pytest

from projeval.fuzzy import FuzzySet, LinguisticVariable, MembershipFunction, fuzzify

tri = MembershipFunction.triangular
trap = MembershipFunction.trapezoidal


def three_term(name="quality"):
    return LinguisticVariable(
        name,
        (0.0, 100.0),
        (
            FuzzySet("Low", trap(0, 0, 20, 50)),
            FuzzySet("Medium", tri(20, 50, 80)),
            FuzzySet("High", trap(50, 80, 100, 100)),
        ),
    )


def test_peak_maps_to_one():
    assert fuzzify(three_term(), 50)["Medium"] == 1.0


def test_left_plateau_at_domain_minimum():
    degrees = fuzzify(three_term(), 0)
    assert degrees["Low"] == 1.0
    assert degrees["Medium"] == 0.0
    assert degrees["High"] == 0.0


def test_out_of_domain_inputs_clamp():
    assert fuzzify(three_term(), -10) == fuzzify(three_term(), 0)
    assert fuzzify(three_term(), 250) == fuzzify(three_term(), 100)


def test_reference_clean_code_at_61(reference):
    clean = next(v for v in reference.variables if v.name == "clean_code")
    degrees = fuzzify(clean, 61)
    # nonzero exactly for the terms whose support contains 61
    for term in clean.terms:
        lo, hi = term.mf.support
        if lo < 61 < hi:
            assert degrees[term.label] > 0
        elif not lo <= 61 <= hi:
            assert degrees[term.label] == 0.0


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        LinguisticVariable(
            "v", (0, 100), (FuzzySet("A", tri(0, 0, 100)), FuzzySet("A", tri(0, 100, 100)))
        )


def test_breakpoints_outside_domain_rejected():
    with pytest.raises(ValueError):
        LinguisticVariable("v", (0, 50), (FuzzySet("A", tri(0, 25, 80)),))


def test_coverage_gap_rejected():
    with pytest.raises(ValueError, match="covers"):
        LinguisticVariable(
            "v",
            (0, 100),
            (FuzzySet("A", tri(0, 10, 20)), FuzzySet("B", tri(80, 90, 100))),
        )


def test_unknown_term_lookup():
    with pytest.raises(KeyError):
        three_term().term("Excellent")
