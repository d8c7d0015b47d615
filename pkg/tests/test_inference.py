import numpy as np
import pytest

from projeval.errors import ConfigError, NoRuleFiredError
from projeval.fuzzy import (
    FuzzySet,
    LinguisticVariable,
    MembershipFunction,
    infer,
    sample_mf,
)
from projeval.rubric import Rule, RuleBase

tri = MembershipFunction.triangular
trap = MembershipFunction.trapezoidal


def make_var(name):
    return LinguisticVariable(
        name,
        (0.0, 100.0),
        (
            FuzzySet("Low", trap(0, 0, 25, 55)),
            FuzzySet("High", trap(45, 75, 100, 100)),
        ),
    )


@pytest.fixture
def quality():
    return make_var("quality")


@pytest.fixture
def outcome():
    return make_var("outcome")


def rules_for(outcome, *pairs):
    rules = tuple(
        Rule(i + 1, {"quality": (None, a)}, (None, c)) for i, (a, c) in enumerate(pairs)
    )
    return RuleBase(rules, outcome)


def test_single_rule_firing_fully_reproduces_consequent(quality, outcome):
    rules = rules_for(outcome, ("High", "High"), ("Low", "Low"))
    trace = infer([quality], outcome, rules, {"quality": 100.0}, 501)
    # only rule 1 fires, at strength 1: aggregate is the untouched consequent
    assert trace.fired() == [(1, 1.0)]
    expected = sample_mf(outcome.term("High").mf, outcome.domain, 501)
    assert trace.aggregate == expected


def test_no_rule_fired_is_an_error(quality, outcome):
    rules = rules_for(outcome, ("High", "High"))
    with pytest.raises(NoRuleFiredError):
        infer([quality], outcome, rules, {"quality": 0.0}, 501)


def test_empty_rule_base_rejected(quality, outcome):
    with pytest.raises(ConfigError):
        infer([quality], outcome, RuleBase((), outcome), {"quality": 50.0}, 501)


def test_unknown_term_rejected(quality, outcome):
    rules = rules_for(outcome, ("Sideways", "High"))
    with pytest.raises(ConfigError):
        infer([quality], outcome, rules, {"quality": 50.0}, 501)


def test_unknown_variable_rejected(quality, outcome):
    rules = RuleBase(
        (Rule(1, {"mystery": (None, "High")}, (None, "High")),), outcome
    )
    with pytest.raises(ConfigError):
        infer([quality], outcome, rules, {"quality": 50.0}, 501)


def test_missing_input_rejected(quality, outcome):
    rules = rules_for(outcome, ("High", "High"))
    with pytest.raises(ConfigError):
        infer([quality], outcome, rules, {}, 501)


def test_clipping_at_partial_strength(quality, outcome):
    rules = rules_for(outcome, ("High", "High"))
    trace = infer([quality], outcome, rules, {"quality": 60.0}, 501)
    strength = quality.term("High").mf(60.0)
    assert trace.fired() == [(1, pytest.approx(strength))]
    assert trace.aggregate.mu.max() == pytest.approx(strength)


def test_aggregation_is_pointwise_max(quality, outcome):
    rules = rules_for(outcome, ("High", "High"), ("Low", "Low"))
    trace = infer([quality], outcome, rules, {"quality": 40.0}, 501)
    s_low = quality.term("Low").mf(40.0)
    s_high = quality.term("High").mf(40.0)
    expected = np.maximum(
        np.minimum(s_high, sample_mf(outcome.term("High").mf, outcome.domain, 501).mu),
        np.minimum(s_low, sample_mf(outcome.term("Low").mf, outcome.domain, 501).mu),
    )
    np.testing.assert_array_equal(trace.aggregate.mu, expected)


def test_min_vs_product_tnorm():
    a, b = make_var("a"), make_var("b")
    out = make_var("out")
    rules = RuleBase(
        (Rule(1, {"a": (None, "High"), "b": (None, "High")}, (None, "High")),), out
    )
    inputs = {"a": 60.0, "b": 65.0}
    min_trace = infer([a, b], out, rules, inputs, 501, and_op="min")
    prod_trace = infer([a, b], out, rules, inputs, 501, and_op="product")
    mu_a = a.term("High").mf(60.0)
    mu_b = b.term("High").mf(65.0)
    assert min_trace.firings[0][1] == pytest.approx(min(mu_a, mu_b))
    assert prod_trace.firings[0][1] == pytest.approx(mu_a * mu_b)
    with pytest.raises(ConfigError):
        infer([a, b], out, rules, inputs, 501, and_op="max")


def test_hedged_antecedent_and_consequent(quality, outcome):
    from projeval.fuzzy import very

    rules = RuleBase(
        (Rule(1, {"quality": (very, "High")}, (very, "High")),), outcome
    )
    trace = infer([quality], outcome, rules, {"quality": 60.0}, 501)
    strength = quality.term("High").mf(60.0) ** 2
    assert trace.firings[0][1] == pytest.approx(strength)
    expected = np.minimum(
        strength, sample_mf(outcome.term("High").mf, outcome.domain, 501).mu ** 2
    )
    np.testing.assert_allclose(trace.aggregate.mu, expected)


def test_inference_is_deterministic(quality, outcome):
    rules = rules_for(outcome, ("High", "High"), ("Low", "Low"))
    t1 = infer([quality], outcome, rules, {"quality": 37.5}, 1001)
    t2 = infer([quality], outcome, rules, {"quality": 37.5}, 1001)
    assert t1.firings == t2.firings
    assert np.array_equal(t1.aggregate.mu, t2.aggregate.mu)
