from .hedges import Hedge, apply_hedge, more_or_less, not_, parse_hedge, very
from .inference import InferenceTrace, infer
from .membership import MembershipFunction, evaluate_mf
from .sampled import (
    SampledSet,
    alpha_cut,
    defuzzify_centroid,
    sample_mf,
    set_intersection,
    set_union,
)
from .variables import FuzzySet, LinguisticVariable, fuzzify

__all__ = [
    "FuzzySet",
    "Hedge",
    "InferenceTrace",
    "LinguisticVariable",
    "MembershipFunction",
    "SampledSet",
    "alpha_cut",
    "apply_hedge",
    "defuzzify_centroid",
    "evaluate_mf",
    "fuzzify",
    "infer",
    "more_or_less",
    "not_",
    "parse_hedge",
    "sample_mf",
    "set_intersection",
    "set_union",
    "very",
]
