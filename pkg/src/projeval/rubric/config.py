"""Rubric config files: schema validation and (de)serialization.

The config is YAML with ``rubric_version: 1``.  Term references in rules
may carry lowercase hedge prefixes ("very", "more-or-less", "not");
capitalized words always belong to the term label, so "Very Low" is a
label while "very Low" hedges the label "Low".
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Optional

import yaml

from ..errors import ConfigError
from ..fuzzy.hedges import ATOMIC, Hedge
from ..fuzzy.membership import MembershipFunction
from ..fuzzy.variables import FuzzySet, LinguisticVariable
from ..normalize import CriterionProfile, ScoringScale, default_profiles
from .model import CRITERIA, Criterion, Rule, RuleBase

REFERENCE_RUBRIC = "reference_rubric.yaml"


@dataclass(frozen=True)
class RubricConfig:
    criteria: tuple[Criterion, ...]
    rule_base: RuleBase
    profiles: tuple[CriterionProfile, ...]
    exhaustive: bool
    document: dict  # raw parsed YAML, preserved for round-trips

    @property
    def variables(self) -> list[LinguisticVariable]:
        return [c.variable for c in self.criteria]

    @property
    def output(self) -> LinguisticVariable:
        return self.rule_base.output

    def profile_for(self, criterion: str) -> CriterionProfile:
        for p in self.profiles:
            if p.criterion == criterion:
                return p
        raise ConfigError(f"no profile for criterion {criterion!r}")


def _fail(path: str, message: str):
    raise ConfigError(f"{path}: {message}")


def _require(doc: dict, key: str, path: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        _fail(path, f"missing required key {key!r}")
    return doc[key]


def split_hedged_term(text: str) -> tuple[Optional[Hedge], str]:
    """Split "not very High" into (Hedge, "High"); plain labels pass through."""
    words = str(text).split()
    i = 0
    while i < len(words) and words[i] in ATOMIC:
        i += 1
    if i == len(words):
        raise ConfigError(f"term reference {text!r} has no label")
    hedge: Optional[Hedge] = None
    for word in reversed(words[:i]):
        hedge = Hedge(word, hedge)
    return hedge, " ".join(words[i:])


def format_hedged_term(hedge: Optional[Hedge], label: str) -> str:
    return f"{hedge} {label}" if hedge is not None else label


def _parse_variable(doc: dict, path: str) -> LinguisticVariable:
    name = _require(doc, "name", path)
    domain = _require(doc, "domain", path)
    if not (isinstance(domain, list) and len(domain) == 2):
        _fail(f"{path}.domain", "expected [lo, hi]")
    terms_doc = _require(doc, "terms", path)
    terms = []
    for i, td in enumerate(terms_doc):
        tpath = f"{path}.terms[{i}]"
        label = _require(td, "label", tpath)
        kind = _require(td, "kind", tpath)
        params = _require(td, "points", tpath)
        try:
            mf = MembershipFunction(kind, tuple(params))
        except (ValueError, TypeError) as exc:
            _fail(tpath, str(exc))
        terms.append(FuzzySet(str(label), mf))
    try:
        return LinguisticVariable(str(name), (domain[0], domain[1]), tuple(terms))
    except ValueError as exc:
        _fail(path, str(exc))


def _parse_rule(doc: dict, variables: dict[str, LinguisticVariable], path: str) -> Rule:
    rid = _require(doc, "id", path)
    if not isinstance(rid, int):
        _fail(f"{path}.id", "rule id must be an integer")
    when = _require(doc, "when", path)
    if not isinstance(when, dict) or not when:
        _fail(f"{path}.when", "expected a non-empty mapping of variable -> term")
    antecedents: dict[str, tuple[Optional[Hedge], str]] = {}
    # normalize clause order to the canonical criterion order
    known_first = [n for n in CRITERIA if n in when] + [n for n in when if n not in CRITERIA]
    for var_name in known_first:
        if var_name not in variables:
            _fail(f"{path}.when.{var_name}", "unknown variable")
        hedge, label = split_hedged_term(when[var_name])
        if label not in variables[var_name].term_labels():
            _fail(f"{path}.when.{var_name}", f"unknown term {label!r}")
        antecedents[var_name] = (hedge, label)
    then = _require(doc, "then", path)
    hedge, label = split_hedged_term(then)
    return Rule(rid, antecedents, (hedge, label))


def _parse_scale(doc: dict, path: str) -> ScoringScale:
    try:
        return ScoringScale(
            metric=str(_require(doc, "metric", path)),
            shape=str(_require(doc, "shape", path)),
            breakpoints=tuple(_require(doc, "breakpoints", path)),
            points=float(doc.get("points", 1.0)),
        )
    except ConfigError as exc:
        _fail(path, str(exc))


def check_exhaustive(rules: list[Rule], variables: list[LinguisticVariable], path: str = "rules"):
    """Every combination of input terms must be covered by exactly one rule."""
    seen: dict[tuple, int] = {}
    for rule in rules:
        if set(rule.antecedents) != {v.name for v in variables}:
            _fail(f"{path}[id={rule.id}]", "exhaustive base requires all variables in every rule")
        key = tuple(rule.antecedents[v.name][1] for v in variables)
        if key in seen:
            _fail(f"{path}[id={rule.id}]", f"duplicate antecedent combination (also rule {seen[key]})")
        seen[key] = rule.id
    expected = 1
    for v in variables:
        expected *= len(v.terms)
    if len(seen) != expected:
        _fail(path, f"rule base covers {len(seen)} of {expected} term combinations")


def parse_rubric(document: dict) -> RubricConfig:
    if not isinstance(document, dict):
        raise ConfigError("rubric document must be a mapping")
    version = _require(document, "rubric_version", "rubric")
    if version != 1:
        _fail("rubric_version", f"unsupported version {version!r}")

    variables = {}
    for i, vdoc in enumerate(_require(document, "variables", "rubric")):
        v = _parse_variable(vdoc, f"variables[{i}]")
        variables[v.name] = v
    output = _parse_variable(_require(document, "output", "rubric"), "output")

    criteria = []
    for i, cdoc in enumerate(_require(document, "criteria", "rubric")):
        cpath = f"criteria[{i}]"
        name = str(_require(cdoc, "name", cpath))
        var_name = str(cdoc.get("variable", name))
        if var_name not in variables:
            _fail(f"{cpath}.variable", f"unknown variable {var_name!r}")
        try:
            criteria.append(Criterion(name, variables[var_name], cdoc.get("weight", "Medium")))
        except ConfigError as exc:
            _fail(cpath, str(exc))

    rules_doc = _require(document, "rules", "rubric")
    mode = str(rules_doc.get("mode", "explicit"))
    if mode == "weighted":
        # the base is derived from the criteria weights instead of listed
        from .generate import generate_weighted_rules

        rule_base = generate_weighted_rules(criteria, output)
        exhaustive = True
    elif mode == "explicit":
        exhaustive = bool(rules_doc.get("exhaustive", False))
        items = _require(rules_doc, "items", "rules")
        rules = [_parse_rule(rdoc, variables, f"rules.items[{i}]") for i, rdoc in enumerate(items)]
        for rule in rules:
            _, label = rule.consequent
            if label not in output.term_labels():
                _fail(f"rules.items[id={rule.id}].then", f"unknown output term {label!r}")
        if exhaustive:
            check_exhaustive(rules, [c.variable for c in criteria])
        try:
            rule_base = RuleBase(tuple(rules), output)
        except ConfigError as exc:
            _fail("rules", str(exc))
    else:
        _fail("rules.mode", f"expected 'explicit' or 'weighted', got {mode!r}")

    profiles_doc = document.get("profiles")
    if profiles_doc is None:
        profiles = tuple(default_profiles())
    else:
        profiles = tuple(
            CriterionProfile(
                str(crit),
                tuple(
                    _parse_scale(sdoc, f"profiles.{crit}[{i}]")
                    for i, sdoc in enumerate(scales)
                ),
            )
            for crit, scales in profiles_doc.items()
        )

    return RubricConfig(tuple(criteria), rule_base, profiles, exhaustive, document)


def load_rubric(path: str | Path) -> RubricConfig:
    with open(path, encoding="utf-8") as fh:
        try:
            document = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError(f"{path}: not valid YAML: {exc}") from exc
    return parse_rubric(document)


def load_reference_rubric() -> RubricConfig:
    """The calibrated rubric shipped with the package."""
    text = resources.files("projeval.data").joinpath(REFERENCE_RUBRIC).read_text("utf-8")
    return parse_rubric(yaml.safe_load(text))
