"""Domain model for project-evaluation rubrics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import ConfigError
from ..fuzzy.hedges import Hedge
from ..fuzzy.sampled import SampledSet
from ..fuzzy.variables import LinguisticVariable

WEIGHTS = ("Low", "Medium", "High")
WEIGHT_VALUE = {"Low": 1, "Medium": 2, "High": 3}

# canonical criterion order used everywhere (reports, rule clauses)
CRITERIA = ("clean_code", "functionality", "inheritance")


@dataclass(frozen=True)
class Criterion:
    name: str
    variable: LinguisticVariable
    weight: str = "Medium"

    def __post_init__(self):
        if self.weight not in WEIGHTS:
            raise ConfigError(f"{self.name}: weight must be one of {WEIGHTS}")


@dataclass(frozen=True)
class Rule:
    id: int
    antecedents: dict[str, tuple[Optional[Hedge], str]]
    consequent: tuple[Optional[Hedge], str]

    def __post_init__(self):
        if not self.antecedents:
            raise ConfigError(f"rule {self.id}: empty antecedent")


@dataclass(frozen=True)
class RuleBase:
    rules: tuple[Rule, ...]
    output: LinguisticVariable

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise ConfigError("duplicate rule ids")

    def rule(self, rule_id: int) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(f"no rule {rule_id}")


@dataclass(frozen=True)
class ProjectScores:
    clean_code: float
    functionality: float
    inheritance: float

    def __post_init__(self):
        for name in CRITERIA:
            v = getattr(self, name)
            if not 0 <= v <= 100:
                raise ValueError(f"{name} must lie in [0, 100], got {v}")

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in CRITERIA}


@dataclass(frozen=True)
class EvaluationResult:
    success_score: float
    fired_rules: tuple[tuple[int, float], ...]
    aggregate: SampledSet = field(repr=False)
    label: str

    def __post_init__(self):
        if not 0 <= self.success_score <= 100:
            raise ValueError("success score outside [0, 100]")
        for _, s in self.fired_rules:
            if not 0 <= s <= 1:
                raise ValueError("firing strength outside [0, 1]")
