from .config import (
    RubricConfig,
    check_exhaustive,
    format_hedged_term,
    load_reference_rubric,
    load_rubric,
    parse_rubric,
    split_hedged_term,
)
from .checks import dominance_violations
from .evaluate import best_label, evaluate_project
from .generate import generate_weighted_rules
from .model import (
    CRITERIA,
    Criterion,
    EvaluationResult,
    ProjectScores,
    Rule,
    RuleBase,
)

__all__ = [
    "CRITERIA",
    "Criterion",
    "EvaluationResult",
    "ProjectScores",
    "Rule",
    "RuleBase",
    "RubricConfig",
    "best_label",
    "check_exhaustive",
    "dominance_violations",
    "evaluate_project",
    "format_hedged_term",
    "generate_weighted_rules",
    "load_reference_rubric",
    "load_rubric",
    "parse_rubric",
    "split_hedged_term",
]
