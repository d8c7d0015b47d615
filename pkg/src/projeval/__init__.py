"""Fuzzy rule-based evaluation of student software projects."""

from . import fuzzy, metrics, normalize, rubric

__version__ = "0.1.0"

__all__ = ["fuzzy", "metrics", "normalize", "rubric", "__version__"]
