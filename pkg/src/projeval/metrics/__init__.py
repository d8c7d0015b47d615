from .parser import ClassRecord, MethodRecord, extract_classes
from .report import MetricsReport, UsageNames, compute_metrics
from .scan import DEFAULT_EXTENSIONS, DEFAULT_IGNORE, ScanResult, SourceUnit, scan_tree
from .tokenizer import Token, comment_lines, count_lines, tokenize

__all__ = [
    "ClassRecord",
    "DEFAULT_EXTENSIONS",
    "DEFAULT_IGNORE",
    "MethodRecord",
    "MetricsReport",
    "ScanResult",
    "SourceUnit",
    "Token",
    "UsageNames",
    "comment_lines",
    "compute_metrics",
    "count_lines",
    "extract_classes",
    "scan_tree",
    "tokenize",
]
