"""Aggregation of per-file parse results into one metrics report.

Usage counts (collections, comparators, streams, built-in exceptions and
interfaces) are identifier-occurrence counts against configurable name
lists.  "Own" interfaces and exceptions are types declared anywhere in
the scanned tree; "built-in" names come from a bundled standard-library
list.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .parser import ClassRecord
from .scan import SourceUnit

COLLECTION_NAMES = frozenset(
    {
        "List", "ArrayList", "LinkedList", "Map", "HashMap", "TreeMap",
        "LinkedHashMap", "Set", "HashSet", "TreeSet", "LinkedHashSet",
        "Collection", "Collections", "Queue", "Deque", "ArrayDeque",
        "Stack", "Vector", "Iterator",
    }
)
COMPARATOR_NAMES = frozenset({"Comparator", "Comparable"})
STREAM_NAMES = frozenset(
    {"Stream", "IntStream", "LongStream", "DoubleStream", "Collectors", "stream"}
)
BUILTIN_EXCEPTIONS = frozenset(
    {
        "Exception", "RuntimeException", "IOException", "FileNotFoundException",
        "IllegalArgumentException", "IllegalStateException", "NullPointerException",
        "IndexOutOfBoundsException", "ArrayIndexOutOfBoundsException",
        "ArithmeticException", "ClassCastException", "NumberFormatException",
        "UnsupportedOperationException", "InterruptedException",
        "CloneNotSupportedException", "SQLException", "Throwable", "Error",
    }
)
BUILTIN_INTERFACES = frozenset(
    {
        "Serializable", "Comparable", "Comparator", "Runnable", "Callable",
        "Iterable", "Cloneable", "AutoCloseable", "Closeable",
    }
)


@dataclass(frozen=True)
class UsageNames:
    collections: frozenset[str] = COLLECTION_NAMES
    comparators: frozenset[str] = COMPARATOR_NAMES
    streams: frozenset[str] = STREAM_NAMES
    builtin_exceptions: frozenset[str] = BUILTIN_EXCEPTIONS
    builtin_interfaces: frozenset[str] = BUILTIN_INTERFACES


@dataclass(frozen=True)
class MetricsReport:
    total_lines: int = 0
    comment_lines: int = 0
    class_count: int = 0
    avg_methods_per_class: float = 0.0
    avg_fields_per_class: float = 0.0
    avg_params_per_method: float = 0.0
    avg_lines_per_method: float = 0.0
    inherited_class_count: int = 0
    override_count: int = 0
    overload_group_count: int = 0
    own_interface_count: int = 0
    builtin_interface_impl_count: int = 0
    own_exception_count: int = 0
    builtin_exception_use_count: int = 0
    collections_use_count: int = 0
    comparator_use_count: int = 0
    stream_use_count: int = 0
    serialization_use_count: int = 0

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _identifier_counts(units: list[SourceUnit]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for unit in units:
        for tok in unit.tokens:
            if tok.kind == "word":
                counts[tok.value] = counts.get(tok.value, 0) + 1
    return counts


def _is_exception_class(record: ClassRecord, names: UsageNames) -> bool:
    if record.is_interface:
        return False
    if record.name.endswith("Exception") or record.name.endswith("Error"):
        return True
    sup = record.superclass
    return sup is not None and (
        sup in names.builtin_exceptions or sup.endswith("Exception")
    )


def compute_metrics(
    units: list[SourceUnit],
    classes: list[ClassRecord],
    names: UsageNames = UsageNames(),
) -> MetricsReport:
    """Fold per-file and per-class results into the flat report.

    The result is invariant under permutation of units/classes; an empty
    project yields the all-zero report.
    """
    total_lines = sum(u.line_count for u in units)
    total_comments = sum(u.comment_line_count for u in units)

    concrete = [c for c in classes if not c.is_interface]
    all_methods = [m for c in classes for m in c.methods]
    class_count = len(classes)
    method_count = len(all_methods)

    own_exception_names = {c.name for c in concrete if _is_exception_class(c, names)}
    superclass_uses = [c.superclass for c in concrete if c.superclass is not None]

    word_counts = _identifier_counts(units)

    def usage(name_set) -> int:
        return sum(word_counts.get(name, 0) for name in name_set)

    # built-in exception occurrences, minus their appearances as a declared
    # class's superclass (that mention credits the own-exception column)
    builtin_exc = usage(names.builtin_exceptions)
    builtin_exc -= sum(1 for sup in superclass_uses if sup in names.builtin_exceptions)

    return MetricsReport(
        total_lines=total_lines,
        comment_lines=total_comments,
        class_count=class_count,
        avg_methods_per_class=method_count / class_count if class_count else 0.0,
        avg_fields_per_class=(
            sum(c.field_count for c in classes) / class_count if class_count else 0.0
        ),
        avg_params_per_method=(
            sum(m.parameter_count for m in all_methods) / method_count
            if method_count
            else 0.0
        ),
        avg_lines_per_method=(
            sum(m.body_line_count for m in all_methods) / method_count
            if method_count
            else 0.0
        ),
        inherited_class_count=sum(1 for c in concrete if c.superclass is not None),
        override_count=sum(c.overridden_method_count for c in classes),
        overload_group_count=sum(c.overloaded_method_group_count for c in classes),
        own_interface_count=sum(1 for c in classes if c.is_interface),
        builtin_interface_impl_count=sum(
            1
            for c in classes
            for iface in c.interfaces_implemented
            if iface in names.builtin_interfaces
        ),
        own_exception_count=len(own_exception_names),
        builtin_exception_use_count=max(0, builtin_exc),
        collections_use_count=usage(names.collections),
        comparator_use_count=usage(names.comparators),
        stream_use_count=usage(names.streams),
        serialization_use_count=sum(1 for c in classes if c.uses_serialization),
    )
