"""Source-tree scanning: collect, tokenize and line-count source files."""

from __future__ import annotations

import fnmatch
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import TokenizeError
from .tokenizer import Token, comment_lines, count_lines, tokenize

DEFAULT_EXTENSIONS = (".java",)
DEFAULT_IGNORE = ("target", "build", ".git", "node_modules", "out")


@dataclass(frozen=True)
class SourceUnit:
    path: Path
    tokens: tuple[Token, ...]
    line_count: int
    comment_line_count: int

    def __post_init__(self):
        if self.comment_line_count > self.line_count:
            raise ValueError("comment lines cannot exceed total lines")


@dataclass
class ScanResult:
    units: list[SourceUnit] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _load_unit(path: Path) -> SourceUnit:
    text = path.read_text(encoding="utf-8", errors="replace")
    tokens = tokenize(text)
    return SourceUnit(
        path=path,
        tokens=tuple(tokens),
        line_count=count_lines(text),
        comment_line_count=comment_lines(tokens),
    )


def scan_tree(
    root: str | Path,
    extensions: tuple[str, ...] = DEFAULT_EXTENSIONS,
    ignore: tuple[str, ...] = DEFAULT_IGNORE,
    workers: int = 1,
) -> ScanResult:
    """Recursively tokenize matching files under root.

    Files that fail tokenization become warnings and are skipped.  Units
    come back sorted by path so results do not depend on walk order or on
    the worker count.
    """
    root = Path(root)
    if not root.is_dir():
        raise IOError(f"not a readable directory: {root}")
    paths = sorted(
        p
        for p in root.rglob("*")
        if p.is_file()
        and p.suffix in extensions
        and not _ignored(p.relative_to(root), ignore)
    )
    result = ScanResult()

    def load(path: Path):
        try:
            return _load_unit(path)
        except TokenizeError as exc:
            return f"{path}: {exc}"
        except OSError as exc:
            return f"{path}: unreadable ({exc})"

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            loaded = list(pool.map(load, paths))
    else:
        loaded = [load(p) for p in paths]
    for item in loaded:
        if isinstance(item, str):
            result.warnings.append(item)
        else:
            result.units.append(item)
    return result


def _ignored(rel: Path, ignore: tuple[str, ...]) -> bool:
    return any(
        fnmatch.fnmatch(part, pattern.rstrip("/"))
        for part in rel.parts[:-1]
        for pattern in ignore
    )
