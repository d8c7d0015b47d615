"""Shallow structural parse of tokenized Java-style source.

Recognizes class/interface declarations (including nested ones),
extends/implements clauses, fields, method signatures, @Override markers
and serialization markers.  No type resolution: extraction is best-effort
and malformed constructs become warnings, never failures.

Constructors (member name equal to the class name with no return type)
are not counted as methods.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tokenizer import Token

MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "strictfp", "transient", "volatile", "default",
}
CLASS_KEYWORDS = {"class", "interface"}
CONTROL_KEYWORDS = {"if", "for", "while", "switch", "catch", "do", "try", "else", "return", "new"}


@dataclass
class MethodRecord:
    name: str
    parameter_count: int
    body_line_count: int
    has_override_marker: bool
    visibility: str  # public | private | protected | package
    signature: str = ""  # param type list, used for overload grouping


@dataclass
class ClassRecord:
    name: str
    superclass: str | None = None
    interfaces_implemented: list[str] = field(default_factory=list)
    field_count: int = 0
    methods: list[MethodRecord] = field(default_factory=list)
    is_interface: bool = False

    @property
    def overridden_method_count(self) -> int:
        return sum(1 for m in self.methods if m.has_override_marker)

    @property
    def overloaded_method_group_count(self) -> int:
        by_name: dict[str, set[str]] = {}
        for m in self.methods:
            by_name.setdefault(m.name, set()).add(m.signature)
        return sum(1 for sigs in by_name.values() if len(sigs) > 1)

    @property
    def uses_serialization(self) -> bool:
        return "Serializable" in self.interfaces_implemented or self._serial_field

    _serial_field: bool = False


def _significant(tokens: list[Token]) -> list[Token]:
    return [t for t in tokens if not t.is_trivia]


class _UnitParser:
    """Single-pass cursor over one file's significant tokens."""

    def __init__(self, tokens: list[Token], path: str):
        self.toks = _significant(tokens)
        self.path = path
        self.classes: list[ClassRecord] = []
        self.warnings: list[str] = []
        self.i = 0

    def warn(self, message: str):
        self.warnings.append(f"{self.path}: {message}")

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else None

    def at_punct(self, value: str, offset: int = 0) -> bool:
        t = self.peek(offset)
        return t is not None and t.kind == "punct" and t.value == value

    def at_word(self, value: str, offset: int = 0) -> bool:
        t = self.peek(offset)
        return t is not None and t.kind == "word" and t.value == value

    def skip_balanced(self, open_: str, close: str):
        """Skip from an opening bracket past its match."""
        depth = 0
        while self.i < len(self.toks):
            if self.at_punct(open_):
                depth += 1
            elif self.at_punct(close):
                depth -= 1
                if depth == 0:
                    self.i += 1
                    return
            self.i += 1

    def parse(self) -> list[ClassRecord]:
        while self.i < len(self.toks):
            tok = self.toks[self.i]
            if tok.kind == "word" and tok.value in CLASS_KEYWORDS:
                self.parse_class(tok.value == "interface")
            else:
                self.i += 1
        return self.classes

    def parse_class(self, is_interface: bool):
        self.i += 1  # past 'class'/'interface'
        name_tok = self.peek()
        if name_tok is None or name_tok.kind != "word":
            self.warn("class keyword without a name")
            return
        record = ClassRecord(name=name_tok.value, is_interface=is_interface)
        self.i += 1
        if self.at_punct("<"):
            self.skip_balanced("<", ">")
        clause = None
        while self.i < len(self.toks) and not self.at_punct("{"):
            if self.at_word("extends"):
                clause = "extends"
            elif self.at_word("implements"):
                clause = "implements"
            elif self.peek().kind == "word":
                ident = self._qualified_name()
                if clause == "extends" and record.superclass is None and not is_interface:
                    record.superclass = ident
                elif clause == "extends" and is_interface:
                    record.interfaces_implemented.append(ident)
                elif clause == "implements":
                    record.interfaces_implemented.append(ident)
                continue
            elif self.at_punct("<"):
                self.skip_balanced("<", ">")
                continue
            self.i += 1
        if not self.at_punct("{"):
            self.warn(f"class {record.name}: no body found")
            return
        self.classes.append(record)
        self.i += 1  # past '{'
        self.parse_class_body(record)

    def _qualified_name(self) -> str:
        """Dotted name; only the last segment is kept (shallow, unqualified)."""
        last = self.peek().value
        self.i += 1
        while self.at_punct(".") and (nxt := self.peek(1)) and nxt.kind == "word":
            last = nxt.value
            self.i += 2
        if self.at_punct("<"):
            self.skip_balanced("<", ">")
        return last

    def parse_class_body(self, record: ClassRecord):
        while self.i < len(self.toks):
            if self.at_punct("}"):
                self.i += 1
                return
            if self.peek().kind == "word" and self.peek().value in CLASS_KEYWORDS:
                self.parse_class(self.peek().value == "interface")
                continue
            self.parse_member(record)
        self.warn(f"class {record.name}: unterminated body")

    def parse_member(self, record: ClassRecord):
        has_override = False
        # annotations
        while self.at_punct("@"):
            ann = self.peek(1)
            if ann is not None and ann.kind == "word":
                if ann.value == "Override":
                    has_override = True
                self.i += 2
                if self.at_punct("("):
                    self.skip_balanced("(", ")")
            else:
                self.i += 1
        visibility = "package"
        head: list[Token] = []
        while self.i < len(self.toks):
            tok = self.peek()
            if tok.kind == "punct" and tok.value in ("(", ";", "=", "{", "}"):
                break
            if tok.kind == "word" and tok.value in ("public", "private", "protected"):
                visibility = tok.value
            if tok.kind == "punct" and tok.value == "<":
                self.skip_balanced("<", ">")
                continue
            head.append(tok)
            self.i += 1
        if self.i >= len(self.toks) or self.at_punct("}"):
            return
        if self.at_punct("("):
            self.parse_method(record, head, visibility, has_override)
        elif self.at_punct("{"):
            # static/instance initializer block
            self.skip_brace_block()
        else:
            self.parse_field(record, head)

    def parse_method(self, record: ClassRecord, head: list[Token], visibility: str, has_override: bool):
        words = [t for t in head if t.kind == "word" and t.value not in MODIFIERS]
        name = words[-1].value if words else "<anonymous>"
        params, count = self.parse_params()
        # throws clause / trailing annotations before body
        while self.i < len(self.toks) and not (self.at_punct("{") or self.at_punct(";")):
            self.i += 1
        body_lines = 0
        if self.at_punct("{"):
            open_line = self.peek().line
            close_line = self.skip_brace_block()
            body_lines = max(0, close_line - open_line - 1)
        elif self.at_punct(";"):
            self.i += 1
        is_constructor = name == record.name and len(words) == 1
        if is_constructor or (words and words[0].value in CONTROL_KEYWORDS):
            return
        record.methods.append(
            MethodRecord(name, count, body_lines, has_override, visibility, params)
        )

    def parse_params(self) -> tuple[str, int]:
        """Consume a parenthesized parameter list; returns (signature, count)."""
        depth, angle = 0, 0
        parts: list[list[str]] = [[]]
        while self.i < len(self.toks):
            tok = self.peek()
            if tok.kind == "punct":
                if tok.value == "(":
                    depth += 1
                    if depth == 1:
                        self.i += 1
                        continue
                elif tok.value == ")":
                    depth -= 1
                    if depth == 0:
                        self.i += 1
                        break
                elif tok.value == "<":
                    angle += 1
                elif tok.value == ">":
                    angle = max(0, angle - 1)
                elif tok.value == "," and depth == 1 and angle == 0:
                    parts.append([])
                    self.i += 1
                    continue
            parts[-1].append(tok.value)
            self.i += 1
        if parts == [[]]:
            return "", 0
        # a parameter's last word is its name; everything before is the type
        sig = ",".join(" ".join(p[:-1]) if len(p) > 1 else " ".join(p) for p in parts)
        return sig, len(parts)

    def parse_field(self, record: ClassRecord, head: list[Token]):
        names = [t.value for t in head if t.kind == "word"]
        # commas before any '=' were swept into head by the member loop
        declarators = 1 + sum(
            1 for t in head if t.kind == "punct" and t.value == ","
        )
        # consume through ';', counting top-level comma declarators
        depth = 0
        while self.i < len(self.toks):
            tok = self.peek()
            if tok.kind == "punct":
                if tok.value in "([{":
                    depth += 1
                elif tok.value in ")]}":
                    if tok.value == "}" and depth == 0:
                        return  # malformed member, let the body loop see '}'
                    depth -= 1
                elif tok.value == "," and depth == 0:
                    declarators += 1
                elif tok.value == ";" and depth == 0:
                    self.i += 1
                    break
            self.i += 1
        if not names:
            return
        record.field_count += declarators
        if "serialVersionUID" in names:
            record._serial_field = True

    def skip_brace_block(self) -> int:
        """Skip a balanced {...}; returns the closing brace's line."""
        depth = 0
        close_line = self.peek().line if self.peek() else 0
        while self.i < len(self.toks):
            tok = self.peek()
            if tok.kind == "punct":
                if tok.value == "{":
                    depth += 1
                elif tok.value == "}":
                    depth -= 1
                    if depth == 0:
                        close_line = tok.line
                        self.i += 1
                        return close_line
            self.i += 1
        return close_line


def extract_classes(units) -> tuple[list[ClassRecord], list[str]]:
    """Parse every unit; returns (class records, parse warnings).

    Results are independent of unit order: records are collected per file
    and concatenated in the units' given order.
    """
    classes: list[ClassRecord] = []
    warnings: list[str] = []
    for unit in units:
        parser = _UnitParser(unit.tokens, str(unit.path))
        classes.extend(parser.parse())
        warnings.extend(parser.warnings)
    return classes, warnings
