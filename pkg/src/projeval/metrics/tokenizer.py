"""Lossless tokenizer for Java-style source.

Every byte of the input ends up in exactly one token, including
whitespace and comments, so concatenating token lexemes reproduces the
file.  Token kinds are deliberately coarse: the shallow parser only needs
word boundaries, literals, comments and punctuation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TokenizeError

WORD_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
WORD_CONT = WORD_START | set("0123456789")
DIGITS = set("0123456789")
SPACE = set(" \t\r\n\f")

TRIVIA = ("whitespace", "line_comment", "block_comment")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int  # 1-based line the token starts on

    @property
    def is_trivia(self) -> bool:
        return self.kind in TRIVIA


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, n = 0, 1, len(text)

    def emit(kind: str, start: int, end: int):
        nonlocal line
        value = text[start:end]
        tokens.append(Token(kind, value, line))
        line += value.count("\n")

    while i < n:
        ch = text[i]
        start = i
        if ch in SPACE:
            while i < n and text[i] in SPACE:
                i += 1
            emit("whitespace", start, i)
        elif ch == "/" and text[i + 1 : i + 2] == "/":
            while i < n and text[i] != "\n":
                i += 1
            emit("line_comment", start, i)
        elif ch == "/" and text[i + 1 : i + 2] == "*":
            end = text.find("*/", i + 2)
            if end < 0:
                raise TokenizeError(f"line {line}: unterminated block comment")
            i = end + 2
            emit("block_comment", start, i)
        elif ch in ('"', "'"):
            i += 1
            while i < n:
                if text[i] == "\\":
                    i += 2
                    continue
                if text[i] == ch:
                    i += 1
                    break
                if text[i] == "\n":
                    raise TokenizeError(f"line {line}: unterminated literal")
                i += 1
            else:
                raise TokenizeError(f"line {line}: unterminated literal")
            emit("string" if ch == '"' else "char", start, i)
        elif ch in WORD_START:
            while i < n and text[i] in WORD_CONT:
                i += 1
            emit("word", start, i)
        elif ch in DIGITS:
            # coarse numeric literal: digits, letters, dots, and exponent signs
            i += 1
            while i < n and (text[i] in WORD_CONT or text[i] == "."):
                if text[i] in "eE" and text[i + 1 : i + 2] in ("+", "-"):
                    i += 2
                else:
                    i += 1
            emit("number", start, i)
        else:
            i += 1
            emit("punct", start, i)
    return tokens


def count_lines(text: str) -> int:
    """Physical lines; an empty file has none, a trailing newline adds none."""
    if not text:
        return 0
    return text.count("\n") + (0 if text.endswith("\n") else 1)


def comment_lines(tokens: list[Token]) -> int:
    """Number of distinct physical lines touched by at least one comment."""
    lines: set[int] = set()
    for tok in tokens:
        if tok.kind == "line_comment":
            lines.add(tok.line)
        elif tok.kind == "block_comment":
            lines.update(range(tok.line, tok.line + tok.value.count("\n") + 1))
    return len(lines)
