"""Linguistic hedges: unary modifiers of membership degrees.

very(u) = u^2, more-or-less(u) = sqrt(u), not(u) = 1 - u.  Hedges compose
through the ``inner`` link; "not very" is Hedge("not", Hedge("very")) and
evaluates innermost-first: not(very(u)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

ATOMIC = ("very", "more-or-less", "not")


@dataclass(frozen=True)
class Hedge:
    kind: str
    inner: Optional["Hedge"] = None

    def __post_init__(self):
        if self.kind not in ATOMIC:
            raise ValueError(f"unknown hedge {self.kind!r}")

    def apply(self, u):
        """Apply to a degree or array of degrees in [0, 1]."""
        arr = np.asarray(u, dtype=float)
        if np.any(arr < 0) or np.any(arr > 1):
            raise ValueError("hedge input must lie in [0, 1]")
        out = self._apply(arr)
        return float(out) if arr.ndim == 0 else out

    def _apply(self, arr: np.ndarray) -> np.ndarray:
        if self.inner is not None:
            arr = self.inner._apply(arr)
        if self.kind == "very":
            return arr**2
        if self.kind == "more-or-less":
            return np.sqrt(arr)
        return 1.0 - arr  # not

    def __str__(self) -> str:
        tail = f" {self.inner}" if self.inner else ""
        return f"{self.kind}{tail}"


def parse_hedge(text: str) -> Optional[Hedge]:
    """Parse a hedge prefix like "very" or "not very" (outermost first).

    Returns None for empty input.
    """
    words = text.replace("_", "-").split()
    if not words:
        return None
    hedge: Optional[Hedge] = None
    for word in reversed(words):
        if word not in ATOMIC:
            raise ValueError(f"unknown hedge word {word!r}")
        hedge = Hedge(word, hedge)
    return hedge


def apply_hedge(h: Optional[Hedge], u):
    """Apply a hedge; h=None is the identity."""
    if h is None:
        return u
    return h.apply(u)


very = Hedge("very")
more_or_less = Hedge("more-or-less")
not_ = Hedge("not")
