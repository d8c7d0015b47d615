"""Triangular and trapezoidal membership functions.

Both shapes are piecewise linear.  A triangle (a, b, c) ramps from 0 at a
up to 1 at b and back to 0 at c; a trapezoid (a, b, c, d) holds a plateau
of 1 on [b, c].  Degenerate segments (a == b or c == d) are treated as
vertical edges: membership jumps straight to the plateau value at the
breakpoint instead of dividing by zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MembershipFunction:
    kind: str  # "triangular" | "trapezoidal"
    params: tuple[float, ...]

    def __post_init__(self):
        if self.kind == "triangular":
            if len(self.params) != 3:
                raise ValueError("triangular MF needs 3 breakpoints")
        elif self.kind == "trapezoidal":
            if len(self.params) != 4:
                raise ValueError("trapezoidal MF needs 4 breakpoints")
        else:
            raise ValueError(f"unknown MF kind {self.kind!r}")
        p = self.params
        if any(p[i] > p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"breakpoints must be nondecreasing: {p}")
        object.__setattr__(self, "params", tuple(float(v) for v in p))

    @classmethod
    def triangular(cls, a: float, b: float, c: float) -> "MembershipFunction":
        return cls("triangular", (a, b, c))

    @classmethod
    def trapezoidal(cls, a: float, b: float, c: float, d: float) -> "MembershipFunction":
        return cls("trapezoidal", (a, b, c, d))

    @property
    def support(self) -> tuple[float, float]:
        return self.params[0], self.params[-1]

    def __call__(self, x: float) -> float:
        return float(self.evaluate(np.asarray(x, dtype=float)))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Vectorized membership degree, always in [0, 1]."""
        x = np.asarray(x, dtype=float)
        if self.kind == "triangular":
            a, b, c = self.params
            left_lo, left_hi, right_lo, right_hi = a, b, b, c
        else:
            a, b, c, d = self.params
            left_lo, left_hi, right_lo, right_hi = a, b, c, d

        mu = np.zeros_like(x)
        # plateau (a single point for triangles)
        mu = np.where((x >= left_hi) & (x <= right_lo), 1.0, mu)
        if left_hi > left_lo:
            rising = (x >= left_lo) & (x < left_hi)
            mu = np.where(rising, (x - left_lo) / (left_hi - left_lo), mu)
        if right_hi > right_lo:
            falling = (x > right_lo) & (x <= right_hi)
            mu = np.where(falling, (right_hi - x) / (right_hi - right_lo), mu)
        # x == right_hi belongs to the falling edge, which already yields 0
        return np.clip(mu, 0.0, 1.0)


def evaluate_mf(mf: MembershipFunction, x: float) -> float:
    return mf(x)
