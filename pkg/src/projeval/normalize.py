"""Maps raw source-tree metrics to the three criterion scores on [0, 100].

Each criterion owns a list of scoring scales.  A scale turns one metric
into a sub-score in [0, 1] by piecewise-linear interpolation over its
breakpoints; the criterion score is the points-weighted mean of its
sub-scores, stretched to [0, 100].
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ConfigError

SHAPES = ("higher-better", "lower-better", "band")


@dataclass(frozen=True)
class ScoringScale:
    metric: str
    shape: str
    breakpoints: tuple[float, ...]
    points: float = 1.0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ConfigError(f"{self.metric}: unknown scale shape {self.shape!r}")
        bps = tuple(float(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        n = len(bps)
        if self.shape == "band" and n != 4:
            raise ConfigError(f"{self.metric}: band scale needs 4 breakpoints")
        if self.shape != "band" and n != 2:
            raise ConfigError(f"{self.metric}: ramp scale needs 2 breakpoints")
        if any(bps[i] >= bps[i + 1] for i in range(n - 1)):
            raise ConfigError(f"{self.metric}: breakpoints must strictly increase")
        if self.points < 0:
            raise ConfigError(f"{self.metric}: points must be >= 0")

    def sub_score(self, raw: float) -> float:
        b = self.breakpoints
        if self.shape == "higher-better":
            return _ramp_up(raw, b[0], b[1])
        if self.shape == "lower-better":
            return 1.0 - _ramp_up(raw, b[0], b[1])
        up = _ramp_up(raw, b[0], b[1])
        down = 1.0 - _ramp_up(raw, b[2], b[3])
        return min(up, down)


def _ramp_up(x: float, lo: float, hi: float) -> float:
    if x <= lo:
        return 0.0
    if x >= hi:
        return 1.0
    return (x - lo) / (hi - lo)


@dataclass(frozen=True)
class CriterionProfile:
    criterion: str
    scales: tuple[ScoringScale, ...]

    def __post_init__(self):
        object.__setattr__(self, "scales", tuple(self.scales))
        if not self.scales:
            raise ConfigError(f"{self.criterion}: profile has no scales")
        if sum(s.points for s in self.scales) <= 0:
            raise ConfigError(f"{self.criterion}: total points must be > 0")


def score_criterion(report, profile: CriterionProfile) -> float:
    """Points-weighted mean of the profile's sub-scores, on [0, 100]."""
    total = sum(s.points for s in profile.scales)
    acc = 0.0
    for scale in profile.scales:
        raw = getattr(report, scale.metric, None)
        if raw is None:
            warnings.warn(f"metric {scale.metric!r} missing from report, using 0")
            raw = 0.0
        acc += scale.points * scale.sub_score(float(raw))
    return 100.0 * acc / total


def default_profiles() -> list[CriterionProfile]:
    """Shipped scale defaults, anchored on typical course-project ranges."""
    clean = CriterionProfile(
        "clean_code",
        (
            ScoringScale("total_lines", "band", (130, 800, 3500, 5500), 2.0),
            ScoringScale("avg_fields_per_class", "band", (0.5, 2, 8, 15), 1.0),
            ScoringScale("avg_params_per_method", "lower-better", (3, 8), 1.0),
            ScoringScale("comment_lines", "higher-better", (5, 120), 1.5),
            ScoringScale("class_count", "band", (3, 10, 40, 56), 2.0),
            ScoringScale("avg_methods_per_class", "band", (2, 4, 20, 50), 1.5),
            ScoringScale("serialization_use_count", "higher-better", (0, 1), 0.5),
        ),
    )
    functionality = CriterionProfile(
        "functionality",
        (
            ScoringScale("collections_use_count", "higher-better", (0, 12), 2.0),
            ScoringScale("own_interface_count", "higher-better", (0, 3), 1.5),
            ScoringScale("own_exception_count", "higher-better", (0, 2), 1.5),
            ScoringScale("comparator_use_count", "higher-better", (0, 3), 1.0),
            ScoringScale("stream_use_count", "higher-better", (0, 5), 1.0),
        ),
    )
    inheritance = CriterionProfile(
        "inheritance",
        (
            ScoringScale("override_count", "higher-better", (0, 6), 1.5),
            ScoringScale("inherited_class_count", "higher-better", (0, 4), 1.5),
        ),
    )
    return [clean, functionality, inheritance]
