"""Ordered intensity scales: level labels, score bands, and band midpoints.

A scale is the k-point axis a transfer task runs over.  Regression-style
tasks (readability) attach a numeric score band and midpoint to each level;
classification-style tasks (sentiment stars) carry labels only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, UnknownLevelError

SCALE_FORMAT = "stylemeter-scale"
SCALE_VERSION = 1


@dataclass(frozen=True)
class Level:
    index: int
    label: str
    band: tuple[float, float] | None = None
    midpoint: float | None = None


@dataclass(frozen=True)
class IntensityScale:
    levels: tuple[Level, ...]

    def __post_init__(self):
        if len(self.levels) < 2:
            raise ConfigError("a scale needs at least two levels")
        indices = [lvl.index for lvl in self.levels]
        if indices != list(range(1, len(self.levels) + 1)):
            raise ConfigError(f"level indices must be contiguous 1..k, got {indices}")
        banded = [lvl for lvl in self.levels if lvl.band is not None]
        if banded and len(banded) != len(self.levels):
            raise ConfigError("either all levels carry a band or none do")
        for lvl in banded:
            lo, hi = lvl.band
            if not lo < hi:
                raise ConfigError(f"level {lvl.index}: band {lvl.band} is not ascending")
            if lvl.midpoint is not None and not (lo <= lvl.midpoint <= hi):
                raise ConfigError(f"level {lvl.index}: midpoint outside its band")
        # bands must be disjoint and monotone in level order
        ordered = sorted(banded, key=lambda lvl: lvl.band[0])
        for a, b in zip(ordered, ordered[1:]):
            if a.band[1] > b.band[0]:
                raise ConfigError(f"bands {a.band} and {b.band} overlap")
        if banded:
            los = [lvl.band[0] for lvl in self.levels]
            if los != sorted(los) and los != sorted(los, reverse=True):
                raise ConfigError("bands must be monotone across levels")

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(lvl.index for lvl in self.levels)

    @property
    def has_bands(self) -> bool:
        return all(lvl.band is not None for lvl in self.levels)

    def level(self, index: int) -> Level:
        if not 1 <= index <= len(self.levels):
            raise UnknownLevelError(f"level {index} not in 1..{len(self.levels)}")
        return self.levels[index - 1]

    def to_dict(self) -> dict:
        levels = []
        for lvl in self.levels:
            entry: dict = {"index": lvl.index, "label": lvl.label}
            if lvl.band is not None:
                entry["band"] = list(lvl.band)
            if lvl.midpoint is not None:
                entry["midpoint"] = lvl.midpoint
            levels.append(entry)
        return {"format": SCALE_FORMAT, "version": SCALE_VERSION, "levels": levels}

    @classmethod
    def from_dict(cls, payload: dict) -> "IntensityScale":
        if not isinstance(payload, dict) or "levels" not in payload:
            raise ConfigError("scale payload must be a mapping with a 'levels' list")
        if payload.get("version", SCALE_VERSION) != SCALE_VERSION:
            raise ConfigError(f"unsupported scale version {payload.get('version')}")
        levels = []
        try:
            for entry in payload["levels"]:
                band = entry.get("band")
                levels.append(
                    Level(
                        index=int(entry["index"]),
                        label=str(entry["label"]),
                        band=(float(band[0]), float(band[1])) if band else None,
                        midpoint=float(entry["midpoint"]) if entry.get("midpoint") is not None else None,
                    )
                )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ConfigError(f"bad scale level entry: {exc!r}") from exc
        return cls(levels=tuple(levels))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "IntensityScale":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"scale file {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(payload)


def readability_scale() -> IntensityScale:
    """Four school-grade readability levels with their score bands.

    Band midpoints (90/70/50/20) are the per-level score targets used by the
    deviation metric and the regression reward.
    """
    return IntensityScale(
        levels=(
            Level(1, "Elementary School Students", band=(80.0, 100.0), midpoint=90.0),
            Level(2, "Middle School Students", band=(60.0, 80.0), midpoint=70.0),
            Level(3, "High School Students", band=(40.0, 60.0), midpoint=50.0),
            Level(4, "College Students", band=(0.0, 40.0), midpoint=20.0),
        )
    )


def sentiment_scale() -> IntensityScale:
    """Five star-rating sentiment levels (classification only, no bands)."""
    return IntensityScale(
        levels=(
            Level(1, "Very Negative Tone"),
            Level(2, "Negative Tone"),
            Level(3, "Neutral Tone"),
            Level(4, "Positive Tone"),
            Level(5, "Very Positive Tone"),
        )
    )


def builtin_scale(style: str) -> IntensityScale:
    if style == "readability":
        return readability_scale()
    if style == "sentiment":
        return sentiment_scale()
    raise ConfigError(f"no builtin scale for style {style!r}")
