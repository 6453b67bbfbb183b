"""Flesch Reading Ease scoring and the score <-> level mapping."""

from __future__ import annotations

from .errors import MissingBandError, MissingMidpointError
from .scales import IntensityScale
from .text import Document, count_document_syllables


def fre_score(doc: Document) -> float:
    """Reading-ease score; higher is easier.  Unclamped on purpose: the
    deviation metric works on raw scores, clamping happens in level_of."""
    doc.require_tokens()
    words = len(doc.tokens)
    sentences = doc.n_sentences
    syllables = count_document_syllables(doc)
    return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words)


def level_of(score: float, scale: IntensityScale) -> int:
    """Map a score to the level whose band contains it.

    Scores above every band clamp to the level with the highest band (the
    easiest), scores below every band to the level with the lowest (the
    hardest), so the mapping is total.
    """
    if not scale.has_bands:
        raise MissingBandError("scale has no score bands; cannot map scores to levels")
    by_low_desc = sorted(scale.levels, key=lambda lvl: lvl.band[0], reverse=True)
    for lvl in by_low_desc:
        if score >= lvl.band[0]:
            return lvl.index
    return by_low_desc[-1].index


def fre_delta(score: float, target: int, scale: IntensityScale) -> float:
    """Absolute deviation of ``score`` from the target level's band midpoint."""
    midpoint = scale.level(target).midpoint
    if midpoint is None:
        raise MissingMidpointError(f"level {target} has no midpoint")
    return abs(score - midpoint)
