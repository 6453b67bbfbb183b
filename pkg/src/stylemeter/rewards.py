"""Hierarchical style-intensity rewards.

Three components, each in [0, 1]:

* sentence level -- regression form ``exp(-(s - s_y)^2 / (2 sigma^2))`` (a
  Gaussian density ratio peaking at the target midpoint), or classification
  form ``P(target | text)`` straight from the judge's posterior;
* lexicon level -- softmax over levels of ``cos(v, pivot_j) / T`` evaluated
  at the target level, where ``v`` is the text's TF-IDF vector;
* consistency -- mean over generated tokens of the best source-token cosine,
  clamped below at zero.

The total is the weighted sum ``l1*r_sent + l2*r_lex + l3*r_cons``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .embeddings import EmbeddingTable, embed
from .errors import (
    EmptyGeneratedError,
    EmptySourceError,
    MissingMidpointError,
    ModeMismatchError,
    UnknownLevelError,
)
from .judges import CLASSIFICATION, REGRESSION, JudgeVerdict
from .pivots import PivotModel, cosine, doc_vector
from .scales import IntensityScale
from .text import Document

DEFAULT_LAMBDA_SENT = 0.5
DEFAULT_LAMBDA_LEX = 0.3
DEFAULT_LAMBDA_CONS = 0.2
DEFAULT_TEMPERATURE = 0.01
DEFAULT_SIGMA = 10.0


@dataclass(frozen=True)
class RewardConfig:
    lambda_sent: float = DEFAULT_LAMBDA_SENT
    lambda_lex: float = DEFAULT_LAMBDA_LEX
    lambda_cons: float = DEFAULT_LAMBDA_CONS
    temperature: float = DEFAULT_TEMPERATURE
    sigma: float = DEFAULT_SIGMA
    mode: str = REGRESSION

    def __post_init__(self):
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if min(self.lambda_sent, self.lambda_lex, self.lambda_cons) < 0:
            raise ValueError("reward weights must be non-negative")
        if self.lambda_sent + self.lambda_lex + self.lambda_cons <= 0:
            raise ValueError("at least one reward weight must be positive")
        if self.mode not in (REGRESSION, CLASSIFICATION):
            raise ValueError(f"unknown reward mode {self.mode!r}")

    @property
    def weights(self) -> tuple[float, float, float]:
        return (self.lambda_sent, self.lambda_lex, self.lambda_cons)


@dataclass(frozen=True)
class RewardBreakdown:
    r_sent: float
    r_lex: float
    r_cons: float
    total: float

    def to_dict(self) -> dict:
        return {
            "r_sent": self.r_sent,
            "r_lex": self.r_lex,
            "r_cons": self.r_cons,
            "total": self.total,
        }


def regression_reward(observed: float, target_level: int, scale: IntensityScale,
                      sigma: float) -> float:
    """Gaussian density ratio: 1.0 at the target midpoint, decaying
    exponentially with the squared deviation."""
    midpoint = scale.level(target_level).midpoint
    if midpoint is None:
        raise MissingMidpointError(f"level {target_level} has no midpoint")
    z = (observed - midpoint) / sigma
    return math.exp(-0.5 * z * z)


def classification_reward(verdict: JudgeVerdict, target_level: int) -> float:
    """Probability the judge assigns to the target level."""
    if verdict.mode != CLASSIFICATION:
        raise ModeMismatchError(f"expected a classification verdict, got {verdict.mode}")
    return verdict.probability(target_level)


def lexicon_similarities(doc: Document, model: PivotModel) -> dict[int, float]:
    vec = doc_vector(doc, model)
    return {level: cosine(vec, model.pivots[level]) for level in model.levels}


def lexicon_reward(doc: Document, target_level: int, model: PivotModel,
                   temperature: float) -> float:
    """Softmax over per-level pivot similarities, read at the target level.

    A zero document vector makes every similarity 0, so the softmax is the
    uniform 1/k: callers always get a total function.
    """
    sims = lexicon_similarities(doc, model)
    if target_level not in sims:
        raise UnknownLevelError(f"level {target_level} is not covered by the pivot model")
    logits = np.array([sims[level] for level in model.levels]) / temperature
    logits -= logits.max()  # stable softmax; required for tiny temperatures
    weights = np.exp(logits)
    probs = weights / weights.sum()
    return float(probs[model.levels.index(target_level)])


def consistency_reward(source: Document, generated: Document,
                       table: EmbeddingTable) -> float:
    """Greedy token alignment: each generated token claims its best cosine
    against the source tokens; negatives clamp to 0 so the mean is in [0,1]."""
    if not source.tokens:
        raise EmptySourceError("source document has no tokens")
    if not generated.tokens:
        raise EmptyGeneratedError("generated document has no tokens")
    source_matrix = np.stack(embed(source, table))
    total = 0.0
    for vec in embed(generated, table):
        best = float(np.max(source_matrix @ vec))
        total += max(best, 0.0)
    return total / len(generated.tokens)


def sentence_reward(generated: Document, target_level: int, judge,
                    cfg: RewardConfig) -> tuple[float, JudgeVerdict]:
    """Dispatch on the configured mode; returns the reward and the verdict."""
    if judge.mode != cfg.mode:
        raise ModeMismatchError(
            f"reward config wants {cfg.mode} but the judge is {judge.mode}"
        )
    verdict = judge.judge(generated)
    if cfg.mode == REGRESSION:
        return regression_reward(verdict.value, target_level, judge.scale, cfg.sigma), verdict
    return classification_reward(verdict, target_level), verdict


def total_reward(source: Document, generated: Document, target_level: int, *,
                 model: PivotModel, judge, table: EmbeddingTable,
                 cfg: RewardConfig) -> RewardBreakdown:
    """Weighted sum of the three components for one (source, generated) pair."""
    if not source.tokens:
        raise EmptySourceError("source document has no tokens")
    if not generated.tokens:
        raise EmptyGeneratedError("generated document has no tokens")
    r_sent, _ = sentence_reward(generated, target_level, judge, cfg)
    r_lex = lexicon_reward(generated, target_level, model, cfg.temperature)
    r_cons = consistency_reward(source, generated, table)
    total = cfg.lambda_sent * r_sent + cfg.lambda_lex * r_lex + cfg.lambda_cons * r_cons
    return RewardBreakdown(r_sent=r_sent, r_lex=r_lex, r_cons=r_cons, total=total)
