"""Intensity judges: the regression (reading-ease) judge and a trainable
multinomial naive-Bayes classifier.

Both judges answer through the same ``JudgeVerdict`` contract, so the reward
engine, the synthesis filter, and the evaluation report are judge-agnostic;
any external classifier can be plugged in by producing the same verdict.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import (
    CorruptPayloadError,
    EmptyCorpusError,
    SingleLevelError,
    UnknownLevelError,
)
from .pivots import Corpus, _decode_payload
from .readability import fre_score, level_of
from .scales import IntensityScale
from .text import Document

CLASSIFIER_FORMAT = "stylemeter-nb"

REGRESSION = "regression"
CLASSIFICATION = "classification"


@dataclass(frozen=True)
class JudgeVerdict:
    mode: str
    predicted_level: int
    value: float | None = None
    distribution: tuple[float, ...] | None = None
    levels: tuple[int, ...] | None = None

    def probability(self, level: int) -> float:
        if self.distribution is None or self.levels is None:
            raise UnknownLevelError("verdict carries no distribution")
        try:
            return self.distribution[self.levels.index(level)]
        except ValueError:
            raise UnknownLevelError(f"level {level} not covered by the verdict") from None

    def summary(self) -> dict:
        out: dict = {"mode": self.mode, "predicted_level": self.predicted_level}
        if self.value is not None:
            out["value"] = self.value
        if self.distribution is not None:
            out["distribution"] = list(self.distribution)
            out["levels"] = list(self.levels)
        return out


class RegressionJudge:
    """Scores text with the reading-ease formula and band-maps the score."""

    mode = REGRESSION

    def __init__(self, scale: IntensityScale):
        self.scale = scale

    def judge(self, doc: Document) -> JudgeVerdict:
        score = fre_score(doc)
        return JudgeVerdict(
            mode=REGRESSION, predicted_level=level_of(score, self.scale), value=score
        )


class NaiveBayesClassifier:
    """Multinomial naive Bayes with add-one smoothing over the corpus
    vocabulary.  Deterministic given the training corpora."""

    mode = CLASSIFICATION

    def __init__(self, tokens: tuple[str, ...], levels: tuple[int, ...],
                 log_priors: np.ndarray, log_cond: np.ndarray):
        self.tokens = tokens
        self.vocabulary = {token: i for i, token in enumerate(tokens)}
        self.levels = levels
        self.log_priors = np.asarray(log_priors, dtype=np.float64)
        self.log_cond = np.asarray(log_cond, dtype=np.float64)

    @classmethod
    def train(cls, corpora: list[Corpus]) -> "NaiveBayesClassifier":
        if len(corpora) < 2:
            raise SingleLevelError(f"need at least two labeled corpora, got {len(corpora)}")
        ordered = sorted(corpora, key=lambda c: c.level)
        for corpus in ordered:
            if not corpus.documents:
                raise EmptyCorpusError(f"level {corpus.level} corpus has no documents")
        tokens = tuple(sorted({tok for c in ordered for doc in c.documents for tok in doc.tokens}))
        index = {token: i for i, token in enumerate(tokens)}
        levels = tuple(c.level for c in ordered)
        n_docs = sum(len(c.documents) for c in ordered)
        log_priors = np.array(
            [np.log(len(c.documents) / n_docs) for c in ordered], dtype=np.float64
        )
        log_cond = np.zeros((len(levels), len(tokens)), dtype=np.float64)
        for row, corpus in enumerate(ordered):
            counts = Counter(tok for doc in corpus.documents for tok in doc.tokens)
            total = sum(counts.values())
            denom = total + len(tokens)
            for token, i in index.items():
                log_cond[row, i] = np.log((counts[token] + 1) / denom)
        return cls(tokens=tokens, levels=levels, log_priors=log_priors, log_cond=log_cond)

    def posterior(self, doc: Document) -> np.ndarray:
        """Posterior over levels; out-of-vocabulary tokens are skipped, so a
        fully OOV (or empty) document falls back to the class priors."""
        log_post = self.log_priors.copy()
        for token in doc.tokens:
            i = self.vocabulary.get(token)
            if i is not None:
                log_post += self.log_cond[:, i]
        log_post -= log_post.max()
        post = np.exp(log_post)
        return post / post.sum()

    def judge(self, doc: Document) -> JudgeVerdict:
        post = self.posterior(doc)
        predicted = self.levels[int(np.argmax(post))]  # argmax ties -> lowest level
        return JudgeVerdict(
            mode=CLASSIFICATION,
            predicted_level=predicted,
            distribution=tuple(float(p) for p in post),
            levels=self.levels,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, NaiveBayesClassifier):
            return NotImplemented
        return (
            self.tokens == other.tokens
            and self.levels == other.levels
            and np.array_equal(self.log_priors, other.log_priors)
            and np.array_equal(self.log_cond, other.log_cond)
        )

    def to_bytes(self) -> bytes:
        payload = {
            "format": CLASSIFIER_FORMAT,
            "version": 1,
            "tokens": list(self.tokens),
            "levels": list(self.levels),
            "log_priors": self.log_priors.tolist(),
            "log_cond": [row.tolist() for row in self.log_cond],
        }
        return json.dumps(payload, ensure_ascii=False).encode("utf-8")

    @classmethod
    def from_bytes(cls, data: bytes) -> "NaiveBayesClassifier":
        payload = _decode_payload(data, CLASSIFIER_FORMAT)
        try:
            return cls(
                tokens=tuple(payload["tokens"]),
                levels=tuple(int(x) for x in payload["levels"]),
                log_priors=np.asarray(payload["log_priors"], dtype=np.float64),
                log_cond=np.asarray(payload["log_cond"], dtype=np.float64),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptPayloadError(f"classifier payload is incomplete: {exc}") from exc


def judge_regression(doc: Document, scale: IntensityScale) -> JudgeVerdict:
    return RegressionJudge(scale).judge(doc)


def train_classifier(corpora: list[Corpus]) -> NaiveBayesClassifier:
    return NaiveBayesClassifier.train(corpora)


def classify(doc: Document, clf: NaiveBayesClassifier) -> JudgeVerdict:
    return clf.judge(doc)
