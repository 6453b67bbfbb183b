"""TF-IDF pivot model fitted over the per-level non-parallel corpora.

Each intensity level gets a pivot vector: the TF-IDF vector of the single
mega-document formed by concatenating all of that level's documents.  IDF is
computed over the individual documents of every level (smoothed,
``ln((1+N)/(1+df)) + 1``) so it stays meaningful with only k mega-documents.
TF is the raw count normalized by document length.  No stop-word removal.

The per-level style vocabulary is the (up to) 1000 tokens with the highest
TF-IDF weight in that level's pivot, ties broken lexicographically.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import (
    CorruptPayloadError,
    EmptyCorpusError,
    SingleLevelError,
    UnknownLevelError,
    VersionMismatchError,
)
from .scales import IntensityScale
from .text import Document

MODEL_FORMAT = "stylemeter-pivots"
MODEL_VERSION = 1
STYLE_VOCAB_SIZE = 1000


@dataclass(frozen=True)
class Corpus:
    """One intensity level's non-parallel training texts."""

    level: int
    documents: tuple[Document, ...]


class PivotModel:
    """Fitted TF-IDF state: vocabulary, IDF, per-level pivots, style vocab."""

    def __init__(
        self,
        tokens: tuple[str, ...],
        idf: np.ndarray,
        pivots: dict[int, np.ndarray],
        style_vocab: dict[int, tuple[str, ...]],
    ):
        self.tokens = tokens
        self.vocabulary = {token: i for i, token in enumerate(tokens)}
        self.idf = np.asarray(idf, dtype=np.float64)
        self.pivots = {level: np.asarray(vec, dtype=np.float64) for level, vec in pivots.items()}
        self.style_vocab = dict(style_vocab)

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(sorted(self.pivots))

    def pivot(self, level: int) -> np.ndarray:
        try:
            return self.pivots[level]
        except KeyError:
            raise UnknownLevelError(f"no pivot for level {level}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, PivotModel):
            return NotImplemented
        return (
            self.tokens == other.tokens
            and np.array_equal(self.idf, other.idf)
            and self.levels == other.levels
            and all(np.array_equal(self.pivots[lvl], other.pivots[lvl]) for lvl in self.levels)
            and self.style_vocab == other.style_vocab
        )

    def to_bytes(self) -> bytes:
        payload = {
            "format": MODEL_FORMAT,
            "version": MODEL_VERSION,
            "tokens": list(self.tokens),
            "idf": self.idf.tolist(),
            "levels": list(self.levels),
            "pivots": {str(level): self.pivots[level].tolist() for level in self.levels},
            "style_vocab": {str(level): list(self.style_vocab[level]) for level in self.levels},
        }
        return json.dumps(payload, ensure_ascii=False).encode("utf-8")

    @classmethod
    def from_bytes(cls, data: bytes) -> "PivotModel":
        payload = _decode_payload(data, MODEL_FORMAT)
        try:
            tokens = tuple(payload["tokens"])
            idf = np.asarray(payload["idf"], dtype=np.float64)
            pivots = {
                int(level): np.asarray(vec, dtype=np.float64)
                for level, vec in payload["pivots"].items()
            }
            style_vocab = {
                int(level): tuple(words) for level, words in payload["style_vocab"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptPayloadError(f"pivot model payload is incomplete: {exc}") from exc
        if idf.shape != (len(tokens),) or any(vec.shape != (len(tokens),) for vec in pivots.values()):
            raise CorruptPayloadError("pivot model vectors disagree with vocabulary size")
        return cls(tokens=tokens, idf=idf, pivots=pivots, style_vocab=style_vocab)


def _decode_payload(data: bytes, expected_format: str) -> dict:
    """Shared decoder for the versioned single-JSON model files."""
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorruptPayloadError(f"payload is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != expected_format:
        raise CorruptPayloadError(f"payload is not a {expected_format} file")
    if payload.get("version") != MODEL_VERSION:
        raise VersionMismatchError(
            f"unsupported {expected_format} version {payload.get('version')!r}"
        )
    return payload


def fit(corpora: list[Corpus], scale: IntensityScale) -> PivotModel:
    """Fit vocabulary, IDF, pivot vectors and style vocabularies."""
    if len(corpora) < 2:
        raise SingleLevelError(f"need at least two corpora, got {len(corpora)}")
    levels = sorted(corpus.level for corpus in corpora)
    if levels != list(scale.indices):
        raise EmptyCorpusError(
            f"corpora levels {levels} do not cover the scale levels {list(scale.indices)}"
        )

    all_docs: list[Document] = []
    mega: dict[int, list[str]] = {}
    for corpus in sorted(corpora, key=lambda c: c.level):
        if not corpus.documents:
            raise EmptyCorpusError(f"level {corpus.level} corpus has no documents")
        tokens = [tok for doc in corpus.documents for tok in doc.tokens]
        if not tokens:
            raise EmptyCorpusError(f"level {corpus.level} corpus has no word tokens")
        mega[corpus.level] = tokens
        all_docs.extend(corpus.documents)

    df = Counter()
    for doc in all_docs:
        df.update(set(doc.tokens))
    tokens = tuple(sorted(df))
    index = {token: i for i, token in enumerate(tokens)}
    n_docs = len(all_docs)
    idf = np.array(
        [math.log((1 + n_docs) / (1 + df[token])) + 1.0 for token in tokens], dtype=np.float64
    )

    pivots: dict[int, np.ndarray] = {}
    style_vocab: dict[int, tuple[str, ...]] = {}
    for level, level_tokens in mega.items():
        counts = Counter(level_tokens)
        vec = np.zeros(len(tokens), dtype=np.float64)
        total = len(level_tokens)
        for token, count in counts.items():
            i = index[token]
            vec[i] = (count / total) * idf[i]
        pivots[level] = vec
        ranked = sorted(
            (token for token in counts if vec[index[token]] > 0.0),
            key=lambda token: (-vec[index[token]], token),
        )
        style_vocab[level] = tuple(ranked[:STYLE_VOCAB_SIZE])

    return PivotModel(tokens=tokens, idf=idf, pivots=pivots, style_vocab=style_vocab)


def doc_vector(doc: Document, model: PivotModel) -> np.ndarray:
    """TF-IDF vector of one document under the fitted model's IDF.

    Out-of-vocabulary tokens contribute nothing; a fully out-of-vocabulary
    (or empty) document yields the zero vector.
    """
    vec = np.zeros(len(model.tokens), dtype=np.float64)
    if not doc.tokens:
        return vec
    counts = Counter(doc.tokens)
    total = len(doc.tokens)
    for token, count in counts.items():
        i = model.vocabulary.get(token)
        if i is not None:
            vec[i] = (count / total) * model.idf[i]
    return vec


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity, defined as 0.0 when either vector is zero."""
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def serialize(model: PivotModel) -> bytes:
    return model.to_bytes()


def deserialize(data: bytes) -> PivotModel:
    return PivotModel.from_bytes(data)
