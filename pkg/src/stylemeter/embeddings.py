"""Static token embeddings behind a small provider contract.

Vectors are L2-normalized at load time so that dot products are cosines in
[-1, 1]; the consistency reward then clamps negatives to get a [0, 1] score.
Out-of-vocabulary tokens earn either the zero vector (default, conservative)
or a deterministic hash-bucket unit vector.

File format: one record per line, token then ``dim`` decimal floats separated
by single spaces, UTF-8, LF line endings.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyFileError, InconsistentDimError, MalformedLineError

OOV_ZERO = "zero-vector"
OOV_HASH = "hash-bucket"


def _hash_vector(token: str, dim: int) -> np.ndarray:
    seed = int.from_bytes(hashlib.sha256(token.encode("utf-8")).digest()[:8], "big")
    vec = np.random.default_rng(seed).standard_normal(dim)
    norm = np.linalg.norm(vec)
    if norm == 0.0:  # astronomically unlikely; regenerate deterministically
        vec = np.ones(dim)
        norm = np.linalg.norm(vec)
    return vec / norm


@dataclass(frozen=True)
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray] = field(repr=False)
    oov_policy: str = OOV_ZERO

    def vector(self, token: str) -> np.ndarray:
        vec = self.vectors.get(token)
        if vec is not None:
            return vec
        if self.oov_policy == OOV_HASH:
            return _hash_vector(token, self.dim)
        return np.zeros(self.dim, dtype=np.float64)

    def __contains__(self, token: str) -> bool:
        return token in self.vectors


def load_embeddings(path: str | Path, oov_policy: str = OOV_ZERO) -> EmbeddingTable:
    text = Path(path).read_text(encoding="utf-8")
    return parse_embeddings(text, oov_policy=oov_policy)


def parse_embeddings(text: str, oov_policy: str = OOV_ZERO) -> EmbeddingTable:
    if oov_policy not in (OOV_ZERO, OOV_HASH):
        raise ValueError(f"unknown oov policy {oov_policy!r}")
    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line:
            continue
        fields = line.split(" ")
        if len(fields) < 2:
            raise MalformedLineError(line_no, "expected a token followed by floats")
        token = fields[0]
        try:
            values = np.array([float(x) for x in fields[1:]], dtype=np.float64)
        except ValueError as exc:
            raise MalformedLineError(line_no, f"bad float: {exc}") from exc
        if dim is None:
            dim = len(values)
        elif len(values) != dim:
            raise InconsistentDimError(
                f"line {line_no} has {len(values)} floats, expected {dim}"
            )
        norm = np.linalg.norm(values)
        if norm == 0.0:
            raise MalformedLineError(line_no, "zero vector cannot be normalized")
        vectors[token] = values / norm  # duplicates: last one wins
    if dim is None or not vectors:
        raise EmptyFileError("embedding file has no records")
    return EmbeddingTable(dim=dim, vectors=vectors, oov_policy=oov_policy)


def embed(doc, table: EmbeddingTable) -> list[np.ndarray]:
    """One vector per token, in token order."""
    return [table.vector(token) for token in doc.tokens]
