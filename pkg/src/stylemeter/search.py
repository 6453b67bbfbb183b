"""Reward-guided candidate reranking and greedy lexical hill-climbing.

The hill climber is a transparent stand-in for a policy-optimization loop:
at each step it proposes, for every token position, swapping the token for
the target level's style-vocabulary word with the highest embedding
similarity, then accepts the single best proposal only if it strictly
increases the total reward.  Accepted-step totals therefore form a strictly
increasing sequence, and the loop stops at the edit budget or when no
proposal improves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import RewardEngine
from .errors import UnknownLevelError
from .rewards import RewardBreakdown
from .text import tokenize


@dataclass(frozen=True)
class EditStep:
    position: int
    before: str
    after: str
    breakdown: RewardBreakdown

    def describe(self) -> str:
        return f"pos {self.position}: {self.before!r} -> {self.after!r}"


@dataclass(frozen=True)
class EditTrace:
    initial: RewardBreakdown
    steps: tuple[EditStep, ...]

    @property
    def final(self) -> RewardBreakdown:
        return self.steps[-1].breakdown if self.steps else self.initial


def rerank(candidates: list[str], source: str, target_level: int,
           engine: RewardEngine) -> list[tuple[str, RewardBreakdown]]:
    """Candidates sorted by total reward, descending; ties keep input order."""
    if not candidates:
        raise ValueError("need at least one candidate")
    scored = [(text, engine.breakdown(source, text, target_level)) for text in candidates]
    return sorted(scored, key=lambda item: -item[1].total)


class _SubstitutionProposer:
    """Per-token best style-vocabulary substitute by embedding similarity."""

    def __init__(self, engine: RewardEngine, target_level: int):
        vocab = engine.pivots.style_vocab.get(target_level)
        if vocab is None:
            raise UnknownLevelError(f"no style vocabulary for level {target_level}")
        self._words = list(vocab)
        self._table = engine.embeddings
        self._matrix = (
            np.stack([self._table.vector(w) for w in self._words]) if self._words else None
        )
        self._cache: dict[str, str | None] = {}

    def substitute(self, token: str) -> str | None:
        if token in self._cache:
            return self._cache[token]
        best = None
        if self._matrix is not None:
            sims = self._matrix @ self._table.vector(token)
            # max similarity first, lexicographically smallest word on ties
            order = sorted(range(len(self._words)), key=lambda i: (-sims[i], self._words[i]))
            for i in order:
                if self._words[i] != token:
                    best = self._words[i]
                    break
        self._cache[token] = best
        return best


def hill_climb(source: str, target_level: int, engine: RewardEngine,
               budget: int) -> tuple[str, EditTrace]:
    """Greedy single-token substitution toward the target level.

    Returns the rewritten text and the trace of accepted edits; the source
    comes back unchanged (empty trace) when no substitution improves the
    total reward.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    tokens = list(tokenize(source).tokens)
    if not tokens:
        raise ValueError("source has no word tokens")
    proposer = _SubstitutionProposer(engine, target_level)

    initial = engine.breakdown(source, " ".join(tokens), target_level)
    current = initial
    steps: list[EditStep] = []

    for _ in range(budget):
        best_step: EditStep | None = None
        for position, token in enumerate(tokens):
            word = proposer.substitute(token)
            if word is None:
                continue
            candidate_tokens = tokens.copy()
            candidate_tokens[position] = word
            breakdown = engine.breakdown(source, " ".join(candidate_tokens), target_level)
            if breakdown.total > current.total and (
                best_step is None or breakdown.total > best_step.breakdown.total
            ):
                best_step = EditStep(position=position, before=token, after=word,
                                     breakdown=breakdown)
        if best_step is None:
            break
        tokens[best_step.position] = best_step.after
        current = best_step.breakdown
        steps.append(best_step)

    return " ".join(tokens), EditTrace(initial=initial, steps=tuple(steps))
