"""Pseudo-parallel data synthesis: prompt, judge-filter, retry, persist.

For every sampled source text the pipeline requests one rewrite per target
level (every level except the source's own), keeps a rewrite only if the
judge predicts exactly the requested level, retries up to ``max_attempts``
times with the same prompt, and discards the source for that target after the
last failure.  Accepted triples append to a JSONL dataset; discards append to
a sidecar audit log with their full failure transcripts.  Both files double
as the resume cursor: a task found in either file is never re-run.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    EmptyCorpusError,
    JudgeError,
    MalformedRecordError,
    UnknownStyleError,
)
from .generation import DEFAULT_TEMPERATURE, GeneratorClient
from .judges import JudgeVerdict
from .pivots import Corpus
from .scales import IntensityScale
from .text import tokenize

DEFAULT_MAX_ATTEMPTS = 10
READABILITY = "readability"
SENTIMENT = "sentiment"

_READABILITY_PROMPT = """Rewrite the following text to match the {label} readability level (Flesch Reading Ease score {band}).

Adjust vocabulary, sentence length, and complexity to strongly reflect the target readability level.

For Elementary, use very simple words and short sentences.

For Middle School, use moderately simple words and slightly longer sentences.

For High School, use more complex words and varied sentence structures.

For College, use advanced vocabulary and complex sentence structures.

Keep the core meaning and content consistent, but adapt the style to be natural and concise.

Input: {text}

Output:"""

_SENTIMENT_PROMPT = """Rewrite the following {source_rating} review into an {target_rating} review.

Transform the tone and wording to reflect the target rating's sentiment strongly.

For 5 Stars, use highly positive words like "amazing" or "outstanding";

for 1 Star, use strongly negative words like "terrible" or "awful".

Keep core aspects (food, service, atmosphere) consistent, but adjust their descriptions to match the target rating.

Ensure the output is natural, realistic, concise (similar length to the input), and avoids vague terms like "okay" or "fine".

Input: {text}

Output:"""


def _band_text(scale: IntensityScale, level: int) -> str:
    band = scale.level(level).band
    if band is None:
        return ""
    lo, hi = band
    top = max(b.band[1] for b in scale.levels if b.band is not None)
    comparator = "≤" if hi >= top else "<"
    return f"{lo:g} ≤ FRE {comparator} {hi:g}"


def _star_text(level: int) -> str:
    return "1 Star" if level == 1 else f"{level} Stars"


def render_prompt(source: str, source_level: int, target_level: int,
                  scale: IntensityScale, style: str) -> str:
    """Deterministic prompt for one (source, target level) request."""
    if style == READABILITY:
        return _READABILITY_PROMPT.format(
            label=scale.level(target_level).label,
            band=_band_text(scale, target_level),
            text=source,
        )
    if style == SENTIMENT:
        return _SENTIMENT_PROMPT.format(
            source_rating=_star_text(source_level),
            target_rating=_star_text(target_level),
            text=source,
        )
    raise UnknownStyleError(f"unknown style {style!r}")


@dataclass(frozen=True)
class ParallelTriple:
    source: str
    source_level: int
    target_level: int
    generated: str
    attempts: int
    judge: JudgeVerdict | None = None

    def to_record(self) -> dict:
        record = {
            "source": self.source,
            "source_level": self.source_level,
            "target_level": self.target_level,
            "generated": self.generated,
            "attempts": self.attempts,
        }
        if self.judge is not None:
            record["judge"] = self.judge.summary()
        return record


@dataclass(frozen=True)
class Discarded:
    source: str
    source_level: int
    target_level: int
    attempts: int
    transcripts: tuple[str, ...]

    def to_record(self) -> dict:
        return {
            "source": self.source,
            "source_level": self.source_level,
            "target_level": self.target_level,
            "attempts": self.attempts,
            "transcripts": list(self.transcripts),
        }


def synthesize_pair(source: str, source_level: int, target_level: int, *,
                    scale: IntensityScale, style: str, generator: GeneratorClient,
                    judge, max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                    temperature: float = DEFAULT_TEMPERATURE) -> ParallelTriple | Discarded:
    """Generate-and-filter loop for one (source, target) pair."""
    prompt = render_prompt(source, source_level, target_level, scale, style)
    transcripts: list[str] = []
    for attempt in range(1, max_attempts + 1):
        generated = generator.complete(prompt, temperature=temperature)
        transcripts.append(generated)
        doc = tokenize(generated)
        if not doc.tokens:
            continue  # unjudgeable output counts as a failed attempt
        try:
            verdict = judge.judge(doc)
        except Exception as exc:
            raise JudgeError(f"judge failed on generated text: {exc}") from exc
        if verdict.predicted_level == target_level:
            return ParallelTriple(
                source=source,
                source_level=source_level,
                target_level=target_level,
                generated=generated,
                attempts=attempt,
                judge=verdict,
            )
    return Discarded(
        source=source,
        source_level=source_level,
        target_level=target_level,
        attempts=max_attempts,
        transcripts=tuple(transcripts),
    )


@dataclass
class SynthesisStats:
    accepted: dict[tuple[int, int], int] = field(default_factory=dict)
    discarded: dict[tuple[int, int], int] = field(default_factory=dict)
    skipped: int = 0

    def count(self, source_level: int, target_level: int, ok: bool) -> None:
        cell = (source_level, target_level)
        bucket = self.accepted if ok else self.discarded
        bucket[cell] = bucket.get(cell, 0) + 1

    @property
    def n_accepted(self) -> int:
        return sum(self.accepted.values())

    @property
    def n_discarded(self) -> int:
        return sum(self.discarded.values())

    def to_dict(self) -> dict:
        return {
            "accepted": {f"{s}->{t}": n for (s, t), n in sorted(self.accepted.items())},
            "discarded": {f"{s}->{t}": n for (s, t), n in sorted(self.discarded.items())},
            "n_accepted": self.n_accepted,
            "n_discarded": self.n_discarded,
            "skipped": self.skipped,
        }


def discard_log_path(dataset_path: str | Path) -> Path:
    return Path(str(dataset_path) + ".discards")


def _task_key(source: str, source_level: int, target_level: int) -> tuple[str, int, int]:
    return (source, source_level, target_level)


def _completed_keys(dataset_path: Path) -> set[tuple[str, int, int]]:
    keys: set[tuple[str, int, int]] = set()
    if dataset_path.exists():
        for triple in read_dataset(dataset_path):
            keys.add(_task_key(triple.source, triple.source_level, triple.target_level))
    log = discard_log_path(dataset_path)
    if log.exists():
        with log.open(encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    record = json.loads(line)
                    keys.add(_task_key(record["source"], record["source_level"],
                                       record["target_level"]))
    return keys


def synthesize_dataset(corpora: list[Corpus], scale: IntensityScale, *,
                       style: str, generator: GeneratorClient, judge,
                       out_path: str | Path, quota: int | None = None,
                       max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                       temperature: float = DEFAULT_TEMPERATURE,
                       seed: int = 42, concurrency: int = 1,
                       resume: bool = True) -> SynthesisStats:
    """Run synthesis for every sampled source against all other levels.

    Sources are sampled uniformly without replacement up to ``quota`` per
    level.  Tasks run in a fixed deterministic order (results append in that
    order even with ``concurrency`` > 1), and tasks already present in the
    dataset or discard log are skipped, so an interrupted run can resume
    without duplicates.  With ``resume=False`` both files start fresh.
    """
    if not corpora:
        raise EmptyCorpusError("no corpora to synthesize from")
    out_path = Path(out_path)
    rng = random.Random(seed)

    tasks: list[tuple[str, int, int]] = []
    for corpus in sorted(corpora, key=lambda c: c.level):
        texts = []
        seen = set()
        for doc in corpus.documents:
            if doc.raw not in seen:
                seen.add(doc.raw)
                texts.append(doc.raw)
        if not texts:
            raise EmptyCorpusError(f"level {corpus.level} corpus has no documents")
        if quota is not None and quota < len(texts):
            texts = rng.sample(texts, quota)
        for text in texts:
            for target in scale.indices:
                if target != corpus.level:
                    tasks.append((text, corpus.level, target))

    stats = SynthesisStats()
    done = _completed_keys(out_path) if resume else set()
    pending = []
    for task in tasks:
        if _task_key(*task) in done:
            stats.skipped += 1
        else:
            pending.append(task)

    def run(task: tuple[str, int, int]) -> ParallelTriple | Discarded:
        source, source_level, target_level = task
        return synthesize_pair(
            source, source_level, target_level,
            scale=scale, style=style, generator=generator, judge=judge,
            max_attempts=max_attempts, temperature=temperature,
        )

    out_path.parent.mkdir(parents=True, exist_ok=True)
    file_mode = "a" if resume else "w"
    with out_path.open(file_mode, encoding="utf-8") as dataset, \
            discard_log_path(out_path).open(file_mode, encoding="utf-8") as discards:
        if concurrency <= 1:
            results = map(run, pending)
        else:
            executor = ThreadPoolExecutor(max_workers=concurrency)
            results = executor.map(run, pending)
        try:
            for result in results:
                ok = isinstance(result, ParallelTriple)
                target_file = dataset if ok else discards
                target_file.write(json.dumps(result.to_record(), ensure_ascii=False) + "\n")
                target_file.flush()
                stats.count(result.source_level, result.target_level, ok)
        finally:
            if concurrency > 1:
                executor.shutdown(wait=False, cancel_futures=True)
    return stats


_REQUIRED_FIELDS = ("source", "source_level", "target_level", "generated", "attempts")


def write_dataset(triples: list[ParallelTriple], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for triple in triples:
            fh.write(json.dumps(triple.to_record(), ensure_ascii=False) + "\n")


def read_dataset(path: str | Path) -> list[ParallelTriple]:
    triples: list[ParallelTriple] = []
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecordError(line_no, f"not valid JSON: {exc}") from exc
            missing = [f for f in _REQUIRED_FIELDS if f not in record]
            if missing:
                raise MalformedRecordError(line_no, f"missing fields: {', '.join(missing)}")
            judge = None
            if "judge" in record:
                summary = record["judge"]
                judge = JudgeVerdict(
                    mode=summary["mode"],
                    predicted_level=int(summary["predicted_level"]),
                    value=summary.get("value"),
                    distribution=tuple(summary["distribution"]) if "distribution" in summary else None,
                    levels=tuple(summary["levels"]) if "levels" in summary else None,
                )
            try:
                triples.append(
                    ParallelTriple(
                        source=record["source"],
                        source_level=int(record["source_level"]),
                        target_level=int(record["target_level"]),
                        generated=record["generated"],
                        attempts=int(record["attempts"]),
                        judge=judge,
                    )
                )
            except (TypeError, ValueError) as exc:
                raise MalformedRecordError(line_no, f"bad field value: {exc}") from exc
    return triples
