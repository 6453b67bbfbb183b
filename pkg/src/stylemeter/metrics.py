"""Evaluation metrics and corpus-level report aggregation.

Per pair: word-level subsequence overlap (RG-L), intensity deviation, and the
evaluation-time reward H-Re (sentence + lexicon components, equally weighted,
consistency zeroed).  Per corpus: per-level means, macro averages, and a
target-by-predicted confusion matrix.

Level deviations in the report are computed on the per-level mean score
(|mean - target midpoint| for regression, |mean predicted level - target| for
classification), matching how the per-level summary rows are read.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .engine import RewardEngine, _doc
from .errors import EmptyGeneratedError, EvaluationPairError
from .judges import REGRESSION
from .readability import fre_delta
from .rewards import RewardConfig, lexicon_reward, sentence_reward
from .text import Document


def lcs_length(xs: tuple[str, ...], ys: tuple[str, ...]) -> int:
    """Length of the longest common subsequence (standard DP)."""
    if not xs or not ys:
        return 0
    prev = [0] * (len(ys) + 1)
    for x in xs:
        current = [0]
        for j, y in enumerate(ys, start=1):
            if x == y:
                current.append(prev[j - 1] + 1)
            else:
                current.append(max(prev[j], current[j - 1]))
        prev = current
    return prev[-1]


def rouge_l(source: Document, generated: Document) -> float:
    """``100 * LCS(source, generated) / |generated|`` over word tokens."""
    if not generated.tokens:
        raise EmptyGeneratedError("generated document has no tokens")
    return 100.0 * lcs_length(source.tokens, generated.tokens) / len(generated.tokens)


def star_delta(predicted: int, target: int) -> int:
    """Integer distance between predicted and target level."""
    return abs(predicted - target)


def h_re(doc: Document, target_level: int, *, model, judge, cfg: RewardConfig) -> float:
    """Evaluation-time reward: sentence and lexicon components at 0.5 each,
    the consistency coefficient set to 0."""
    r_sent, _ = sentence_reward(doc, target_level, judge, cfg)
    r_lex = lexicon_reward(doc, target_level, model, cfg.temperature)
    return 0.5 * r_sent + 0.5 * r_lex


@dataclass
class LevelRow:
    level: int
    label: str
    n: int = 0
    fre: float | None = None
    fre_delta: float | None = None
    star: float = 0.0
    star_delta: float = 0.0
    rouge_l: float = 0.0
    h_re: float = 0.0


@dataclass
class EvaluationReport:
    mode: str
    levels: tuple[int, ...]
    per_level: dict[int, LevelRow]
    averages: dict[str, float]
    confusion: np.ndarray = field(repr=False)

    def confusion_csv(self) -> str:
        out = io.StringIO()
        header = ["target\\predicted"] + [str(level) for level in self.levels]
        out.write(",".join(header) + "\n")
        for i, level in enumerate(self.levels):
            out.write(",".join([str(level)] + [str(int(x)) for x in self.confusion[i]]) + "\n")
        return out.getvalue()

    def records(self) -> list[dict]:
        rows = []
        for level in sorted(self.per_level):
            row = self.per_level[level]
            rows.append(
                {
                    "kind": "level",
                    "level": row.level,
                    "label": row.label,
                    "n": row.n,
                    "fre": row.fre,
                    "fre_delta": row.fre_delta,
                    "star": row.star,
                    "star_delta": row.star_delta,
                    "rouge_l": row.rouge_l,
                    "h_re": row.h_re,
                }
            )
        rows.append({"kind": "average", **self.averages})
        rows.append(
            {
                "kind": "confusion",
                "levels": list(self.levels),
                "counts": [[int(x) for x in row] for row in self.confusion],
            }
        )
        return rows

    def table(self) -> str:
        regression = self.mode == REGRESSION
        headers = ["level", "label", "n"]
        if regression:
            headers += ["FRE", "FRE_d"]
        headers += ["STAR", "STAR_d", "RG-L", "H-Re"]
        rows = []
        for level in sorted(self.per_level):
            r = self.per_level[level]
            row = [str(r.level), r.label, str(r.n)]
            if regression:
                row += [f"{r.fre:.2f}", f"{r.fre_delta:.2f}"]
            row += [f"{r.star:.2f}", f"{r.star_delta:.2f}", f"{r.rouge_l:.2f}", f"{r.h_re:.2f}"]
            rows.append(row)
        avg = ["avg", "", str(sum(r.n for r in self.per_level.values()))]
        if regression:
            avg += ["-", f"{self.averages['fre_delta']:.2f}"]
        avg += ["-", f"{self.averages['star_delta']:.2f}",
                f"{self.averages['rouge_l']:.2f}", f"{self.averages['h_re']:.2f}"]
        rows.append(avg)
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
        return "\n".join(lines) + "\n"


def evaluate(pairs: list[tuple[str | Document, str | Document, int]],
             engine: RewardEngine) -> EvaluationReport:
    """Score (source, generated, target level) pairs and aggregate a report."""
    if not pairs:
        raise EvaluationPairError(0, ValueError("no pairs to evaluate"))
    levels = engine.scale.indices
    position = {level: i for i, level in enumerate(levels)}
    confusion = np.zeros((len(levels), len(levels)), dtype=np.int64)
    acc: dict[int, dict[str, list[float]]] = {}

    for index, (source, generated, target) in enumerate(pairs):
        try:
            engine.scale.level(target)
            sdoc, gdoc = _doc(source), _doc(generated)
            verdict = engine.judge.judge(gdoc)
            overlap = rouge_l(sdoc, gdoc)
            quality = h_re(gdoc, target, model=engine.pivots, judge=engine.judge,
                           cfg=engine.config)
        except Exception as exc:
            raise EvaluationPairError(index, exc) from exc
        confusion[position[target], position[verdict.predicted_level]] += 1
        bucket = acc.setdefault(target, {"fre": [], "star": [], "rouge": [], "h_re": []})
        if verdict.mode == REGRESSION:
            bucket["fre"].append(verdict.value)
        bucket["star"].append(float(verdict.predicted_level))
        bucket["rouge"].append(overlap)
        bucket["h_re"].append(quality)

    per_level: dict[int, LevelRow] = {}
    for target, bucket in acc.items():
        row = LevelRow(level=target, label=engine.scale.level(target).label, n=len(bucket["star"]))
        if bucket["fre"]:
            row.fre = float(np.mean(bucket["fre"]))
            row.fre_delta = fre_delta(row.fre, target, engine.scale)
        row.star = float(np.mean(bucket["star"]))
        row.star_delta = abs(row.star - target)
        row.rouge_l = float(np.mean(bucket["rouge"]))
        row.h_re = float(np.mean(bucket["h_re"]))
        per_level[target] = row

    rows = list(per_level.values())
    averages = {
        "star_delta": float(np.mean([r.star_delta for r in rows])),
        "rouge_l": float(np.mean([r.rouge_l for r in rows])),
        "h_re": float(np.mean([r.h_re for r in rows])),
    }
    if all(r.fre_delta is not None for r in rows):
        averages["fre_delta"] = float(np.mean([r.fre_delta for r in rows]))
    return EvaluationReport(
        mode=engine.config.mode, levels=levels, per_level=per_level,
        averages=averages, confusion=confusion,
    )
