#!/usr/bin/env python3
"""Intensity-discrimination experiment on the planted-gradient corpus.

Builds a synthetic k-level corpus with vocabulary ladders, fits pivots and
the naive-Bayes judge, then hill-climbs random level-1 documents toward every
higher level.  Reports, per target level: how often the total reward strictly
increased, how often the judge's prediction moved monotonically and landed on
the target, and the mean reward gain.
"""

import argparse
import csv
import random
import sys

from stylemeter import (
    IntensityScale,
    Level,
    NaiveBayesClassifier,
    RewardConfig,
    RewardEngine,
    fit,
    hill_climb,
    tokenize,
)
from stylemeter.embeddings import parse_embeddings
from stylemeter.synthetic import (
    gradient_corpora,
    gradient_document,
    gradient_embeddings_text,
)


def build_engine(seed: int) -> RewardEngine:
    scale = IntensityScale(levels=tuple(Level(i, f"grade {i}") for i in (1, 2, 3, 4)))
    corpora = gradient_corpora(k=4, docs_per_level=30, seed=seed)
    return RewardEngine(
        style="sentiment",
        scale=scale,
        pivots=fit(corpora, scale),
        judge=NaiveBayesClassifier.train(corpora),
        embeddings=parse_embeddings(gradient_embeddings_text()),
        config=RewardConfig(mode="classification"),
    )


def run_trial(engine: RewardEngine, source: str, target: int, budget: int) -> dict:
    rewritten, trace = hill_climb(source, target, engine, budget)
    tokens = list(tokenize(source).tokens)
    distances = [abs(engine.judge_text(source).predicted_level - target)]
    for step in trace.steps:
        tokens[step.position] = step.after
        predicted = engine.judge_text(" ".join(tokens)).predicted_level
        distances.append(abs(predicted - target))
    return {
        "target": target,
        "edits": len(trace.steps),
        "gain": trace.final.total - trace.initial.total,
        "increased": trace.final.total > trace.initial.total,
        "monotone": all(b <= a for a, b in zip(distances, distances[1:])),
        "reached": distances[-1] == 0,
        "rewritten": rewritten,
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--budget", type=int, default=8)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--corpus-seed", type=int, default=0)
    parser.add_argument("--csv", help="write per-trial rows to this CSV file")
    args = parser.parse_args()

    engine = build_engine(args.corpus_seed)
    rng = random.Random(args.seed)
    rows = []
    for trial in range(args.trials):
        source = gradient_document(1, rng)
        for target in (2, 3, 4):
            row = run_trial(engine, source, target, args.budget)
            row["trial"] = trial
            rows.append(row)

    print(f"{args.trials} trials, budget {args.budget}, corpus seed {args.corpus_seed}")
    print(f"{'target':>6}  {'increased':>9}  {'monotone':>8}  {'reached':>7}  "
          f"{'mean gain':>9}  {'mean edits':>10}")
    for target in (2, 3, 4):
        subset = [r for r in rows if r["target"] == target]
        n = len(subset)
        print(
            f"{target:>6}  "
            f"{sum(r['increased'] for r in subset) / n:>9.2%}  "
            f"{sum(r['monotone'] for r in subset) / n:>8.2%}  "
            f"{sum(r['reached'] for r in subset) / n:>7.2%}  "
            f"{sum(r['gain'] for r in subset) / n:>9.4f}  "
            f"{sum(r['edits'] for r in subset) / n:>10.2f}"
        )

    if args.csv:
        fields = ["trial", "target", "edits", "gain", "increased", "monotone",
                  "reached", "rewritten"]
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
