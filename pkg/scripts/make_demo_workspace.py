#!/usr/bin/env python3
"""Write a self-contained demo workspace for the CLI walkthrough.

Creates per-level corpus files, an embedding file, an engine config, and a
small predictions file, so that every subcommand can be exercised:

    python scripts/make_demo_workspace.py --out demo
    stylemeter fit-pivots  --config demo/engine.json
    stylemeter train-judge --config demo/engine.json
    stylemeter reward      --config demo/engine.json \
        --source "the report was big." --generated "the report was considerable." --target 4
    stylemeter transfer    --config demo/engine.json --target 4 \
        --text "the report was big and help team bad."
    stylemeter evaluate    --config demo/engine.json --input demo/predictions.jsonl
    stylemeter serve       --config demo/engine.json --bind 127.0.0.1:8080
"""

import argparse
import json
import random
import sys
from pathlib import Path

from stylemeter.synthetic import (
    gradient_corpora,
    gradient_document,
    gradient_embeddings_text,
    readability_corpora,
    readability_embeddings_text,
    readability_sentence,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="demo", help="workspace directory")
    parser.add_argument("--docs-per-level", type=int, default=30)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    corpora = gradient_corpora(k=4, docs_per_level=args.docs_per_level, seed=args.seed)
    for corpus in corpora:
        path = out / f"level{corpus.level}.txt"
        path.write_text("\n".join(doc.raw for doc in corpus.documents) + "\n",
                        encoding="utf-8")
    (out / "vectors.txt").write_text(gradient_embeddings_text(), encoding="utf-8")

    config = {
        "version": 1,
        "style": "sentiment",
        "scale": {
            "version": 1,
            "levels": [{"index": i, "label": f"grade {i}"} for i in (1, 2, 3, 4)],
        },
        "corpus_paths": {str(i): f"level{i}.txt" for i in (1, 2, 3, 4)},
        "pivots_path": "pivots.bin",
        "classifier_path": "judge.bin",
        "embeddings_path": "vectors.txt",
        "reward": {"mode": "classification"},
        "dataset_path": "dataset.jsonl",
        "generator": {
            "base_url": "http://localhost:9999/v1",
            "model": "any-chat-model",
            "temperature": 0.7,
        },
    }
    (out / "engine.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")

    rng = random.Random(args.seed + 1)
    rows = []
    for target in (1, 2, 3, 4):
        for _ in range(3):
            rows.append(
                {
                    "source": gradient_document(1, rng),
                    "generated": gradient_document(target, rng),
                    "target_level": target,
                }
            )
    (out / "predictions.jsonl").write_text(
        "\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8"
    )

    # a second, regression-mode workspace over graded sentence complexity
    graded = readability_corpora(docs_per_level=args.docs_per_level, seed=args.seed)
    for corpus in graded:
        path = out / f"graded{corpus.level}.txt"
        path.write_text("\n".join(doc.raw for doc in corpus.documents) + "\n",
                        encoding="utf-8")
    (out / "graded_vectors.txt").write_text(readability_embeddings_text(),
                                            encoding="utf-8")
    readability_config = {
        "version": 1,
        "style": "readability",
        "corpus_paths": {str(i): f"graded{i}.txt" for i in (1, 2, 3, 4)},
        "pivots_path": "graded_pivots.bin",
        "embeddings_path": "graded_vectors.txt",
        "reward": {"mode": "regression"},
    }
    (out / "readability.json").write_text(
        json.dumps(readability_config, indent=2) + "\n", encoding="utf-8"
    )
    graded_rows = []
    for target in (1, 2, 3, 4):
        for _ in range(3):
            graded_rows.append(
                {
                    "source": readability_sentence(1, rng),
                    "generated": readability_sentence(target, rng),
                    "target_level": target,
                }
            )
    (out / "graded_predictions.jsonl").write_text(
        "\n".join(json.dumps(r) for r in graded_rows) + "\n", encoding="utf-8"
    )

    print(f"demo workspace written to {out}/")
    print("next: stylemeter fit-pivots --config", out / "engine.json")
    print("  or: stylemeter fit-pivots --config", out / "readability.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
