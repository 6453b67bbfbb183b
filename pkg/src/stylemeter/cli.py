"""Operator command line.

Every subcommand is a thin shell over a library call:

* ``fit-pivots``   fit the TF-IDF pivot model from the per-level corpora
* ``train-judge``  train the naive-Bayes intensity classifier
* ``score``        judge one text (reading-ease score or class posterior)
* ``reward``       full reward breakdown for a (source, generated, target)
* ``synthesize``   run the generate-and-filter dataset pipeline
* ``evaluate``     score a predictions file into a report table
* ``transfer``     reward-guided hill-climb rewrite toward a target level
* ``serve``        run the HTTP reward service

Exit codes: 0 success, 1 domain error, 2 usage error.  Diagnostics go to
stderr; data goes to stdout or to files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import datagen, metrics, pivots, search, service
from .config import EngineConfig
from .errors import StylemeterError
from .generation import ChatCompletionsClient
from .judges import CLASSIFICATION, REGRESSION, NaiveBayesClassifier, RegressionJudge
from .text import tokenize

FORMAT_TEXT = "text"
FORMAT_RECORDS = "records"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stylemeter",
        description="Style-intensity rewards, metrics and data synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--config", help="engine config JSON file")
        p.add_argument("--style", choices=["readability", "sentiment"])
        p.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_RECORDS],
                       default=FORMAT_TEXT, help="output format")
        p.add_argument("--sigma", type=float, help="regression reward width")
        p.add_argument("--temperature", type=float, help="lexicon softmax temperature")
        p.add_argument("--weights", help="reward weights as l1,l2,l3")
        return p

    p = common(sub.add_parser("fit-pivots", help="fit the TF-IDF pivot model"))
    p.add_argument("--corpus", action="append", default=[], metavar="LEVEL=PATH",
                   help="per-level corpus file (repeatable); overrides config")
    p.add_argument("--out", help="output model path (default: config pivots_path)")

    p = common(sub.add_parser("train-judge", help="train the intensity classifier"))
    p.add_argument("--corpus", action="append", default=[], metavar="LEVEL=PATH")
    p.add_argument("--out", help="output classifier path (default: config classifier_path)")

    p = common(sub.add_parser("score", help="judge one text"))
    p.add_argument("--text", help="text to judge (default: read stdin)")

    p = common(sub.add_parser("reward", help="reward breakdown for one pair"))
    p.add_argument("--source", required=True)
    p.add_argument("--generated", required=True)
    p.add_argument("--target", type=int, required=True, help="target level index")

    p = common(sub.add_parser("synthesize", help="synthesize the parallel dataset"))
    p.add_argument("--out", help="dataset path (default: config dataset_path)")
    p.add_argument("--quota", type=int, help="sources sampled per level")
    p.add_argument("--max-attempts", type=int, default=datagen.DEFAULT_MAX_ATTEMPTS)
    p.add_argument("--concurrency", type=int, default=1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-resume", action="store_true", help="ignore existing progress")

    p = common(sub.add_parser("evaluate", help="evaluate a predictions file"))
    p.add_argument("--input", required=True,
                   help="JSONL with fields source, generated, target_level")
    p.add_argument("--confusion-csv", help="write the confusion matrix here")

    p = common(sub.add_parser("transfer", help="hill-climb toward a target level"))
    p.add_argument("--text", help="source text (default: read stdin)")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=int, default=5, help="maximum accepted edits")

    p = common(sub.add_parser("serve", help="run the reward service"))
    p.add_argument("--bind", default="127.0.0.1:8080")

    return parser


def _load_config(args) -> EngineConfig:
    cfg = EngineConfig.from_file(args.config) if args.config else EngineConfig()
    if args.style and args.style != cfg.style:
        default_mode = REGRESSION if args.style == "readability" else CLASSIFICATION
        cfg = replace(cfg, style=args.style, scale=None)
        cfg = cfg.with_reward(mode=default_mode)
    overrides = {}
    if args.sigma is not None:
        overrides["sigma"] = args.sigma
    if args.temperature is not None:
        overrides["temperature"] = args.temperature
    if args.weights:
        parts = args.weights.split(",")
        if len(parts) != 3:
            raise StylemeterError("--weights wants three comma-separated numbers")
        overrides.update(
            lambda_sent=float(parts[0]), lambda_lex=float(parts[1]),
            lambda_cons=float(parts[2]),
        )
    if overrides:
        cfg = cfg.with_reward(**overrides)
    return cfg


def _corpora(cfg: EngineConfig, args):
    if getattr(args, "corpus", None):
        paths = {}
        for item in args.corpus:
            level, _, path = item.partition("=")
            if not path:
                raise StylemeterError(f"--corpus wants LEVEL=PATH, got {item!r}")
            paths[int(level)] = path
        cfg = replace(cfg, corpus_paths=paths)
    return cfg.load_corpora()


def _read_text(args) -> str:
    if args.text is not None:
        return args.text
    return sys.stdin.read()


def _emit(payload: dict, args, text_lines: list[str]) -> None:
    if args.format == FORMAT_RECORDS:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _cmd_fit_pivots(args) -> int:
    cfg = _load_config(args)
    corpora = _corpora(cfg, args)
    model = pivots.fit(corpora, cfg.resolved_scale())
    out = args.out or cfg.pivots_path
    if not out:
        raise StylemeterError("no output path: pass --out or set pivots_path in the config")
    Path(out).write_bytes(model.to_bytes())
    print(f"wrote pivot model for levels {list(model.levels)} to {out}", file=sys.stderr)
    return 0


def _cmd_train_judge(args) -> int:
    cfg = _load_config(args)
    corpora = _corpora(cfg, args)
    clf = NaiveBayesClassifier.train(corpora)
    out = args.out or cfg.classifier_path
    if not out:
        raise StylemeterError("no output path: pass --out or set classifier_path in the config")
    Path(out).write_bytes(clf.to_bytes())
    print(f"wrote classifier for levels {list(clf.levels)} to {out}", file=sys.stderr)
    return 0


def _judge_for(cfg: EngineConfig):
    if cfg.reward.mode == REGRESSION:
        return RegressionJudge(cfg.resolved_scale())
    if not cfg.classifier_path:
        raise StylemeterError("classification mode needs classifier_path in the config")
    return NaiveBayesClassifier.from_bytes(Path(cfg.classifier_path).read_bytes())


def _cmd_score(args) -> int:
    cfg = _load_config(args)
    judge = _judge_for(cfg)
    verdict = judge.judge(tokenize(_read_text(args)))
    lines = [f"predicted_level\t{verdict.predicted_level}"]
    if verdict.value is not None:
        lines.insert(0, f"score\t{verdict.value:.2f}")
    if verdict.distribution is not None:
        dist = " ".join(f"{p:.4f}" for p in verdict.distribution)
        lines.append(f"distribution\t{dist}")
    _emit(verdict.summary(), args, lines)
    return 0


def _cmd_reward(args) -> int:
    cfg = _load_config(args)
    engine = cfg.build_engine()
    breakdown = engine.breakdown(args.source, args.generated, args.target)
    quality = metrics.h_re(
        tokenize(args.generated), args.target,
        model=engine.pivots, judge=engine.judge, cfg=engine.config,
    )
    payload = {**breakdown.to_dict(), "h_re": quality}
    _emit(payload, args, [f"{key}\t{value:.6f}" for key, value in payload.items()])
    return 0


def _cmd_synthesize(args) -> int:
    cfg = _load_config(args)
    out = args.out or cfg.dataset_path
    if not out:
        raise StylemeterError("no dataset path: pass --out or set dataset_path in the config")
    corpora = _corpora(cfg, args)
    generator = ChatCompletionsClient(cfg.generator)
    judge = _judge_for(cfg)
    stats = datagen.synthesize_dataset(
        corpora, cfg.resolved_scale(), style=cfg.style, generator=generator,
        judge=judge, out_path=out, quota=args.quota,
        max_attempts=args.max_attempts, temperature=cfg.generator.temperature,
        seed=args.seed, concurrency=args.concurrency, resume=not args.no_resume,
    )
    print(json.dumps(stats.to_dict(), ensure_ascii=False))
    return 0


def _cmd_evaluate(args) -> int:
    cfg = _load_config(args)
    engine = cfg.build_engine()
    pairs = []
    with open(args.input, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                record = json.loads(line)
                pairs.append((record["source"], record["generated"],
                              int(record["target_level"])))
    report = metrics.evaluate(pairs, engine)
    if args.format == FORMAT_RECORDS:
        for record in report.records():
            print(json.dumps(record, ensure_ascii=False))
    else:
        print(report.table(), end="")
    if args.confusion_csv:
        Path(args.confusion_csv).write_text(report.confusion_csv(), encoding="utf-8")
        print(f"wrote confusion matrix to {args.confusion_csv}", file=sys.stderr)
    return 0


def _cmd_transfer(args) -> int:
    cfg = _load_config(args)
    engine = cfg.build_engine()
    rewritten, trace = search.hill_climb(_read_text(args), args.target, engine, args.budget)
    if args.format == FORMAT_RECORDS:
        print(json.dumps({"kind": "rewrite", "text": rewritten,
                          "initial": trace.initial.to_dict(),
                          "final": trace.final.to_dict()}, ensure_ascii=False))
        for step in trace.steps:
            print(json.dumps({"kind": "step", "position": step.position,
                              "before": step.before, "after": step.after,
                              **step.breakdown.to_dict()}, ensure_ascii=False))
    else:
        print(rewritten)
        print(f"initial total\t{trace.initial.total:.6f}", file=sys.stderr)
        for step in trace.steps:
            print(f"{step.describe()}\ttotal {step.breakdown.total:.6f}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    cfg = _load_config(args)
    engine = cfg.build_engine()
    service.serve(engine, bind=args.bind, config_echo=cfg.to_dict(),
                  fingerprints=cfg.fingerprints())
    return 0


_COMMANDS = {
    "fit-pivots": _cmd_fit_pivots,
    "train-judge": _cmd_train_judge,
    "score": _cmd_score,
    "reward": _cmd_reward,
    "synthesize": _cmd_synthesize,
    "evaluate": _cmd_evaluate,
    "transfer": _cmd_transfer,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except StylemeterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
