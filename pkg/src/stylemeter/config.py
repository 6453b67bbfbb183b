"""Engine configuration: one JSON file wiring scale, corpora, artifacts and
reward settings together.  CLI flags override individual fields."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .embeddings import OOV_ZERO, load_embeddings
from .engine import RewardEngine
from .errors import ConfigError
from .generation import GeneratorSettings
from .judges import CLASSIFICATION, REGRESSION, NaiveBayesClassifier, RegressionJudge
from .pivots import Corpus, PivotModel
from .rewards import RewardConfig
from .scales import IntensityScale, builtin_scale
from .text import tokenize

CONFIG_VERSION = 1


@dataclass(frozen=True)
class EngineConfig:
    style: str = "readability"
    scale: IntensityScale | None = None
    corpus_paths: dict[int, str] = field(default_factory=dict)
    pivots_path: str | None = None
    classifier_path: str | None = None
    embeddings_path: str | None = None
    oov_policy: str = OOV_ZERO
    reward: RewardConfig = field(default_factory=RewardConfig)
    generator: GeneratorSettings = field(default_factory=GeneratorSettings)
    dataset_path: str | None = None

    def resolved_scale(self) -> IntensityScale:
        return self.scale if self.scale is not None else builtin_scale(self.style)

    @classmethod
    def from_dict(cls, payload: dict, base_dir: Path | None = None) -> "EngineConfig":
        if payload.get("version", CONFIG_VERSION) != CONFIG_VERSION:
            raise ConfigError(f"unsupported config version {payload.get('version')!r}")
        style = payload.get("style", "readability")
        if style not in ("readability", "sentiment"):
            raise ConfigError(f"unknown style {style!r}")

        def resolve(p: str | None) -> str | None:
            if p is None:
                return None
            path = Path(p)
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            return str(path)

        scale = None
        if "scale" in payload:
            raw_scale = payload["scale"]
            if isinstance(raw_scale, str):
                scale = IntensityScale.load(resolve(raw_scale))
            else:
                scale = IntensityScale.from_dict(raw_scale)

        reward_payload = dict(payload.get("reward", {}))
        reward_payload.setdefault(
            "mode", REGRESSION if style == "readability" else CLASSIFICATION
        )
        known = set(RewardConfig.__dataclass_fields__)
        unknown = set(reward_payload) - known
        if unknown:
            raise ConfigError(f"unknown reward fields: {sorted(unknown)}")
        try:
            reward = RewardConfig(**reward_payload)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

        try:
            corpus_paths = {
                int(level): resolve(path)
                for level, path in payload.get("corpus_paths", {}).items()
            }
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"corpus_paths keys must be level indices: {exc}") from exc
        return cls(
            style=style,
            scale=scale,
            corpus_paths=corpus_paths,
            pivots_path=resolve(payload.get("pivots_path")),
            classifier_path=resolve(payload.get("classifier_path")),
            embeddings_path=resolve(payload.get("embeddings_path")),
            oov_policy=payload.get("oov_policy", OOV_ZERO),
            reward=reward,
            generator=GeneratorSettings.from_dict(payload.get("generator", {})),
            dataset_path=resolve(payload.get("dataset_path")),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "EngineConfig":
        path = Path(path)
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ConfigError(f"config file {path} does not exist") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(payload, base_dir=path.parent)

    def to_dict(self) -> dict:
        out: dict = {"version": CONFIG_VERSION, "style": self.style}
        if self.scale is not None:
            out["scale"] = self.scale.to_dict()
        if self.corpus_paths:
            out["corpus_paths"] = {str(k): v for k, v in sorted(self.corpus_paths.items())}
        for key in ("pivots_path", "classifier_path", "embeddings_path", "dataset_path"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        out["oov_policy"] = self.oov_policy
        out["reward"] = {
            "lambda_sent": self.reward.lambda_sent,
            "lambda_lex": self.reward.lambda_lex,
            "lambda_cons": self.reward.lambda_cons,
            "temperature": self.reward.temperature,
            "sigma": self.reward.sigma,
            "mode": self.reward.mode,
        }
        out["generator"] = self.generator.to_dict()
        return out

    def with_reward(self, **kwargs) -> "EngineConfig":
        return replace(self, reward=replace(self.reward, **kwargs))

    def load_corpora(self) -> list[Corpus]:
        """Read the per-level corpus files (one document per line)."""
        scale = self.resolved_scale()
        if not self.corpus_paths:
            raise ConfigError("config has no corpus_paths")
        missing = [idx for idx in scale.indices if idx not in self.corpus_paths]
        if missing:
            raise ConfigError(f"corpus_paths missing levels {missing}")
        corpora = []
        for level in scale.indices:
            path = Path(self.corpus_paths[level])
            if not path.exists():
                raise ConfigError(f"corpus file {path} does not exist")
            docs = tuple(
                tokenize(line)
                for line in path.read_text(encoding="utf-8").splitlines()
                if line.strip()
            )
            corpora.append(Corpus(level=level, documents=docs))
        return corpora

    def build_engine(self) -> RewardEngine:
        """Load every referenced artifact and assemble the scoring engine."""
        scale = self.resolved_scale()
        if self.pivots_path is None:
            raise ConfigError("config has no pivots_path; run fit-pivots first")
        pivots = PivotModel.from_bytes(_read(self.pivots_path))
        if self.embeddings_path is None:
            raise ConfigError("config has no embeddings_path")
        table = load_embeddings(self.embeddings_path, oov_policy=self.oov_policy)
        if self.reward.mode == REGRESSION:
            judge = RegressionJudge(scale)
        else:
            if self.classifier_path is None:
                raise ConfigError("classification mode needs classifier_path; run train-judge")
            judge = NaiveBayesClassifier.from_bytes(_read(self.classifier_path))
        return RewardEngine(
            style=self.style, scale=scale, pivots=pivots, judge=judge,
            embeddings=table, config=self.reward,
        )

    def fingerprints(self) -> dict[str, str]:
        """SHA-256 of each artifact file the engine was loaded from."""
        prints = {}
        for name, path in (
            ("pivots", self.pivots_path),
            ("classifier", self.classifier_path),
            ("embeddings", self.embeddings_path),
        ):
            if path is not None and Path(path).exists():
                prints[name] = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        return prints


def _read(path: str) -> bytes:
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"artifact file {p} does not exist")
    return p.read_bytes()
