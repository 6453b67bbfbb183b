"""Bundle of fitted artifacts that the service, CLI, metrics and search use."""

from __future__ import annotations

from dataclasses import dataclass

from .embeddings import EmbeddingTable
from .judges import JudgeVerdict, NaiveBayesClassifier, RegressionJudge
from .pivots import PivotModel
from .rewards import RewardBreakdown, RewardConfig, total_reward
from .scales import IntensityScale
from .text import Document, tokenize


@dataclass
class RewardEngine:
    """Immutable-after-construction scoring engine for one style."""

    style: str
    scale: IntensityScale
    pivots: PivotModel
    judge: RegressionJudge | NaiveBayesClassifier
    embeddings: EmbeddingTable
    config: RewardConfig

    def breakdown(self, source: str | Document, generated: str | Document,
                  target_level: int) -> RewardBreakdown:
        self.scale.level(target_level)  # validate the level early
        return total_reward(
            _doc(source),
            _doc(generated),
            target_level,
            model=self.pivots,
            judge=self.judge,
            table=self.embeddings,
            cfg=self.config,
        )

    def judge_text(self, text: str | Document) -> JudgeVerdict:
        return self.judge.judge(_doc(text))


def _doc(text: str | Document) -> Document:
    return text if isinstance(text, Document) else tokenize(text)
