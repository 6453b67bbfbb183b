"""Style-intensity rewards, metrics, and pseudo-parallel data synthesis."""

from .config import EngineConfig
from .embeddings import EmbeddingTable, embed, load_embeddings
from .engine import RewardEngine
from .judges import (
    JudgeVerdict,
    NaiveBayesClassifier,
    RegressionJudge,
    classify,
    judge_regression,
    train_classifier,
)
from .metrics import evaluate, h_re, rouge_l, star_delta
from .pivots import Corpus, PivotModel, doc_vector, fit
from .readability import fre_delta, fre_score, level_of
from .rewards import (
    RewardBreakdown,
    RewardConfig,
    classification_reward,
    consistency_reward,
    lexicon_reward,
    regression_reward,
    total_reward,
)
from .scales import IntensityScale, Level, readability_scale, sentiment_scale
from .search import hill_climb, rerank
from .text import Document, count_syllables, tokenize

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Document",
    "EmbeddingTable",
    "EngineConfig",
    "IntensityScale",
    "JudgeVerdict",
    "Level",
    "NaiveBayesClassifier",
    "PivotModel",
    "RegressionJudge",
    "RewardBreakdown",
    "RewardConfig",
    "RewardEngine",
    "classification_reward",
    "classify",
    "consistency_reward",
    "count_syllables",
    "doc_vector",
    "embed",
    "evaluate",
    "fit",
    "fre_delta",
    "fre_score",
    "h_re",
    "hill_climb",
    "judge_regression",
    "level_of",
    "lexicon_reward",
    "load_embeddings",
    "readability_scale",
    "regression_reward",
    "rerank",
    "rouge_l",
    "sentiment_scale",
    "star_delta",
    "tokenize",
    "total_reward",
    "train_classifier",
]
