"""Synthetic corpora with planted vocabulary gradients.

Desk-scale stand-ins for the real non-parallel corpora: every "slot" is a
ladder of near-synonyms ordered by intensity level, documents at level L draw
the level-L rung of each sampled slot, and a matching embedding table maps
all rungs of a slot to the same axis (so substitutions within a slot preserve
consistency).  These fixtures make reward gradients, judge behaviour, and the
hill climber observable and reproducible.
"""

from __future__ import annotations

import random

from .pivots import Corpus
from .text import tokenize

# One ladder per slot, one rung per level (easy -> hard).
READABILITY_LADDERS = (
    ("big", "sizable", "substantial", "considerable"),
    ("get", "obtain", "acquire", "procure"),
    ("help", "assist", "support", "facilitate"),
    ("bad", "poor", "inferior", "deficient"),
    ("say", "mention", "state", "articulate"),
    ("new", "recent", "novel", "unprecedented"),
)

FILLERS = ("the", "report", "was", "and", "team", "found")

SENTIMENT_WORDS = {
    1: ("terrible", "awful", "bland", "disaster", "disappointment", "avoid", "worst"),
    2: ("disappointing", "unfortunately", "frustrating", "lacking", "expected"),
    3: ("decent", "quite", "improvement", "potential", "consider", "bit"),
    4: ("solid", "great", "definitely", "enjoyable", "satisfying", "tasty"),
    5: ("outstanding", "amazing", "absolutely", "incredible", "truly", "fantastic", "gem"),
}

SENTIMENT_FILLERS = ("the", "food", "service", "place", "staff", "really")


def gradient_document(level: int, rng: random.Random,
                      ladders=READABILITY_LADDERS, fillers=FILLERS,
                      min_slots: int = 3) -> str:
    """One synthetic document drawing the given level's rung per sampled slot."""
    n_slots = rng.randint(min_slots, len(ladders))
    slots = sorted(rng.sample(range(len(ladders)), n_slots))
    words = [fillers[0], fillers[1], fillers[2]]
    for i, slot in enumerate(slots):
        words.append(ladders[slot][level - 1])
        if i < len(slots) - 1:
            words.append(fillers[3 + (i % (len(fillers) - 3))])
    return " ".join(words) + "."


def gradient_corpora(k: int = 4, docs_per_level: int = 30, seed: int = 0,
                     ladders=READABILITY_LADDERS, fillers=FILLERS) -> list[Corpus]:
    """One corpus per level over the planted ladders; deterministic per seed."""
    rng = random.Random(seed)
    corpora = []
    for level in range(1, k + 1):
        docs = tuple(
            tokenize(gradient_document(level, rng, ladders=ladders, fillers=fillers))
            for _ in range(docs_per_level)
        )
        corpora.append(Corpus(level=level, documents=docs))
    return corpora


def gradient_embeddings_text(ladders=READABILITY_LADDERS, fillers=FILLERS) -> str:
    """Word-vector file content: one axis per slot, one per filler word.

    All rungs of a slot share the slot's axis exactly, so within-slot
    substitutions look like perfect paraphrases to the consistency reward.
    """
    dim = len(ladders) + len(fillers)
    lines = []

    def one_hot(axis: int) -> str:
        return " ".join("1" if i == axis else "0" for i in range(dim))

    for axis, ladder in enumerate(ladders):
        for word in ladder:
            lines.append(f"{word} {one_hot(axis)}")
    for offset, word in enumerate(fillers):
        lines.append(f"{word} {one_hot(len(ladders) + offset)}")
    return "\n".join(lines) + "\n"


# Synonym ladders with exact syllable counts (1/2/3/4 under this package's
# counter), one rung per readability level: swapping a rung for the same
# ladder's rung at another level changes the reading-ease score by a known
# amount while the shared embedding axis keeps consistency at 1.
SYLLABLE_LADDERS = (
    ("big", "sizable", "substantial", "considerable"),
    ("work", "effort", "commitment", "dedication"),
    ("say", "mention", "indicate", "communicate"),
    ("help", "support", "assistance", "cooperation"),
    ("new", "recent", "novelty", "innovation"),
    ("plan", "design", "proposal", "arrangement"),
)

# one-syllable connective words, each on its own embedding axis
READABILITY_FILLERS = ("the", "team", "found", "was", "and", "day", "time",
                       "staff", "facts", "clear", "point", "goals", "view",
                       "task", "note", "week")

# per level: (ladder rungs used, min fillers, max fillers).  The resulting
# word/syllable totals put every sentence inside its level's score band
# (level 1 sits above the top band and clamps to it).
_READABILITY_RECIPES = {
    1: (4, 3, 5),
    2: (4, 3, 5),
    3: (5, 9, 11),
    4: (5, 10, 12),
}


def readability_sentence(level: int, rng: random.Random) -> str:
    """One sentence whose reading-ease score falls in the level's band."""
    n_rungs, min_fill, max_fill = _READABILITY_RECIPES[level]
    ladders = rng.sample(SYLLABLE_LADDERS, n_rungs)
    words = [ladder[level - 1] for ladder in ladders]
    words += rng.sample(READABILITY_FILLERS, rng.randint(min_fill, max_fill))
    rng.shuffle(words)
    return " ".join(words) + "."


def readability_corpora(docs_per_level: int = 30, seed: int = 3) -> list[Corpus]:
    """Four corpora of graded sentence complexity, one per readability band."""
    rng = random.Random(seed)
    corpora = []
    for level in (1, 2, 3, 4):
        docs = tuple(
            tokenize(readability_sentence(level, rng)) for _ in range(docs_per_level)
        )
        corpora.append(Corpus(level=level, documents=docs))
    return corpora


def readability_embeddings_text() -> str:
    """Word-vector file for the graded fixture: one shared axis per ladder
    (rungs are perfect paraphrases), one axis per filler word."""
    return gradient_embeddings_text(ladders=SYLLABLE_LADDERS,
                                    fillers=READABILITY_FILLERS)


def sentiment_corpora(docs_per_level: int = 20, seed: int = 7) -> list[Corpus]:
    """Five-level star-rating toy corpora built from characteristic words."""
    rng = random.Random(seed)
    corpora = []
    for level in sorted(SENTIMENT_WORDS):
        marked = SENTIMENT_WORDS[level]
        docs = []
        for _ in range(docs_per_level):
            words = [SENTIMENT_FILLERS[0], rng.choice(SENTIMENT_FILLERS[1:])]
            words += rng.sample(marked, rng.randint(2, min(4, len(marked))))
            words.append(rng.choice(SENTIMENT_FILLERS[1:]))
            docs.append(tokenize(" ".join(words) + "."))
        corpora.append(Corpus(level=level, documents=tuple(docs)))
    return corpora


def sentiment_embeddings_text() -> str:
    """Axes: one per characteristic-word group, one per filler."""
    groups = [SENTIMENT_WORDS[level] for level in sorted(SENTIMENT_WORDS)]
    dim = len(groups) + len(SENTIMENT_FILLERS)
    lines = []
    for axis, group in enumerate(groups):
        for word in group:
            vec = " ".join("1" if i == axis else "0" for i in range(dim))
            lines.append(f"{word} {vec}")
    for offset, word in enumerate(SENTIMENT_FILLERS):
        axis = len(groups) + offset
        vec = " ".join("1" if i == axis else "0" for i in range(dim))
        lines.append(f"{word} {vec}")
    return "\n".join(lines) + "\n"
