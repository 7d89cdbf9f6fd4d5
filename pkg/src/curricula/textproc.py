"""Deterministic text preprocessing for transcripts and titles.

Pipeline order is fixed: lowercase -> strip special characters ->
whitespace tokenize -> stopword removal -> stemming -> n-gram
augmentation.  Unigrams are always emitted; requested bi/tri-grams are
appended after them as underscore-joined tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import porter

# Fixed built-in English stopword list; override via PreprocessConfig.
ENGLISH_STOPWORDS = frozenset("""
a about above after again against all am an and any are aren as at be because
been before being below between both but by can cannot could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more most my
myself no nor not now of off on once only or other our ours ourselves out over
own same she should so some such than that the their theirs them themselves
then there these they this those through to too under until up very was we
were what when where which while who whom why will with would you your yours
yourself yourselves
""".split())

# Keep letters, digits, and whitespace; everything else (incl. underscore,
# which is reserved as the n-gram joiner) becomes a token separator.
_STRIP_SPECIAL = re.compile(r"[^\w\s]|_", re.UNICODE)


@dataclass(frozen=True)
class PreprocessConfig:
    lowercase: bool = True
    strip_special: bool = True
    stemmer: str = "porter"  # "porter" | "none"
    ngram_orders: frozenset[int] = frozenset()
    stopwords: frozenset[str] = ENGLISH_STOPWORDS

    def __post_init__(self):
        if self.stemmer not in ("porter", "none"):
            raise ValueError(f"stemmer must be 'porter' or 'none', got {self.stemmer!r}")
        if not frozenset(self.ngram_orders) <= {2, 3}:
            raise ValueError("ngram_orders may only contain 2 and 3")
        object.__setattr__(self, "ngram_orders", frozenset(self.ngram_orders))
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))


def _strip_special(text: str, lowercased: bool) -> str:
    # Non-ASCII letters are kept by neither branch; they separate tokens.
    pattern = _STRIP_SPECIAL if lowercased else _STRIP_SPECIAL_ANYCASE
    return pattern.sub(" ", text)


def stem_token(token: str, stemmer: str) -> str:
    return porter.stem(token) if stemmer == "porter" else token


def preprocess(text: str, config: PreprocessConfig = PreprocessConfig()) -> list[str]:
    """Tokenize one raw text into the configured token stream."""
    if config.lowercase:
        text = text.lower()
    if config.strip_special:
        text = _strip_special(text, config.lowercase)
    tokens = text.split()
    if config.stopwords:
        tokens = [t for t in tokens if t not in config.stopwords]
    if config.stemmer == "porter":
        tokens = [porter.stem(t) for t in tokens]
    out = list(tokens)
    for order in sorted(config.ngram_orders):
        out.extend(
            "_".join(tokens[i : i + order]) for i in range(len(tokens) - order + 1)
        )
    return out
