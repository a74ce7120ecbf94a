#!/usr/bin/env python3
# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Candidate filtering and the sentiment gate.

A candidate keyphrase (a list of lemmas) is dropped when it is a stopword on
its own, when nothing is left after trimming boundary stopwords, or when it is
longer than `max_len` tokens. Survivors are scored; neutral ones are dropped.
"""

from __future__ import annotations

__all__ = ['FilterConfig', 'ScoredKeyphrase', 'Rejection', 'RefineStats',
           'strip_boundary_stopwords', 'filter_candidate', 'classify_polarity',
           'refine', 'POSITIVE', 'NEGATIVE', 'NEUTRAL', 'REJECT_REASONS']

from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Union

from .exceptions import ConfigError
from .sentiment import sentiment_score

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

IS_STOPWORD = "is_stopword"
STRIPPED_EMPTY = "stripped_empty"
TOO_LONG = "too_long"
REJECT_REASONS = (IS_STOPWORD, STRIPPED_EMPTY, TOO_LONG)


@dataclass(frozen=True)
class FilterConfig:
    stopwords: FrozenSet[str] = frozenset()
    boundary_stopwords: FrozenSet[str] = frozenset()
    internal_stopwords: FrozenSet[str] = frozenset()
    max_len: int = 10
    neutral_band: float = 0.05

    def __post_init__(self):
        if self.max_len < 1:
            raise ConfigError("max_len must be at least 1, got {}".format(self.max_len))
        if not 0.0 <= self.neutral_band < 1.0:
            raise ConfigError("neutral band must be in [0, 1), got {}".format(
                self.neutral_band))


@dataclass(frozen=True)
class ScoredKeyphrase:
    doc_id: str
    sentence_index: int
    text: str
    token_count: int
    score: float
    polarity: str

    def as_record(self):
        return {
            "doc_id": self.doc_id,
            "sentence_index": self.sentence_index,
            "text": self.text,
            "token_count": self.token_count,
            "score": round(self.score, 4),
            "polarity": self.polarity,
        }


@dataclass(frozen=True)
class Rejection:
    reason: str

    def __bool__(self):
        return False


@dataclass
class RefineStats:
    candidates: int = 0
    rejected: Counter = field(default_factory=Counter)
    neutral: int = 0
    emitted: int = 0

    def merge(self, other: "RefineStats"):
        self.candidates += other.candidates
        self.rejected.update(other.rejected)
        self.neutral += other.neutral
        self.emitted += other.emitted
        return self


def strip_boundary_stopwords(candidate: Sequence[str], cfg: FilterConfig) -> List[str]:
    tokens = list(candidate)
    while tokens and tokens[0] in cfg.boundary_stopwords:
        del tokens[0]
    while tokens and tokens[-1] in cfg.boundary_stopwords:
        del tokens[-1]
    if cfg.internal_stopwords and len(tokens) > 2:
        tokens = [tokens[0]] + [t for t in tokens[1:-1]
                                if t not in cfg.internal_stopwords] + [tokens[-1]]
    return tokens


def filter_candidate(candidate: Sequence[str], cfg: FilterConfig
                     ) -> Union[List[str], Rejection]:
    """The stripped candidate, or a Rejection naming why it was dropped.
    A Rejection is falsy.
    """
    if " ".join(candidate) in cfg.stopwords:
        return Rejection(IS_STOPWORD)
    tokens = strip_boundary_stopwords(candidate, cfg)
    if not tokens:
        return Rejection(STRIPPED_EMPTY)
    if len(tokens) > cfg.max_len:
        return Rejection(TOO_LONG)
    return tokens


def classify_polarity(score: float, cfg: FilterConfig) -> str:
    """Neutral band is inclusive at both ends."""
    if score > cfg.neutral_band:
        return POSITIVE
    if score < -cfg.neutral_band:
        return NEGATIVE
    return NEUTRAL


def refine(candidates: Iterable, cfg: FilterConfig, lex=None, doc_id: str = "",
           stats: RefineStats = None) -> List[ScoredKeyphrase]:
    """Filter, score and gate the candidates of one document.

    Candidates are lemma lists, space-joined strings, or (sentence_index,
    candidate) pairs. *lex* is a SentimentLexicon or analyzer; None means the
    bundled lexicon.
    """
    stats = RefineStats() if stats is None else stats
    out = []
    for candidate in candidates:
        sentence_index = 0
        if isinstance(candidate, tuple) and len(candidate) == 2 and isinstance(candidate[0], int):
            sentence_index, candidate = candidate
        if isinstance(candidate, str):
            candidate = candidate.split()
        if not candidate:
            continue
        stats.candidates += 1
        tokens = filter_candidate(candidate, cfg)
        if isinstance(tokens, Rejection):
            stats.rejected[tokens.reason] += 1
            continue
        text = " ".join(tokens)
        score = sentiment_score(text, lex)
        polarity = classify_polarity(score, cfg)
        if polarity == NEUTRAL:
            stats.neutral += 1
            continue
        stats.emitted += 1
        out.append(ScoredKeyphrase(doc_id, sentence_index, text, len(tokens), score, polarity))
    return out

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
