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
Sentence splitting, tokenizing, tagging and lemmatizing of cleaned text.
"""

from __future__ import annotations

__all__ = ['TaggedToken', 'Annotator', 'split_sentences', 'tokenize']

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from .lemmatizer import Lemmatizer
from .resources import read_word_list
from .tagger import Lexicon, Tagger

DETACHABLE = ".!?;:,"

_BOUNDARY_RE = re.compile(r"[.!?]+(?=\s|$)")
_INITIAL_RE = re.compile(r"[A-Z]")


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    tag: str
    sentence_index: int = 0
    token_index: int = 0


def _is_abbreviation(word, abbreviations):
    return word.lower() in abbreviations or _INITIAL_RE.fullmatch(word) is not None


def split_sentences(text: str, abbreviations: FrozenSet[str] = frozenset()) -> List[str]:
    """Split after runs of . ! ? that are followed by whitespace or the end.
    A single period after an abbreviation or a one letter capital initial
    does not end a sentence.
    """
    sentences = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        if m.group(0) == ".":
            word = text[start:m.start()].rsplit(None, 1)[-1:] or [""]
            if word[0] and _is_abbreviation(word[0], abbreviations):
                continue
        sentence = text[start:m.end()].strip()
        if sentence:
            sentences.append(sentence)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize(sentence: str) -> List[str]:
    """Whitespace split, then leading and trailing . ! ? ; : , become tokens of
    their own, one character each. Hyphens and apostrophes stay inside words.
    """
    tokens = []
    for chunk in sentence.split():
        head = []
        while chunk and chunk[0] in DETACHABLE:
            head.append(chunk[0])
            chunk = chunk[1:]
        tail = []
        while chunk and chunk[-1] in DETACHABLE:
            tail.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.extend(head)
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(tail))
    return tokens


class Annotator:
    """Splits, tags and lemmatizes. Immutable once built, so one instance can
    be shared by every document a worker handles.
    """

    def __init__(self, tagger: Tagger, lemmatizer: Lemmatizer,
                 abbreviations: FrozenSet[str] = frozenset()):
        self.tagger = tagger
        self.lemmatizer = lemmatizer
        self.abbreviations = abbreviations

    @classmethod
    def from_files(cls, tagger_lexicon, lemma_exceptions, abbreviations):
        lexicon = Lexicon.from_file(tagger_lexicon)
        return cls(Tagger(lexicon), Lemmatizer.from_files(lemma_exceptions, lexicon),
                   read_word_list(abbreviations))

    def split_sentences(self, text: str) -> List[str]:
        return split_sentences(text, self.abbreviations)

    def pos_tag(self, tokens: Iterable[str]) -> List[Tuple[str, str]]:
        return self.tagger.tag(tokens)

    def lemmatize(self, tagged: Iterable[Tuple[str, str]], sentence_index: int = 0
                  ) -> List[TaggedToken]:
        return [TaggedToken(token, self.lemmatizer.lemma(token, tag), tag, sentence_index, i)
                for i, (token, tag) in enumerate(tagged)]

    def annotate_sentence(self, sentence: str, sentence_index: int = 0) -> List[TaggedToken]:
        return self.lemmatize(self.pos_tag(tokenize(sentence)), sentence_index)

    def annotate(self, text: str) -> List[List[TaggedToken]]:
        """One list of TaggedTokens per sentence of *text*."""
        return [self.annotate_sentence(s, i)
                for i, s in enumerate(self.split_sentences(text))]

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
