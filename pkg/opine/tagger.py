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
Deterministic part-of-speech tagger: lexicon lookup, then shape and suffix
rules for unknown tokens, then NN.

Lexicon lines are `wordform<TAB>tag[<TAB>tag...]`, most frequent tag first.
Wordforms with capital letters are matched case-sensitively before the
lowercased lookup; that is how sentence initial "Stop" comes out as NNP.
"""

from __future__ import annotations

__all__ = ['PENN_TAGS', 'Lexicon', 'Tagger']

import re
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .exceptions import DataFileError
from .resources import read_tsv

PENN_TAGS = frozenset([
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
    # punctuation
    ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#", "$",
])

_NUMBER_RE = re.compile(r"[+-]?\d+(?:[.,:/-]\d+)*(?:st|nd|rd|th|s|%)?", re.IGNORECASE)

# (suffix, minimum word length, tag)
_SUFFIX_RULES = (
    ("ing", 5, "VBG"),
    ("ed", 4, "VBD"),
    ("ly", 4, "RB"),
    ("tion", 5, "NN"),
    ("sion", 5, "NN"),
    ("ment", 6, "NN"),
    ("ness", 6, "NN"),
    ("ity", 5, "NN"),
    ("ism", 5, "NN"),
    ("ance", 6, "NN"),
    ("ence", 6, "NN"),
    ("ship", 6, "NN"),
    ("hood", 6, "NN"),
    ("able", 5, "JJ"),
    ("ible", 5, "JJ"),
    ("ful", 5, "JJ"),
    ("ous", 5, "JJ"),
    ("ive", 5, "JJ"),
    ("less", 6, "JJ"),
    ("ical", 6, "JJ"),
    ("ic", 5, "JJ"),
    ("ish", 5, "JJ"),
)

_NOT_PLURAL = ("ss", "us", "is")


class Lexicon:
    """Wordform to tags, most frequent first."""

    def __init__(self, entries: Dict[str, Tuple[str, ...]], proper: Dict[str, Tuple[str, ...]]):
        self.entries = entries
        self.proper = proper

    @classmethod
    def from_file(cls, path):
        entries = {}
        proper = {}
        for lineno, fields in read_tsv(path, 2):
            word, tags = fields[0], [t for t in fields[1:] if t]
            if not word or not tags:
                raise DataFileError(path, "expected a wordform and at least one tag", lineno)
            for tag in tags:
                if tag not in PENN_TAGS:
                    raise DataFileError(path, "unknown tag {!r}".format(tag), lineno)
            table = entries if word == word.lower() else proper
            known = list(table.get(word, ()))
            known.extend(t for t in tags if t not in known)
            table[word] = tuple(known)
        return cls(entries, proper)

    def tags(self, word: str) -> Tuple[str, ...]:
        return self.entries.get(word, ())

    def words_with(self, tags: Iterable[str]) -> FrozenSet[str]:
        """Lowercase wordforms that can take any of *tags*."""
        wanted = set(tags)
        return frozenset(w for w, ts in self.entries.items() if wanted.intersection(ts))

    def __contains__(self, word):
        return word in self.entries

    def __len__(self):
        return len(self.entries) + len(self.proper)


class Tagger:

    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon

    def tag(self, tokens: Iterable[str]) -> List[Tuple[str, str]]:
        return [(token, self.tag_token(token)) for token in tokens]

    def tag_token(self, token: str) -> str:
        tags = self.lexicon.proper.get(token)
        if tags:
            return tags[0]
        lower = token.lower()
        tags = self.lexicon.tags(lower)
        if tags:
            return tags[0]
        tag = self._shape(token)
        if tag:
            return tag
        if lower.endswith(("'s", "\u2019s")) and len(lower) > 2:
            return self.tag_token(token[:-2])
        if token[0].isupper():
            if lower.endswith("s") and token[:-1] in self.lexicon.proper:
                return "NNPS"
            return "NNP"
        return self._suffix(lower)

    @staticmethod
    def _shape(token):
        if all(c in ".!?" for c in token):
            return "."
        if token == ",":
            return ","
        if all(c in ";:-" for c in token):
            return ":"
        if all(c == "'" for c in token):
            return "''"
        if _NUMBER_RE.fullmatch(token):
            return "CD"
        if not any(c.isalnum() for c in token):
            return "SYM"
        return None

    def _suffix(self, word):
        if any(c.isdigit() for c in word):
            return "NN"
        for suffix, minlen, tag in _SUFFIX_RULES:
            if len(word) >= minlen and word.endswith(suffix):
                return tag
        if word.endswith("est") and len(word) > 4:
            if "JJ" in self.lexicon.tags(word[:-3]) or "JJ" in self.lexicon.tags(word[:-2]):
                return "JJS"
        if word.endswith("er") and len(word) > 3:
            if "JJ" in self.lexicon.tags(word[:-2]) or "JJ" in self.lexicon.tags(word[:-1]):
                return "JJR"
        if word.endswith("s") and len(word) > 2 and not word.endswith(_NOT_PLURAL):
            return self._plural_or_third_person(word)
        return "NN"

    def _plural_or_third_person(self, word):
        """-s backoff: a stem the lexicon knows only as a verb makes VBZ,
        anything else NNS.
        """
        stems = [word[:-1]]
        if word.endswith("es"):
            stems.append(word[:-2])
        if word.endswith("ies"):
            stems.append(word[:-3] + "y")
        for stem in stems:
            tags = self.lexicon.tags(stem)
            if tags:
                verbal = any(t.startswith("VB") for t in tags)
                nominal = any(t.startswith("NN") for t in tags)
                return "VBZ" if verbal and not nominal else "NNS"
        return "NNS"

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
