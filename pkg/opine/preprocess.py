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
Social media text normalization.

The steps run in this order:

    strip_social_artifacts   mentions, hashtags and URLs
    expand_contractions      "couldn't" -> "could not"
    decode_html              tags removed, entities decoded
    strip_special_chars      keep letters, digits, whitespace and . ! ? ; : , ' -
    compress_repeats         "pooooool" -> "pool"
    expand_slang             "idk" -> "i do not know"
    remove_number_words      "cases rose 10,000 today" -> "cases rose today"

Every step is a total function of its text. The composition is re-applied
until the text is stable, which makes `preprocess` idempotent.
"""

from __future__ import annotations

__all__ = ['CleanDocument', 'Preprocessor', 'TableRewriter', 'STEP_NAMES',
           'strip_social_artifacts', 'expand_contractions', 'decode_html',
           'strip_special_chars', 'compress_repeats', 'expand_slang',
           'remove_number_words', 'preprocess']

import functools
import html
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .exceptions import ConfigError
from .resources import DEFAULT_FILES, data_path, read_pair_table
from .util import collapse_whitespace

STEP_NAMES = (
    "strip_social_artifacts",
    "expand_contractions",
    "decode_html",
    "strip_special_chars",
    "compress_repeats",
    "expand_slang",
    "remove_number_words",
)

MAX_PASSES = 3
MAX_HTML_PASSES = 5

KEEP_PUNCTUATION = frozenset(".!?;:,'-")

# a scheme or "www." starting the token, or right after punctuation
_URL_RE = re.compile(r"(?:^|\W)(?:\w+://|www\.\S)", re.IGNORECASE)
_TAG_RE = re.compile(r"</?[A-Za-z][A-Za-z0-9:-]*(?:\s[^<>]*)?/?>")
_REPEAT_RE = re.compile(r"(\S)\1{2,}")
_NUMBER_TOKEN_RE = re.compile(r"(\d+(?:[.,]\d+)*)([.!?;:,]*)")


@dataclass(frozen=True)
class CleanDocument:
    id: str
    text: str
    steps_applied: Tuple[str, ...] = ()


class TableRewriter:
    """Whole word, case-insensitive replacement from a lookup table.

    With *keep_case*, a match that starts with a capital letter gets a
    capitalized expansion ("I'm" -> "I am"). Apostrophes in keys also match
    the curly apostrophe.
    """

    def __init__(self, table: Mapping[str, str], keep_case=False):
        self.table = {k.lower().replace("\u2019", "'"): v for k, v in table.items() if k}
        self.keep_case = keep_case
        if self.table:
            keys = sorted(self.table, key=lambda k: (-len(k), k))
            alt = "|".join(re.escape(k).replace("'", "['\u2019]") for k in keys)
            self._re = re.compile(r"(?<![\w'\u2019])(?:{})(?![\w'\u2019])".format(alt),
                                  re.IGNORECASE)
        else:
            self._re = None

    def _replace(self, match):
        found = match.group(0)
        expansion = self.table[found.lower().replace("\u2019", "'")]
        if self.keep_case and found[:1].isupper() and expansion:
            expansion = expansion[0].upper() + expansion[1:]
        return expansion

    def __call__(self, text: str) -> str:
        if self._re is None:
            return text
        return self._re.sub(self._replace, text)


def strip_social_artifacts(text: str) -> str:
    """Drop @mentions, #hashtags (tag text included) and URL shaped tokens."""
    kept = []
    for token in text.split():
        if token[0] in "@#":
            continue
        if _URL_RE.search(token):
            continue
        kept.append(token)
    return " ".join(kept)


def decode_html(text: str) -> str:
    """Remove tags and decode entities, repeating until nothing changes (at
    most five rounds, so "&amp;amp;" becomes "&").
    """
    for _ in range(MAX_HTML_PASSES):
        decoded = html.unescape(_TAG_RE.sub(" ", text))
        if decoded == text:
            break
        text = decoded
    return collapse_whitespace(text)


def strip_special_chars(text: str) -> str:
    return collapse_whitespace("".join(
        c for c in text if c.isalnum() or c.isspace() or c in KEEP_PUNCTUATION))


def compress_repeats(text: str) -> str:
    return _REPEAT_RE.sub(r"\1\1", text)


def remove_number_words(text: str) -> str:
    """Remove tokens that are only digits with . or , separators. Sentence
    punctuation trailing a removed number moves to the previous token.
    """
    kept = []
    for token in text.split():
        m = _NUMBER_TOKEN_RE.fullmatch(token)
        if m is None:
            kept.append(token)
        elif m.group(2) and kept:
            kept[-1] += m.group(2)
    return " ".join(kept)


class Preprocessor:
    """The full normalization with its contraction and slang tables."""

    def __init__(self, contractions: Mapping[str, str], slang: Mapping[str, str]):
        self.expand_contractions = TableRewriter(contractions, keep_case=True)
        self.expand_slang = TableRewriter(slang)
        self.steps = (
            ("strip_social_artifacts", strip_social_artifacts),
            ("expand_contractions", self.expand_contractions),
            ("decode_html", decode_html),
            ("strip_special_chars", strip_special_chars),
            ("compress_repeats", compress_repeats),
            ("expand_slang", self.expand_slang),
            ("remove_number_words", remove_number_words),
        )

    @classmethod
    def from_files(cls, contractions_path, slang_path):
        return cls(read_pair_table(contractions_path, ("contraction", "expansion")),
                   read_pair_table(slang_path, ("slang", "expansion")))

    def _pass(self, text, applied, only):
        for name, step in self.steps:
            if only is not None and name not in only:
                continue
            new = step(text)
            if new != text and name not in applied:
                applied.append(name)
            text = new
        return text

    def run(self, text: str, only: Optional[Iterable[str]] = None
            ) -> Tuple[str, Tuple[str, ...]]:
        """Return the normalized text and the names of the steps that changed it.
        *only* restricts the run to the named steps, still in their fixed order.
        """
        if only is not None:
            only = frozenset(only)
            unknown = sorted(only.difference(STEP_NAMES))
            if unknown:
                raise ConfigError("unknown preprocessing step {}, use one of {}".format(
                    ", ".join(unknown), ", ".join(STEP_NAMES)))
        applied = []
        for _ in range(MAX_PASSES):
            new = self._pass(text, applied, only)
            if new == text:
                break
            text = new
        return text, tuple(sorted(applied, key=STEP_NAMES.index))

    def __call__(self, text: str) -> str:
        return self.run(text)[0]

    def clean(self, comment) -> CleanDocument:
        text, applied = self.run(comment.text)
        return CleanDocument(comment.id, text, applied)


@functools.lru_cache(maxsize=None)
def _default_preprocessor() -> Preprocessor:
    return Preprocessor.from_files(data_path(DEFAULT_FILES["contractions"]),
                                   data_path(DEFAULT_FILES["slang"]))


def expand_contractions(text: str, table: Optional[Dict[str, str]] = None) -> str:
    if table is None:
        return _default_preprocessor().expand_contractions(text)
    return TableRewriter(table, keep_case=True)(text)


def expand_slang(text: str, table: Optional[Dict[str, str]] = None) -> str:
    if table is None:
        return _default_preprocessor().expand_slang(text)
    return TableRewriter(table)(text)


def preprocess(text: str) -> str:
    """Normalize *text* with the bundled contraction and slang tables."""
    return _default_preprocessor()(text)

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
