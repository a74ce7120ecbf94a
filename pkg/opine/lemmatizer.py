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
Part-of-speech aware lemmatizer.

The word is lowercased, then looked up in the exception table for its word
class (irregular verbs and plurals). A word that is already a known base form
is returned as is. Otherwise the suffix rules propose candidates, checked
against the base form vocabulary; the first known one wins. Unknown words get
the plain rule result, or stay as they are when that result would itself be
rewritten again.
"""

from __future__ import annotations

__all__ = ['Lemmatizer', 'word_class']

from typing import FrozenSet, List, Mapping, Optional, Tuple

from .exceptions import DataFileError
from .resources import read_tsv

NOUN, VERB, ADJECTIVE = "n", "v", "a"
WORD_CLASSES = (NOUN, VERB, ADJECTIVE)

_NO_UNDOUBLE = "lsz"
_VOWELS = "aeiou"


def word_class(tag: str) -> Optional[str]:
    """The inflected word class of *tag*, or None for tags that are left
    alone (singular nouns and positive adjectives are already base forms).
    """
    if tag in ("NNS", "NNPS"):
        return NOUN
    if tag.startswith("VB"):
        return VERB
    if tag in ("JJR", "JJS"):
        return ADJECTIVE
    return None


def _undouble(stem):
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS + _NO_UNDOUBLE:
        return stem[:-1]
    return None


def _noun_candidates(word) -> List[str]:
    if word.endswith("ies") and len(word) > 4:
        return [word[:-3] + "y"]
    if word.endswith("es") and len(word) > 3:
        return [word[:-2], word[:-1]]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 2:
        return [word[:-1]]
    return []


def _noun_guess(word):
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("sses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 2:
        return word[:-1]
    return word


def _suffix_candidates(word, suffix) -> List[str]:
    """Stems for -ed, -ing, -er, -est: undoubled, e restored, plain, y."""
    if not word.endswith(suffix) or len(word) <= len(suffix) + 1:
        return []
    stem = word[:-len(suffix)]
    out = []
    undoubled = _undouble(stem)
    if undoubled:
        out.append(undoubled)
    out.append(stem + "e")
    out.append(stem)
    if stem.endswith("i"):
        out.append(stem[:-1] + "y")
    if suffix == "ing" and stem.endswith("y"):
        out.append(stem[:-1] + "ie")
    return out


def _suffix_guess(word, suffix):
    stem = word[:-len(suffix)]
    if stem.endswith("i"):
        return stem[:-1] + "y"
    return _undouble(stem) or stem


class Lemmatizer:

    def __init__(self, exceptions: Mapping[Tuple[str, str], str],
                 vocabulary: Mapping[str, FrozenSet[str]]):
        self.exceptions = dict(exceptions)
        self.vocabulary = {wc: frozenset(vocabulary.get(wc, ())) for wc in WORD_CLASSES}

    @classmethod
    def from_files(cls, exceptions_path, lexicon):
        """Exceptions from a `form<TAB>lemma<TAB>n|v|a` table, base forms
        from the tagger lexicon.
        """
        exceptions = {}
        for lineno, fields in read_tsv(exceptions_path, 3):
            form, lemma, wc = fields[0].lower(), fields[1].lower(), fields[2].lower()
            if wc not in WORD_CLASSES or not form or not lemma:
                raise DataFileError(exceptions_path,
                                    "expected form, lemma and one of n, v, a", lineno)
            exceptions[(form, wc)] = lemma
        vocabulary = {
            NOUN: lexicon.words_with(["NN"]),
            VERB: lexicon.words_with(["VB"]),
            ADJECTIVE: lexicon.words_with(["JJ"]),
        }
        return cls(exceptions, vocabulary)

    def lemma(self, token: str, tag: str) -> str:
        word = token.lower()
        wc = word_class(tag)
        if wc is None:
            return word
        return self._lemma(word, wc)

    def _lemma(self, word, wc):
        lemma = self.exceptions.get((word, wc))
        if lemma is not None:
            return lemma
        known = self.vocabulary[wc]
        if word in known:
            return word
        for candidate in self._candidates(word, wc):
            if candidate in known:
                return candidate
        guess = self._guess(word, wc)
        if guess != word and self._lemma(guess, wc) != guess:
            return word
        return guess

    @staticmethod
    def _candidates(word, wc) -> List[str]:
        if wc == NOUN:
            return _noun_candidates(word)
        if wc == VERB:
            return (_suffix_candidates(word, "ing") or _suffix_candidates(word, "ed")
                    or _noun_candidates(word))
        return _suffix_candidates(word, "est") or _suffix_candidates(word, "er")

    @staticmethod
    def _guess(word, wc):
        if wc == NOUN:
            return _noun_guess(word)
        suffixes = ("ing", "ed") if wc == VERB else ("est", "er")
        for suffix in suffixes:
            if word.endswith(suffix) and len(word) > len(suffix) + 2:
                return _suffix_guess(word, suffix)
        if wc == VERB:
            return _noun_guess(word)
        return word

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
