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
Chunking of tagged sentences, CoNLL IOB labels, and keyphrase assembly.

Chunks are found greedy leftmost-longest: at each position take the longest
non-empty grammar match and resume after it, else move on one token.
"""

from __future__ import annotations

__all__ = ['B_KT', 'I_KT', 'O', 'IobToken', 'Chunk', 'find_chunks', 'to_iob',
           'validate_iob', 'assemble_keyphrases', 'keyphrase_runs', 'read_conll',
           'format_conll']

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .exceptions import ChunkInvariantError, CorpusIOError

B_KT = "B-KT"
I_KT = "I-KT"
O = "O"
LABELS = (B_KT, I_KT, O)

# alternate spellings seen in CoNLL style listings
_LABEL_ALIASES = {"O-KT": O, "B": B_KT, "I": I_KT}


@dataclass(frozen=True)
class IobToken:
    lemma: str
    tag: str
    label: str

    def __str__(self):
        return "({},{},{})".format(self.lemma, self.tag, self.label)


@dataclass(frozen=True)
class Chunk:
    start: int
    end: int
    tokens: Tuple = ()


def find_chunks(tagged: Sequence, grammar) -> List[Chunk]:
    """Disjoint, ordered chunks of one sentence of TaggedTokens."""
    tags = [t.tag for t in tagged]
    chunks = []
    i = 0
    while i < len(tags):
        end = grammar.longest_match(tags, i)
        if end is None:
            i += 1
            continue
        chunks.append(Chunk(i, end, tuple(tagged[i:end])))
        i = end
    return chunks


def to_iob(tagged: Sequence, chunks: Iterable[Chunk]) -> List[IobToken]:
    labels = [O] * len(tagged)
    previous_end = 0
    for chunk in chunks:
        if not (previous_end <= chunk.start < chunk.end <= len(tagged)):
            raise ChunkInvariantError(
                "chunk [{}, {}) overlaps, is out of order, or is out of bounds "
                "for {} tokens".format(chunk.start, chunk.end, len(tagged)))
        labels[chunk.start] = B_KT
        for i in range(chunk.start + 1, chunk.end):
            labels[i] = I_KT
        previous_end = chunk.end
    return [IobToken(t.lemma, t.tag, label) for t, label in zip(tagged, labels)]


def validate_iob(iob: Sequence[IobToken]):
    """Raise ChunkInvariantError if an I-KT starts a sentence or follows an O."""
    previous = O
    for i, token in enumerate(iob):
        if token.label not in LABELS:
            raise ChunkInvariantError("unknown label {!r} at token {}".format(token.label, i))
        if token.label == I_KT and previous == O:
            raise ChunkInvariantError("I-KT after O at token {}".format(i))
        previous = token.label


def keyphrase_runs(iob: Sequence[IobToken], merge_adjacent_chunks=True
                   ) -> List[List[IobToken]]:
    """Maximal runs of non-O tokens. Without *merge_adjacent_chunks* a B-KT
    also ends the run before it.
    """
    runs = []
    current = []
    for token in iob:
        if token.label == O:
            if current:
                runs.append(current)
            current = []
            continue
        if token.label == B_KT and current and not merge_adjacent_chunks:
            runs.append(current)
            current = []
        current.append(token)
    if current:
        runs.append(current)
    return runs


def assemble_keyphrases(iob: Sequence[IobToken], merge_adjacent_chunks=True) -> List[str]:
    return [" ".join(t.lemma for t in run)
            for run in keyphrase_runs(iob, merge_adjacent_chunks)]


# CoNLL text form: one "lemma tag label" line per token, blank line between
# sentences.

def _label(text, path, lineno):
    label = _LABEL_ALIASES.get(text.upper(), text.upper())
    if label not in LABELS:
        raise CorpusIOError("{}:{}: unknown IOB label {!r}".format(path, lineno, text))
    return label


def read_conll(lines: Iterable[str], path="<input>") -> Iterator[List[IobToken]]:
    """Sentences of IobTokens. The label column is optional and defaults to
    O; `O-KT` is read as O.
    """
    sentence = []
    for lineno, line in enumerate(lines, 1):
        fields = line.split()
        if not fields:
            if sentence:
                yield sentence
            sentence = []
            continue
        if line.lstrip().startswith("#"):
            continue
        if len(fields) not in (2, 3):
            raise CorpusIOError("{}:{}: expected 'lemma tag [label]'".format(path, lineno))
        label = _label(fields[2], path, lineno) if len(fields) == 3 else O
        sentence.append(IobToken(fields[0], fields[1], label))
    if sentence:
        yield sentence


def format_conll(iob: Iterable[IobToken]) -> str:
    return "".join("{} {} {}\n".format(t.lemma, t.tag, t.label) for t in iob)

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
