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
Unit tests for opine.chunk module.
"""

import random

import pytest

from opine import chunk
from opine.annotate import TaggedToken
from opine.chunk import B_KT, I_KT, O, Chunk, IobToken
from opine.exceptions import ChunkInvariantError, CorpusIOError

from conftest import RegexOracle, WORKED_LEMMAS, WORKED_TAGS

WORKED_IOB = [
    ("stop", "NNP", "B-KT"), ("panic", "NN", "I-KT"), ("buying", "NN", "I-KT"),
    ("and", "CC", "O"), ("be", "VB", "B-KT"), ("sure", "JJ", "I-KT"), ("to", "TO", "O"),
    ("use", "VB", "B-KT"), ("face", "NN", "I-KT"), ("mask", "NNS", "I-KT"),
    ("in", "IN", "B-KT"), ("public", "JJ", "I-KT"), ("area", "NNS", "I-KT"),
]


def _tagged(lemmas, tags):
    return [TaggedToken(l, l, t, 0, i) for i, (l, t) in enumerate(zip(lemmas, tags))]


@pytest.fixture
def worked():
    return _tagged(WORKED_LEMMAS, WORKED_TAGS)


def test_worked_chunks(worked, compiled_grammar):
    chunks = chunk.find_chunks(worked, compiled_grammar)
    assert [(c.start, c.end) for c in chunks] == [(0, 3), (4, 6), (7, 10), (10, 13)]
    assert [t.lemma for t in chunks[2].tokens] == ["use", "face", "mask"]


def test_worked_iob(worked, compiled_grammar):
    iob = chunk.to_iob(worked, chunk.find_chunks(worked, compiled_grammar))
    assert [(t.lemma, t.tag, t.label) for t in iob] == WORKED_IOB
    chunk.validate_iob(iob)
    assert ",".join(str(t) for t in iob[:4]) == \
        "(stop,NNP,B-KT),(panic,NN,I-KT),(buying,NN,I-KT),(and,CC,O)"


def test_worked_assembly():
    iob = [IobToken(*t) for t in WORKED_IOB]
    assert chunk.assemble_keyphrases(iob) == [
        "stop panic buying", "be sure", "use face mask in public area"]
    assert chunk.assemble_keyphrases(iob, merge_adjacent_chunks=False) == [
        "stop panic buying", "be sure", "use face mask", "in public area"]


def test_single_token_chunk(compiled_grammar):
    tagged = _tagged(["and", "virus", "and"], ["CC", "NN", "CC"])
    iob = chunk.to_iob(tagged, chunk.find_chunks(tagged, compiled_grammar))
    assert [t.label for t in iob] == [O, B_KT, O]


def test_empty_sentence(compiled_grammar):
    assert chunk.find_chunks([], compiled_grammar) == []
    assert chunk.to_iob([], []) == []
    assert chunk.assemble_keyphrases([]) == []


@pytest.mark.parametrize("spans", [
    [(0, 2), (1, 3)],
    [(2, 3), (0, 1)],
    [(0, 4)],
    [(1, 1)],
])
def test_to_iob_rejects_bad_chunks(worked, spans):
    chunks = [Chunk(s, e) for s, e in spans]
    with pytest.raises(ChunkInvariantError):
        chunk.to_iob(worked[:3], chunks)


def test_validate_iob():
    with pytest.raises(ChunkInvariantError):
        chunk.validate_iob([IobToken("a", "NN", I_KT)])
    with pytest.raises(ChunkInvariantError):
        chunk.validate_iob([IobToken("a", "NN", O), IobToken("b", "NN", I_KT)])
    with pytest.raises(ChunkInvariantError):
        chunk.validate_iob([IobToken("a", "NN", "X")])


def test_read_conll():
    lines = ["# gold tags", "stop NNP B-KT", "panic NN", "and CC O-KT", "", "",
             "virus NN b", ""]
    sentences = list(chunk.read_conll(lines))
    assert len(sentences) == 2
    assert [t.label for t in sentences[0]] == [B_KT, O, O]
    assert sentences[1] == [IobToken("virus", "NN", B_KT)]


@pytest.mark.parametrize("lines", [
    ["stop"],
    ["stop NNP B-KT extra"],
    ["stop NNP Q"],
])
def test_read_conll_errors(lines):
    with pytest.raises(CorpusIOError, match="gold.conll:1:"):
        list(chunk.read_conll(lines, "gold.conll"))


def test_format_conll():
    iob = [IobToken(*t) for t in WORKED_IOB[:2]]
    assert chunk.format_conll(iob) == "stop NNP B-KT\npanic NN I-KT\n"


def _random_sentences(count, seed):
    rnd = random.Random(seed)
    tags = ["DT", "JJ", "JJS", "NN", "NNS", "NNP", "VB", "VBD", "VBG", "IN", "CC",
            "TO", "RB", "PRP", "."]
    for _ in range(count):
        n = rnd.randint(0, 20)
        yield _tagged(["w{}".format(i) for i in range(n)], [rnd.choice(tags) for _ in range(n)])


def _check_properties(tagged, compiled_grammar, oracle):
    tags = [t.tag for t in tagged]
    chunks = chunk.find_chunks(tagged, compiled_grammar)
    assert [(c.start, c.end) for c in chunks] == oracle.chunks(tags)
    previous = 0
    for c in chunks:
        assert previous <= c.start < c.end
        assert compiled_grammar.accepts(tags[c.start:c.end])
        previous = c.end
    iob = chunk.to_iob(tagged, chunks)
    chunk.validate_iob(iob)
    for merge in (True, False):
        runs = chunk.keyphrase_runs(iob, merge)
        assert sum(len(r) for r in runs) == sum(c.end - c.start for c in chunks)
    assert len(chunk.keyphrase_runs(iob, False)) == len(chunks)


def test_chunk_properties(compiled_grammar):
    oracle = RegexOracle(compiled_grammar.source)
    for tagged in _random_sentences(1000, 21):
        _check_properties(tagged, compiled_grammar, oracle)


@pytest.mark.slow
def test_chunk_properties_sweep(compiled_grammar):
    oracle = RegexOracle(compiled_grammar.source)
    for tagged in _random_sentences(10000, 22):
        _check_properties(tagged, compiled_grammar, oracle)


if __name__ == "__main__":
    pytest.main([__file__])
