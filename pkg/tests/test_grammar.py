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
Unit tests for opine.grammar module.
"""

import itertools
import random

import pytest

from opine import grammar
from opine.exceptions import GrammarError, GrammarSyntaxError

from conftest import RegexOracle, WORKED_TAGS

SMALL_ALPHABET = ["DT", "JJ", "NN", "NNS", "VB", "IN", "CC", "TO"]

PATTERNS = [
    grammar.DEFAULT_GRAMMAR,
    "<NN.*>+",
    "<DT>? <JJ>* <NN>",
    "(<JJ> <NN>)+ <VB.*>?",
    "{ <IN> (<DT> <NN.*>)* }",
    "<VB> (<TO> <VB>)? <NN.*>*",
]


def test_parse_tree():
    tree = grammar.parse_pattern("{ <DT>? <JJ.*>* (<IN> <NN>)+ }")
    assert str(tree) == "<DT>? <JJ.*>* (<IN> <NN>)+"
    first = tree.items[0]
    assert isinstance(first, grammar.Repeat)
    assert first.node == grammar.Atom("DT")
    assert (first.min, first.max) == (0, 1)
    assert tree.items[1].node.tags() == frozenset(["JJ", "JJR", "JJS"])


def test_lexer_tokens():
    tokens = grammar.lex_pattern("<NN.*>+ (<IN>)")
    assert [(t.kind, t.value, t.position) for t in tokens] == [
        ("atom", "NN.*", 0), ("quantifier", "+", 6), ("(", "(", 8),
        ("atom", "IN", 9), (")", ")", 13)]


def test_default_grammar_compiles(compiled_grammar):
    assert compiled_grammar.source == grammar.DEFAULT_GRAMMAR
    assert compiled_grammar.accepts(["DT", "JJ", "NN"])
    assert compiled_grammar.accepts(["VB"])
    assert compiled_grammar.accepts(["IN", "JJ", "NNS"])
    assert not compiled_grammar.accepts([])
    assert not compiled_grammar.accepts(["CC"])
    assert not compiled_grammar.accepts(["NN", "DT", "NN", "DT"])


def test_worked_longest_matches(compiled_grammar):
    assert compiled_grammar.longest_match(WORKED_TAGS, 0) == 3
    assert compiled_grammar.longest_match(WORKED_TAGS, 3) is None
    assert compiled_grammar.longest_match(WORKED_TAGS, 4) == 6
    assert compiled_grammar.longest_match(WORKED_TAGS, 7) == 10
    assert compiled_grammar.longest_match(WORKED_TAGS, 10) == 13


def test_unknown_tag_never_matches(compiled_grammar):
    assert not compiled_grammar.accepts(["XX"])
    assert compiled_grammar.longest_match(["NN", "XX", "NN"]) == 1


@pytest.mark.parametrize("source, position", [
    ("<NN", 0),
    ("<NN> >", 5),
    ("<NN <JJ>", 0),
    ("(<NN>", 0),
    ("<NN>)", 4),
    ("* <NN>", 0),
    ("<NN> ? ?", 7),
    ("<NN> | <JJ>", 5),
    ("{ <NN>", 0),
    ("<>", 0),
    ("<N N>", 0),
])
def test_syntax_errors(source, position):
    with pytest.raises(GrammarSyntaxError) as info:
        grammar.parse_grammar(source)
    assert info.value.position == position
    assert str(info.value).endswith("at position {}".format(position))


@pytest.mark.parametrize("source", [
    "<XYZ>",
    "<Q.*>",
    "",
    "{ }",
    "()",
    "()*",
])
def test_semantic_errors(source):
    with pytest.raises(GrammarError) as info:
        grammar.parse_grammar(source)
    assert not isinstance(info.value, GrammarSyntaxError)


def _check_against_oracle(compiled, oracle, sequences):
    for tags in sequences:
        tags = list(tags)
        assert compiled.accepts(tags) == oracle.accepts(tags), tags
        for start in range(len(tags)):
            assert compiled.longest_match(tags, start) == oracle.longest_match(tags, start), \
                (tags, start)


def _exhaustive(max_len):
    for n in range(max_len + 1):
        yield from itertools.product(SMALL_ALPHABET, repeat=n)


def _random(count, lo, hi, seed):
    rnd = random.Random(seed)
    for _ in range(count):
        yield [rnd.choice(SMALL_ALPHABET) for _ in range(rnd.randint(lo, hi))]


@pytest.mark.parametrize("source", PATTERNS)
def test_oracle_equivalence(source):
    compiled = grammar.parse_grammar(source)
    oracle = RegexOracle(source)
    _check_against_oracle(compiled, oracle, _exhaustive(4))
    _check_against_oracle(compiled, oracle, _random(1000, 5, 12, 3))


@pytest.mark.slow
def test_oracle_equivalence_exhaustive():
    compiled = grammar.parse_grammar()
    oracle = RegexOracle(grammar.DEFAULT_GRAMMAR)
    for tags in _exhaustive(6):
        assert compiled.accepts(list(tags)) == oracle.accepts(list(tags)), tags
    _check_against_oracle(compiled, oracle, _random(100000, 7, 12, 4))


def test_full_tagset_against_oracle(compiled_grammar):
    oracle = RegexOracle(compiled_grammar.source)
    tags = sorted({t for t, _ in compiled_grammar.transitions})
    rnd = random.Random(9)
    for _ in range(2000):
        seq = [rnd.choice(tags + ["CC", "PRP", "."]) for _ in range(rnd.randint(1, 8))]
        assert compiled_grammar.accepts(seq) == oracle.accepts(seq), seq


if __name__ == "__main__":
    pytest.main([__file__])
