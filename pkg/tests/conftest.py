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
Shared fixtures: the bundled resources, and a regex based reference matcher
for chunk grammars.
"""

import json
import re

import pytest

from opine.grammar import parse_grammar
from opine.pipeline import Resources, RunConfig

WORKED_SENTENCE = "Stop panic buying and be sure to use face masks in public areas"

WORKED_TAGS = ["NNP", "NN", "NN", "CC", "VB", "JJ", "TO", "VB", "NN", "NNS", "IN", "JJ", "NNS"]

WORKED_LEMMAS = ["stop", "panic", "buying", "and", "be", "sure", "to", "use", "face",
                 "mask", "in", "public", "area"]


def pattern_to_regex(pattern):
    """Translate grammar text into a Python regex over "<TAG>" strings."""
    out = []
    i = 0
    while i < len(pattern):
        c = pattern[i]
        if c == "<":
            j = pattern.index(">", i)
            name = pattern[i + 1:j].strip()
            if name.endswith(".*"):
                out.append("<" + re.escape(name[:-2]) + "[^<>]*>")
            else:
                out.append("<" + re.escape(name) + ">")
            i = j + 1
            continue
        if c == "(":
            out.append("(?:")
        elif c in ")?*+":
            out.append(c)
        i += 1
    return re.compile("".join(out))


class RegexOracle:
    """Backtracking reference for CompiledGrammar."""

    def __init__(self, pattern):
        self.regex = pattern_to_regex(pattern)

    def accepts(self, tags):
        if not tags:
            return False
        return self.regex.fullmatch("".join("<{}>".format(t) for t in tags)) is not None

    def longest_match(self, tags, start=0):
        for end in range(len(tags), start, -1):
            if self.accepts(tags[start:end]):
                return end
        return None

    def chunks(self, tags):
        spans = []
        i = 0
        while i < len(tags):
            end = self.longest_match(tags, i)
            if end is None:
                i += 1
                continue
            spans.append((i, end))
            i = end
        return spans


@pytest.fixture(scope="session")
def resources():
    return Resources.load(RunConfig())


@pytest.fixture(scope="session")
def annotator(resources):
    return resources.annotator


@pytest.fixture(scope="session")
def analyzer(resources):
    return resources.analyzer


@pytest.fixture(scope="session")
def filter_cfg(resources):
    return resources.filter


@pytest.fixture(scope="session")
def compiled_grammar():
    return parse_grammar()


@pytest.fixture
def write_jsonl(tmp_path):
    """Write records to a JSON lines file and return its path."""
    def _write(records, name="corpus.jsonl"):
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as fo:
            for record in records:
                fo.write(json.dumps(record) + "\n")
        return str(path)
    return _write
