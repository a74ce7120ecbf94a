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
Unit tests for opine.refine module.
"""

import random

import pytest

from opine import refine, report
from opine.exceptions import ConfigError
from opine.refine import (NEGATIVE, NEUTRAL, POSITIVE, FilterConfig, RefineStats,
                          Rejection, ScoredKeyphrase)
from opine.sentiment import SentimentLexicon


@pytest.fixture
def small_cfg():
    return FilterConfig(stopwords=frozenset(["the", "it"]),
                        boundary_stopwords=frozenset(["the", "be", "sure", "in", "to"]),
                        max_len=4)


@pytest.mark.parametrize("candidate, expected", [
    (["the", "virus"], ["virus"]),
    (["be", "sure"], []),
    (["mask", "in", "public"], ["mask", "in", "public"]),
    (["to", "the", "mask", "to"], ["mask"]),
])
def test_strip_boundary_stopwords(small_cfg, candidate, expected):
    assert refine.strip_boundary_stopwords(candidate, small_cfg) == expected


def test_internal_stopwords():
    cfg = FilterConfig(boundary_stopwords=frozenset(["the"]),
                       internal_stopwords=frozenset(["the", "of"]))
    assert refine.strip_boundary_stopwords(["the", "end", "of", "the", "day"], cfg) == \
        ["end", "day"]
    assert refine.strip_boundary_stopwords(["of", "day"], cfg) == ["of", "day"]


def test_filter_candidate(small_cfg):
    assert refine.filter_candidate(["the"], small_cfg) == Rejection("is_stopword")
    assert refine.filter_candidate(["be", "sure"], small_cfg) == Rejection("stripped_empty")
    assert refine.filter_candidate(["a", "b", "c", "d", "e"], small_cfg) == Rejection("too_long")
    assert refine.filter_candidate(["the", "a", "b", "c", "d"], small_cfg) == ["a", "b", "c", "d"]
    assert not Rejection("too_long")


def test_too_long_default_limit(filter_cfg):
    eleven = ["word{}".format(i) for i in range(11)]
    assert refine.filter_candidate(eleven, filter_cfg) == Rejection("too_long")
    assert refine.filter_candidate(eleven[:10], filter_cfg) == eleven[:10]


def test_worked_filtering(filter_cfg):
    assert refine.filter_candidate(["be", "sure"], filter_cfg) == Rejection("stripped_empty")
    assert refine.filter_candidate("use face mask in public area".split(), filter_cfg) == \
        ["use", "face", "mask", "in", "public", "area"]


@pytest.mark.parametrize("score, expected", [
    (0.05, NEUTRAL),
    (-0.05, NEUTRAL),
    (0.0, NEUTRAL),
    (0.0501, POSITIVE),
    (-0.0501, NEGATIVE),
    (0.1027, POSITIVE),
    (-0.6705, NEGATIVE),
])
def test_classify_polarity(score, expected):
    assert refine.classify_polarity(score, FilterConfig()) == expected


def test_zero_band():
    cfg = FilterConfig(neutral_band=0.0)
    assert refine.classify_polarity(0.0, cfg) == NEUTRAL
    assert refine.classify_polarity(1e-9, cfg) == POSITIVE


@pytest.mark.parametrize("kwargs", [
    {"max_len": 0},
    {"neutral_band": -0.1},
    {"neutral_band": 1.0},
])
def test_filter_config_errors(kwargs):
    with pytest.raises(ConfigError):
        FilterConfig(**kwargs)


def test_worked_refine(filter_cfg, analyzer):
    stats = RefineStats()
    out = refine.refine(["stop panic buying", "be sure", "use face mask in public area"],
                        filter_cfg, analyzer, doc_id="d1", stats=stats)
    assert [(s.text, s.polarity) for s in out] == [
        ("stop panic buying", NEGATIVE), ("use face mask in public area", POSITIVE)]
    assert out[0].score == pytest.approx(-0.6705, abs=5e-4)
    assert out[1].score == pytest.approx(0.1027, abs=5e-4)
    assert out[1].token_count == 6
    assert stats.candidates == 3
    assert stats.rejected == {"stripped_empty": 1}
    assert stats.neutral == 0 and stats.emitted == 2


def test_refine_sentence_index_and_neutral(filter_cfg):
    lexicon = SentimentLexicon({"fine": 2.0})
    stats = RefineStats()
    out = refine.refine([(3, ["fine", "day"]), (4, ["rainy", "day"]), (5, [])],
                        filter_cfg, lexicon, doc_id="d2", stats=stats)
    assert len(out) == 1
    assert out[0].sentence_index == 3
    assert out[0].doc_id == "d2"
    assert stats.candidates == 2
    assert stats.neutral == 1


def test_as_record():
    record = ScoredKeyphrase("d1", 0, "good mask", 2, 0.123456, POSITIVE).as_record()
    assert record == {"doc_id": "d1", "sentence_index": 0, "text": "good mask",
                      "token_count": 2, "score": 0.1235, "polarity": POSITIVE}


def test_stats_merge():
    a = RefineStats(candidates=2, neutral=1, emitted=1)
    a.rejected["too_long"] += 1
    b = RefineStats(candidates=3, emitted=2)
    b.rejected["too_long"] += 2
    b.rejected["is_stopword"] += 1
    a.merge(b)
    assert (a.candidates, a.neutral, a.emitted) == (5, 1, 3)
    assert a.rejected == {"too_long": 3, "is_stopword": 1}


def _random_documents(filter_cfg, analyzer, count, seed):
    rnd = random.Random(seed)
    pools = [
        sorted(w for w in analyzer.lexicon.valences if w.isalpha()),
        sorted(filter_cfg.boundary_stopwords),
        sorted(filter_cfg.stopwords),
        ["not", "very", "slightly", "never"],
        ["mask", "virus", "lockdown", "vaccine", "street", "xyzzy"],
    ]
    for _ in range(count):
        candidates = []
        for index in range(rnd.randint(0, 6)):
            size = rnd.choice([1, 1, 2, 3, 4, 6, 9, 11, 14])
            candidates.append((index, [rnd.choice(rnd.choice(pools)) for _ in range(size)]))
        yield candidates


def _check_refine_properties(filter_cfg, analyzer, count, seed):
    total = RefineStats()
    emitted = []
    for n, candidates in enumerate(_random_documents(filter_cfg, analyzer, count, seed)):
        stats = RefineStats()
        out = refine.refine(candidates, filter_cfg, analyzer, "doc{}".format(n), stats)
        assert stats.candidates == len(candidates)
        assert stats.candidates == (sum(stats.rejected.values()) + stats.neutral
                                    + stats.emitted)
        assert stats.emitted == len(out)
        for keyphrase in out:
            tokens = keyphrase.text.split()
            assert keyphrase.token_count == len(tokens) <= filter_cfg.max_len
            assert tokens[0] not in filter_cfg.boundary_stopwords
            assert tokens[-1] not in filter_cfg.boundary_stopwords
            assert -1.0 <= keyphrase.score <= 1.0
            assert abs(keyphrase.score) > filter_cfg.neutral_band
            assert keyphrase.polarity == (POSITIVE if keyphrase.score > 0 else NEGATIVE)
            assert keyphrase.doc_id == "doc{}".format(n)
        total.merge(stats)
        emitted.extend(out)
    counts = report.aggregate(emitted)
    assert sum(counts.values()) == total.emitted == len(emitted)
    assert sum(s.count for s in report.stats_of(counts)) == total.emitted
    summary = report.build_summary(counts, {})
    assert sum(summary["emitted"].values()) == total.emitted
    assert set(polarity for _, polarity in counts) <= {POSITIVE, NEGATIVE}


def test_refine_properties(filter_cfg, analyzer):
    _check_refine_properties(filter_cfg, analyzer, 1000, 31)


@pytest.mark.slow
def test_refine_properties_sweep(filter_cfg, analyzer):
    _check_refine_properties(filter_cfg, analyzer, 10000, 32)


if __name__ == "__main__":
    pytest.main([__file__])
