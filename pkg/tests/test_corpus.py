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
Unit tests for opine.corpus module.
"""

import math
import os
import random
from collections import Counter

import pytest

from opine import corpus
from opine.corpus import CorpusConfig, RawComment, ReadStats
from opine.exceptions import ConfigError, CorpusIOError


def _comments(*texts):
    return [RawComment("c{}".format(i), t) for i, t in enumerate(texts)]


def test_read_jsonl(write_jsonl):
    path = write_jsonl([
        {"id": "a", "text": "stay home", "source": "twitter"},
        {"id": 7, "text": "wash hands"},
        {"text": "no id"},
        {"id": "b"},
    ])
    stats = ReadStats()
    comments = list(corpus.read_corpus(path, "jsonl", stats))
    assert [c.id for c in comments] == ["a", "7"]
    assert comments[0].source == "twitter"
    assert stats.records == 2
    assert stats.rejected == 2
    assert stats.sources == {"twitter": 1, "unknown": 1}


def test_read_jsonl_malformed_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_bytes(b'{"id": "a", "text": "ok"}\n{not json\n\n{"id": "b", "text": "ok"}\n')
    stats = ReadStats()
    assert [c.id for c in corpus.read_corpus(str(path), stats=stats)] == ["a", "b"]
    assert stats.rejected == 1


def test_read_invalid_utf8(tmp_path):
    path = tmp_path / "latin.jsonl"
    path.write_bytes(b'{"id": "a", "text": "caf\xe9"}\n')
    stats = ReadStats()
    comments = list(corpus.read_corpus(str(path), stats=stats))
    assert comments[0].text == "caf\ufffd"
    assert stats.invalid_bytes == 1


def test_read_csv(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text('id,text,source\n1,"stay, home",forum\n2,wash hands,\n', encoding="utf-8")
    comments = list(corpus.read_corpus(str(path), "csv"))
    assert [(c.id, c.text) for c in comments] == [("1", "stay, home"), ("2", "wash hands")]
    assert comments[0].source == "forum"


def test_read_csv_without_columns(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("name,body\nx,y\n", encoding="utf-8")
    with pytest.raises(CorpusIOError):
        list(corpus.read_corpus(str(path), "csv"))


def test_duplicate_ids_are_rejected(write_jsonl, tmp_path):
    first = write_jsonl([{"id": "a", "text": "stay home"}, {"id": "a", "text": "wash hands"},
                         {"id": "b", "text": "wear masks"}], "one.jsonl")
    second = write_jsonl([{"id": "b", "text": "keep distance"}, {"id": "c", "text": "ok"}],
                         "two.jsonl")
    stats = ReadStats()
    comments = list(corpus.read_corpus([first, second], stats=stats))
    assert [(c.id, c.text) for c in comments] == [
        ("a", "stay home"), ("b", "wear masks"), ("c", "ok")]
    assert (stats.records, stats.rejected) == (3, 2)


def test_read_streams_files_in_order(write_jsonl, tmp_path):
    first = write_jsonl([{"id": "a", "text": "x"}, {"id": "b", "text": "y"}], "one.jsonl")
    later = str(tmp_path / "later.jsonl")
    stats = ReadStats()
    comments = corpus.read_corpus([first, later], stats=stats)
    assert next(comments).id == "a"
    assert stats.records == 1
    assert next(comments).id == "b"
    # the second file is only opened once the first is exhausted
    write_jsonl([{"id": "c", "text": "z"}], "later.jsonl")
    assert [c.id for c in comments] == ["c"]
    assert stats.records == 3


def test_read_csv_streaming_details(tmp_path):
    path = tmp_path / "c.csv"
    path.write_bytes(b'\xef\xbb\xbfID,Text\r\n1,"two\r\nlines"\r\n2,caf\xe9\r\n,no id\r\n')
    stats = ReadStats()
    comments = list(corpus.read_corpus(str(path), "csv", stats))
    assert [(c.id, c.text) for c in comments] == [("1", "two\r\nlines"), ("2", "caf\ufffd")]
    assert stats.invalid_bytes == 1
    assert stats.rejected == 1


def test_read_empty_csv(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_bytes(b"")
    stats = ReadStats()
    assert list(corpus.read_corpus(str(path), "csv", stats)) == []
    assert stats.records == 0


def test_read_glob_in_order(write_jsonl, tmp_path):
    write_jsonl([{"id": "b", "text": "second"}], "b.jsonl")
    write_jsonl([{"id": "a", "text": "first"}], "a.jsonl")
    comments = corpus.read_corpus(str(tmp_path / "*.jsonl"))
    assert [c.id for c in comments] == ["a", "b"]


def test_missing_file(tmp_path):
    with pytest.raises(CorpusIOError):
        list(corpus.read_corpus(str(tmp_path / "absent.jsonl")))


def test_unknown_format():
    with pytest.raises(ConfigError):
        corpus.read_corpus("x", "xml")


def test_detect_language():
    lang, conf = corpus.detect_language("people should stay at home and wash their hands")
    assert lang == corpus.ENGLISH
    assert conf >= 0.35
    lang, _ = corpus.detect_language("los ciudadanos deben quedarse en casa hoy")
    assert lang == corpus.OTHER
    assert corpus.detect_language("ok then") == (corpus.UNKNOWN, 0.0)


def _language_sample():
    path = os.path.join(os.path.dirname(__file__), "data", "language_sample.tsv")
    with open(path, encoding="utf-8") as fo:
        for line in fo:
            if line.startswith("#") or not line.strip():
                continue
            label, text = line.rstrip("\n").split("\t", 1)
            yield label, text


def test_detect_language_accuracy():
    sample = list(_language_sample())
    assert Counter(label for label, _ in sample) == {corpus.ENGLISH: 500, corpus.OTHER: 500}
    correct = sum(1 for label, text in sample if corpus.detect_language(text)[0] == label)
    assert correct >= 0.95 * len(sample)


def test_detect_language_is_pure():
    text = "we need more masks in the shops"
    assert corpus.detect_language(text) == corpus.detect_language(text)


def test_dedup():
    comments = _comments("Stay  Home", "stay home", "wash hands", "STAY HOME ")
    kept = list(corpus.dedup(comments))
    assert [c.id for c in kept] == ["c0", "c2"]
    assert list(corpus.dedup(kept)) == kept


def test_dedup_planted_duplicates():
    rnd = random.Random(5)
    texts = ["comment {} about masks and panic buying".format(i) for i in range(9000)]
    copies = [rnd.choice(texts) for _ in range(1000)]
    copies = ["  " + t.upper().replace(" ", "\t ") for t in copies]
    mixed = texts + copies
    rnd.shuffle(mixed)
    comments = [RawComment("c{}".format(i), t) for i, t in enumerate(mixed)]
    kept = list(corpus.dedup(comments))
    assert len(kept) == 9000
    assert len({corpus.dedup_key(c.text) for c in kept}) == 9000


def test_sample_extremes():
    comments = _comments(*["text {}".format(i) for i in range(200)])
    assert list(corpus.sample(comments, CorpusConfig(sample_fraction=1.0))) == comments
    assert list(corpus.sample(comments, CorpusConfig(sample_fraction=0.0))) == []


def test_sample_is_monotone():
    comments = _comments(*["text {}".format(i) for i in range(2000)])
    small = {c.id for c in corpus.sample(comments, CorpusConfig(0.1, 42))}
    large = {c.id for c in corpus.sample(comments, CorpusConfig(0.3, 42))}
    assert small <= large


def test_sample_rate():
    n = 100000
    comments = (RawComment(str(i), "") for i in range(n))
    kept = sum(1 for _ in corpus.sample(comments, CorpusConfig(0.13, 7)))
    sigma = math.sqrt(n * 0.13 * 0.87)
    assert abs(kept - n * 0.13) <= 3 * sigma


def test_sample_depends_on_seed():
    assert corpus.sample_point("abc", 1) != corpus.sample_point("abc", 2)
    assert corpus.sample_point("abc", 1) == corpus.sample_point("abc", 1)


@pytest.mark.parametrize("kwargs", [
    {"sample_fraction": 1.5},
    {"sample_fraction": -0.1},
    {"sample_seed": -1},
    {"english_threshold": 2.0},
])
def test_bad_corpus_config(kwargs):
    with pytest.raises(ConfigError):
        CorpusConfig(**kwargs)


if __name__ == "__main__":
    pytest.main([__file__])
