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
Corpus ingestion and the stages that shrink it before extraction: duplicate
removal, seeded sampling and the English gate.

Input is a file of comment records, JSON lines or CSV with a header row. Bad
records are counted and logged, never fatal; an unreadable file is.
"""

from __future__ import annotations

__all__ = ['RawComment', 'CorpusConfig', 'ReadStats', 'read_corpus',
           'detect_language', 'dedup', 'dedup_key', 'sample', 'sample_point',
           'ENGLISH', 'OTHER', 'UNKNOWN']

import csv
import functools
import hashlib
import json
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, Optional, Set, Tuple

from .exceptions import ConfigError, CorpusIOError
from .resources import DEFAULT_FILES, data_path, read_word_list
from .util import collapse_whitespace, globargv

logger = logging.getLogger(__name__)

ENGLISH = "english"
OTHER = "other"
UNKNOWN = "unknown"

FORMATS = ("jsonl", "csv")

_ALPHA_RE = re.compile(r"[^\W\d_]+")
_REPLACEMENT = "\ufffd"
_REPLACEMENT_BYTES = _REPLACEMENT.encode("utf-8")
_SPACE = 2 ** 64


@dataclass(frozen=True)
class RawComment:
    id: str
    text: str
    source: str = ""
    timestamp: Optional[str] = None


@dataclass(frozen=True)
class CorpusConfig:
    sample_fraction: float = 1.0
    sample_seed: int = 0
    english_threshold: float = 0.35

    def __post_init__(self):
        if not 0.0 <= self.sample_fraction <= 1.0:
            raise ConfigError("sample fraction must be in [0, 1], got {}".format(
                self.sample_fraction))
        if not 0 <= self.sample_seed < _SPACE:
            raise ConfigError("seed must be an unsigned 64 bit integer, got {}".format(
                self.sample_seed))
        if not 0.0 <= self.english_threshold <= 1.0:
            raise ConfigError("english threshold must be in [0, 1], got {}".format(
                self.english_threshold))


@dataclass
class ReadStats:
    """Diagnostics gathered while reading. `invalid_bytes` counts the
    undecodable byte sequences that were replaced with U+FFFD.
    """
    records: int = 0
    rejected: int = 0
    invalid_bytes: int = 0
    sources: Counter = field(default_factory=Counter)

    def accept(self, comment):
        self.records += 1
        self.sources[comment.source or "unknown"] += 1


# reading

def _decode(raw: bytes, stats: ReadStats) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("utf-8", "replace")
        stats.invalid_bytes += text.count(_REPLACEMENT) - raw.count(_REPLACEMENT_BYTES)
        return text


def _make_comment(record, where) -> Optional[RawComment]:
    if not isinstance(record, dict):
        logger.warning("%s: record is not an object, skipped", where)
        return None
    cid = record.get("id")
    if isinstance(cid, int) and not isinstance(cid, bool):
        cid = str(cid)
    if not isinstance(cid, str) or not cid.strip():
        logger.warning("%s: record has no usable 'id', skipped", where)
        return None
    text = record.get("text")
    if not isinstance(text, str):
        logger.warning("%s: record %r has no 'text', skipped", where, cid)
        return None
    source = record.get("source") or ""
    timestamp = record.get("timestamp") or None
    return RawComment(cid.strip(), text, str(source),
                      None if timestamp is None else str(timestamp))


def _lines(path, stats: ReadStats) -> Iterator[str]:
    """Decoded lines of *path*, line endings kept, read one at a time."""
    try:
        with open(path, "rb") as fo:
            for raw in fo:
                yield _decode(raw, stats)
    except OSError as err:
        raise CorpusIOError("cannot read {}: {}".format(path, err.strerror or err)) from None


def _read_jsonl(path, stats: ReadStats) -> Iterator[Tuple[str, Optional[RawComment]]]:
    for lineno, line in enumerate(_lines(path, stats), 1):
        line = line.strip()
        if not line:
            continue
        where = "{}:{}".format(path, lineno)
        try:
            record = json.loads(line)
        except ValueError as err:
            logger.warning("%s: malformed JSON (%s), skipped", where, err)
            yield where, None
            continue
        yield where, _make_comment(record, where)


def _without_bom(lines):
    first = True
    for line in lines:
        if first and line.startswith("\ufeff"):
            line = line[1:]
        first = False
        yield line


def _read_csv(path, stats: ReadStats) -> Iterator[Tuple[str, Optional[RawComment]]]:
    reader = csv.DictReader(_without_bom(_lines(path, stats)))
    try:
        fields = [f.strip().lower() for f in reader.fieldnames or []]
        if not fields:
            return
        if "id" not in fields or "text" not in fields:
            raise CorpusIOError("{}: CSV header must name at least id,text columns".format(path))
        reader.fieldnames = fields
        for row in reader:
            where = "{}:{}".format(path, reader.line_num)
            yield where, _make_comment(row, where)
    except csv.Error as err:
        raise CorpusIOError("{}:{}: {}".format(path, reader.line_num, err)) from None


def read_corpus(paths, format="jsonl", stats: Optional[ReadStats] = None) -> Iterator[RawComment]:
    """Return an iterator of one RawComment per valid record, in file order.

    *paths* is a path or a list of paths and glob patterns, read in the given
    order. Files are streamed, a line at a time. Pass a ReadStats to collect
    the diagnostics.

    Comment ids are unique within one call: a later record repeating an id is
    rejected.
    """
    if format not in FORMATS:
        raise ConfigError("unknown input format {!r}, use one of {}".format(
            format, ", ".join(FORMATS)))
    if isinstance(paths, (str, bytes)) or not isinstance(paths, Iterable):
        paths = [paths]
    stats = ReadStats() if stats is None else stats
    reader = _read_jsonl if format == "jsonl" else _read_csv
    return _chain(reader, globargv(paths), stats, format)


def _chain(reader, paths, stats, format):
    ids = set()
    for path in paths:
        logger.debug("reading %s as %s", path, format)
        for where, comment in reader(path, stats):
            if comment is None:
                stats.rejected += 1
                continue
            if comment.id in ids:
                logger.warning("%s: duplicate id %r, skipped", where, comment.id)
                stats.rejected += 1
                continue
            ids.add(comment.id)
            stats.accept(comment)
            yield comment


# language gate

@functools.lru_cache(maxsize=None)
def _bundled_words() -> FrozenSet[str]:
    return read_word_list(data_path(DEFAULT_FILES["english_words"]))


def detect_language(text: str, threshold: float = 0.35,
                    words: Optional[FrozenSet[str]] = None) -> Tuple[str, float]:
    """Return (language, confidence). Confidence is the share of alphabetic
    tokens found in the English word list. Fewer than three alphabetic tokens
    gives UNKNOWN with confidence 0.
    """
    words = _bundled_words() if words is None else words
    tokens = _ALPHA_RE.findall(text.lower())
    if len(tokens) < 3:
        return UNKNOWN, 0.0
    coverage = sum(1 for t in tokens if t in words) / len(tokens)
    return (ENGLISH if coverage >= threshold else OTHER), coverage


# dedup

def dedup_key(text: str) -> str:
    return collapse_whitespace(text.casefold())


def dedup(comments: Iterable[RawComment], seen: Optional[Set[str]] = None
          ) -> Iterator[RawComment]:
    """Keep the first comment of each dedup key. Serial stage: *seen* is a
    plain set.
    """
    seen = set() if seen is None else seen
    for comment in comments:
        key = dedup_key(comment.text)
        if key in seen:
            continue
        seen.add(key)
        yield comment


# sampling

def sample_point(comment_id: str, seed: int) -> int:
    """64 bit hash of the comment id, keyed by the seed."""
    h = hashlib.blake2b(comment_id.encode("utf-8"), digest_size=8,
                        key=seed.to_bytes(8, "little"))
    return int.from_bytes(h.digest(), "big")


def sample(comments: Iterable[RawComment], cfg: CorpusConfig) -> Iterator[RawComment]:
    """Bernoulli sample: a comment survives iff hash(id)/2**64 < fraction.
    The comparison is done in integers so fraction 1.0 keeps everything.
    """
    cutoff = int(cfg.sample_fraction * _SPACE)
    for comment in comments:
        if sample_point(comment.id, cfg.sample_seed) < cutoff:
            yield comment

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
