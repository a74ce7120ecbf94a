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
Keyphrase frequency statistics and the report files.

Written to the output directory:

    keyphrases.csv    keyphrase,polarity,count sorted by count, then keyphrase
    keyphrases.json   the same table as a JSON list, in place of the CSV
                      when the report format is "json"
    keyphrases.jsonl  one record per emitted keyphrase, in corpus order
    summary.json      funnel counters, per polarity totals and top lists

Nothing time dependent goes into the files, so reruns are byte-identical.
"""

from __future__ import annotations

__all__ = ['KeyphraseStat', 'aggregate', 'merge', 'top_k', 'write_report',
           'write_csv', 'write_stats_json', 'write_summary', 'write_keyphrases',
           'build_summary', 'CSV_NAME', 'JSON_NAME', 'JSONL_NAME', 'SUMMARY_NAME']

import csv
import json
import logging
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional

from .exceptions import CorpusIOError
from .refine import NEGATIVE, POSITIVE

logger = logging.getLogger(__name__)

CSV_NAME = "keyphrases.csv"
JSON_NAME = "keyphrases.json"
JSONL_NAME = "keyphrases.jsonl"
SUMMARY_NAME = "summary.json"

POLARITIES = (NEGATIVE, POSITIVE)


@dataclass(frozen=True)
class KeyphraseStat:
    keyphrase: str
    polarity: str
    count: int


def aggregate(scored: Iterable) -> Counter:
    """Count of each (keyphrase, polarity)."""
    return Counter((s.text, s.polarity) for s in scored)


def merge(a: Counter, b: Counter) -> Counter:
    """Combine two partial aggregates into a new Counter."""
    merged = Counter(a)
    merged.update(b)
    return merged


def _sort_key(stat: KeyphraseStat):
    return -stat.count, stat.keyphrase, stat.polarity


def stats_of(counts: Mapping) -> List[KeyphraseStat]:
    return sorted((KeyphraseStat(k, p, n) for (k, p), n in counts.items() if n > 0),
                  key=_sort_key)


def top_k(counts: Mapping, polarity: Optional[str], k: int) -> List[KeyphraseStat]:
    """The *k* most frequent keyphrases of *polarity* (None: either), by
    descending count then keyphrase.
    """
    if k < 0:
        raise ValueError("k must not be negative")
    stats = [s for s in stats_of(counts) if polarity is None or s.polarity == polarity]
    return stats[:k]


def build_summary(counts: Mapping, funnel: Mapping, sources: Mapping = None,
                  settings: Mapping = None, top: int = 20) -> dict:
    summary = {
        "funnel": dict(funnel),
        "emitted": {p: sum(n for (_, pol), n in counts.items() if pol == p)
                    for p in POLARITIES},
        "unique_keyphrases": {p: sum(1 for (_, pol) in counts if pol == p)
                              for p in POLARITIES},
        "top": {p: [{"keyphrase": s.keyphrase, "count": s.count}
                    for s in top_k(counts, p, top)]
                for p in POLARITIES},
        "sources": dict(sources or {}),
    }
    if settings is not None:
        summary["config"] = dict(settings)
    return summary


def _open(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as err:
        raise CorpusIOError("cannot write {}: {}".format(path, err.strerror or err)) from None


def write_csv(counts: Mapping, path):
    with _open(path) as fo:
        writer = csv.writer(fo, lineterminator="\r\n")
        writer.writerow(["keyphrase", "polarity", "count"])
        for stat in stats_of(counts):
            writer.writerow([stat.keyphrase, stat.polarity, stat.count])


def write_stats_json(counts: Mapping, path):
    with _open(path) as fo:
        json.dump([{"keyphrase": s.keyphrase, "polarity": s.polarity, "count": s.count}
                   for s in stats_of(counts)], fo, indent=2, ensure_ascii=False)
        fo.write("\n")


def write_summary(summary: Mapping, path):
    with _open(path) as fo:
        json.dump(summary, fo, sort_keys=True, indent=2, ensure_ascii=False)
        fo.write("\n")


def write_keyphrases(scored: Iterable, path):
    with _open(path) as fo:
        for s in scored:
            fo.write(json.dumps(s.as_record(), sort_keys=True, ensure_ascii=False))
            fo.write("\n")


def write_report(counts: Mapping, summary: Mapping, out_dir, scored: Iterable = (),
                 format: str = "csv") -> List[str]:
    """Write the report files into *out_dir*, creating it if needed. Return
    the written paths. *format* picks the frequency table file, CSV or JSON.
    """
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as err:
        raise CorpusIOError("cannot create {}: {}".format(out_dir, err.strerror or err)) from None
    written = []
    if format == "csv":
        path = os.path.join(out_dir, CSV_NAME)
        write_csv(counts, path)
    else:
        path = os.path.join(out_dir, JSON_NAME)
        write_stats_json(counts, path)
    written.append(path)
    path = os.path.join(out_dir, JSONL_NAME)
    write_keyphrases(scored, path)
    written.append(path)
    path = os.path.join(out_dir, SUMMARY_NAME)
    write_summary(summary, path)
    written.append(path)
    for path in written:
        logger.debug("wrote %s", path)
    return written

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
