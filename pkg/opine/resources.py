# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#    http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Readers for the bundled data tables, and their default locations.

Every reader raises DataFileError (a ConfigError) with the offending path and
line, so a bad table stops a run before any input is read.
"""

from __future__ import annotations

__all__ = ['data_path', 'read_word_list', 'read_pair_table', 'read_tsv',
           'DEFAULT_FILES']

import csv
import os
from typing import Dict, FrozenSet, Iterator, List, Tuple

from .exceptions import DataFileError

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

# option name -> bundled file name
DEFAULT_FILES = {
    "contractions": "contractions.csv",
    "slang": "slang.csv",
    "tagger_lexicon": "tagger_lexicon.tsv",
    "abbreviations": "abbreviations.txt",
    "lemma_exceptions": "lemma_exceptions.tsv",
    "stopwords": "stopwords.txt",
    "boundary_stopwords": "boundary_stopwords.txt",
    "lexicon": "sentiment_lexicon.tsv",
    "english_words": "english_words.txt",
}


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def _read_lines(path) -> List[str]:
    try:
        with open(path, encoding="utf-8") as fo:
            return fo.read().splitlines()
    except FileNotFoundError:
        raise DataFileError(path, "no such file") from None
    except UnicodeDecodeError as err:
        raise DataFileError(path, "not valid UTF-8 ({})".format(err.reason)) from None
    except OSError as err:
        raise DataFileError(path, err.strerror or str(err)) from None


def read_word_list(path, lowercase=True) -> FrozenSet[str]:
    """One entry per line. Blank lines and `#` comments are skipped."""
    words = set()
    for line in _read_lines(path):
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower() if lowercase else line)
    return frozenset(words)


def read_pair_table(path, columns: Tuple[str, str]) -> Dict[str, str]:
    """Two column CSV with a header row naming *columns*. Keys are lowercased."""
    lines = _read_lines(path)
    reader = csv.reader(lines)
    try:
        header = [h.strip().lower() for h in next(reader)]
    except StopIteration:
        raise DataFileError(path, "empty table, expected header {}".format(
            ",".join(columns))) from None
    except csv.Error as err:
        raise DataFileError(path, str(err), 1) from None
    try:
        ki, vi = header.index(columns[0]), header.index(columns[1])
    except ValueError:
        raise DataFileError(path, "header must name {}".format(",".join(columns)), 1) from None
    table = {}
    try:
        for row in reader:
            if not row or not "".join(row).strip():
                continue
            if len(row) <= max(ki, vi):
                raise DataFileError(path, "expected {} columns".format(len(header)),
                                    reader.line_num)
            key = row[ki].strip().lower()
            if key:
                table[key] = row[vi].strip()
    except csv.Error as err:
        raise DataFileError(path, str(err), reader.line_num) from None
    return table


def read_tsv(path, min_columns: int) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, fields) for each data line of a tab separated file.
    Blank lines and lines starting with `#` are skipped.
    """
    for lineno, line in enumerate(_read_lines(path), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) < min_columns:
            raise DataFileError(path, "expected at least {} tab separated columns".format(
                min_columns), lineno)
        yield lineno, fields
