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
The extraction run: read, dedup and sample serially, fan documents out to
workers for cleaning, the language gate, annotation, chunking and refinement,
then aggregate in corpus order and write the reports.

Each worker builds its own Resources once from the RunConfig. Everything in
Resources is read only after that.
"""

from __future__ import annotations

__all__ = ['RunConfig', 'Resources', 'DocumentResult', 'RunResult',
           'process_document', 'extract_candidates', 'run_pipeline',
           'DEFAULTS', 'FUNNEL_KEYS']

import logging
import multiprocessing
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import corpus
from .annotate import Annotator
from .chunk import find_chunks, keyphrase_runs, to_iob
from .config import Settings
from .corpus import CorpusConfig, ReadStats, RawComment
from .exceptions import ConfigError
from .grammar import DEFAULT_GRAMMAR, CompiledGrammar, parse_grammar
from .preprocess import Preprocessor
from .refine import REJECT_REASONS, FilterConfig, RefineStats, ScoredKeyphrase, refine
from .report import aggregate, build_summary, write_report
from .resources import DEFAULT_FILES, data_path, read_word_list
from .sentiment import SentimentAnalyzer, SentimentLexicon

logger = logging.getLogger(__name__)

DEFAULTS = {
    "format": "jsonl",
    "out_dir": "opine-out",
    "grammar": DEFAULT_GRAMMAR,
    "max_len": 10,
    "neutral_band": 0.05,
    "sample_fraction": 1.0,
    "seed": 0,
    "english_threshold": 0.35,
    "merge_adjacent_chunks": True,
    "dedup": True,
    "keep_unknown_language": True,
    "jobs": 1,
    "top": 20,
    "report_format": "csv",
}

FUNNEL_KEYS = ("read", "rejected_records", "invalid_bytes", "deduped", "sampled",
               "non_english", "english", "failed", "processed", "sentences",
               "chunks", "candidates") + tuple("rejected_" + r for r in REJECT_REASONS) + (
               "neutral", "emitted")

# documents handed to a worker at a time
CHUNKSIZE = 64


@dataclass(frozen=True)
class RunConfig:
    inputs: Tuple[str, ...] = ()
    format: str = "jsonl"
    out_dir: str = "opine-out"
    grammar: str = DEFAULT_GRAMMAR
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    max_len: int = 10
    neutral_band: float = 0.05
    files: Tuple[Tuple[str, str], ...] = ()
    merge_adjacent_chunks: bool = True
    dedup: bool = True
    keep_unknown_language: bool = True
    jobs: int = 1
    top: int = 20
    report_format: str = "csv"

    def __post_init__(self):
        if self.format not in corpus.FORMATS:
            raise ConfigError("unknown input format {!r}, use one of {}".format(
                self.format, ", ".join(corpus.FORMATS)))
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1, got {}".format(self.jobs))
        if self.top < 0:
            raise ConfigError("top must not be negative, got {}".format(self.top))
        if self.report_format not in ("csv", "json"):
            raise ConfigError("report format must be csv or json, got {!r}".format(
                self.report_format))
        # validates the ranges
        self.filter_config()

    @classmethod
    def from_settings(cls, settings: Settings) -> "RunConfig":
        """Build from merged settings, falling back to DEFAULTS. Every data
        file must exist and the grammar must compile.
        """
        s = Settings(DEFAULTS)
        s.update_from(settings)
        inputs = s.get("input") or ()
        if isinstance(inputs, str):
            inputs = (inputs,)
        grammar = s.get_str("grammar")
        if os.path.isfile(os.path.expanduser(grammar)):
            grammar = _read_grammar(os.path.expanduser(grammar))
        parse_grammar(grammar)
        files = []
        for name, default in sorted(DEFAULT_FILES.items()):
            path = s.get_path(name) or data_path(default)
            if not os.path.isfile(path):
                raise ConfigError("{} file not found: {}".format(name.replace("_", " "), path))
            files.append((name, path))
        return cls(
            inputs=tuple(str(i) for i in inputs),
            format=s.get_str("format"),
            out_dir=s.get_path("out_dir"),
            grammar=grammar,
            corpus=CorpusConfig(
                sample_fraction=s.get_float("sample_fraction"),
                sample_seed=s.get_int("seed"),
                english_threshold=s.get_float("english_threshold")),
            max_len=s.get_int("max_len"),
            neutral_band=s.get_float("neutral_band"),
            files=tuple(files),
            merge_adjacent_chunks=s.get_bool("merge_adjacent_chunks"),
            dedup=s.get_bool("dedup"),
            keep_unknown_language=s.get_bool("keep_unknown_language"),
            jobs=s.get_int("jobs"),
            top=s.get_int("top"),
            report_format=s.get_str("report_format"),
        )

    def file(self, name: str) -> str:
        return dict(self.files).get(name) or data_path(DEFAULT_FILES[name])

    def filter_config(self, stopwords=frozenset(), boundary_stopwords=frozenset()
                      ) -> FilterConfig:
        return FilterConfig(stopwords=stopwords, boundary_stopwords=boundary_stopwords,
                            max_len=self.max_len, neutral_band=self.neutral_band)

    def effective(self) -> Dict[str, object]:
        """The non-path settings, for the run summary."""
        return {
            "format": self.format,
            "grammar": self.grammar,
            "sample_fraction": self.corpus.sample_fraction,
            "seed": self.corpus.sample_seed,
            "english_threshold": self.corpus.english_threshold,
            "max_len": self.max_len,
            "neutral_band": self.neutral_band,
            "merge_adjacent_chunks": self.merge_adjacent_chunks,
            "dedup": self.dedup,
            "keep_unknown_language": self.keep_unknown_language,
            "top": self.top,
        }


def _read_grammar(path):
    try:
        with open(path, encoding="utf-8") as fo:
            return fo.read().strip()
    except (OSError, UnicodeDecodeError) as err:
        raise ConfigError("cannot read grammar file {}: {}".format(path, err)) from None


@dataclass(frozen=True)
class Resources:
    preprocessor: Preprocessor
    annotator: Annotator
    grammar: CompiledGrammar
    filter: FilterConfig
    analyzer: SentimentAnalyzer
    english_words: frozenset

    @classmethod
    def load(cls, cfg: RunConfig) -> "Resources":
        return cls(
            preprocessor=Preprocessor.from_files(cfg.file("contractions"), cfg.file("slang")),
            annotator=Annotator.from_files(cfg.file("tagger_lexicon"),
                                           cfg.file("lemma_exceptions"),
                                           cfg.file("abbreviations")),
            grammar=parse_grammar(cfg.grammar),
            filter=cfg.filter_config(read_word_list(cfg.file("stopwords")),
                                     read_word_list(cfg.file("boundary_stopwords"))),
            analyzer=SentimentAnalyzer(SentimentLexicon.from_file(cfg.file("lexicon"))),
            english_words=read_word_list(cfg.file("english_words")),
        )


@dataclass
class DocumentResult:
    doc_id: str
    language: str = corpus.UNKNOWN
    kept: bool = False
    failed: bool = False
    sentences: int = 0
    chunks: int = 0
    keyphrases: List[ScoredKeyphrase] = field(default_factory=list)
    stats: RefineStats = field(default_factory=RefineStats)


def extract_candidates(sentences, grammar: CompiledGrammar, merge_adjacent_chunks=True
                       ) -> Tuple[List[Tuple[int, List[str]]], int]:
    """(sentence_index, lemmas) candidates of annotated sentences, and the
    number of chunks found.
    """
    candidates = []
    nchunks = 0
    for index, tagged in enumerate(sentences):
        chunks = find_chunks(tagged, grammar)
        nchunks += len(chunks)
        iob = to_iob(tagged, chunks)
        for run in keyphrase_runs(iob, merge_adjacent_chunks):
            candidates.append((index, [t.lemma for t in run]))
    return candidates, nchunks


def process_document(comment: RawComment, res: Resources, cfg: RunConfig) -> DocumentResult:
    """One document through cleaning, the language gate and extraction."""
    result = DocumentResult(comment.id)
    clean = res.preprocessor.clean(comment)
    language, _ = corpus.detect_language(clean.text, cfg.corpus.english_threshold,
                                         res.english_words)
    result.language = language
    if language == corpus.OTHER or (language == corpus.UNKNOWN
                                    and not cfg.keep_unknown_language):
        return result
    result.kept = True
    sentences = res.annotator.annotate(clean.text)
    result.sentences = len(sentences)
    candidates, result.chunks = extract_candidates(sentences, res.grammar,
                                                   cfg.merge_adjacent_chunks)
    result.keyphrases = refine(candidates, res.filter, res.analyzer, comment.id, result.stats)
    return result


# per process state for pool workers
_worker = {}


def _init_worker(cfg: RunConfig, resources: Optional[Resources] = None):
    _worker["cfg"] = cfg
    _worker["resources"] = Resources.load(cfg) if resources is None else resources


def _process(comment: RawComment) -> DocumentResult:
    try:
        return process_document(comment, _worker["resources"], _worker["cfg"])
    except Exception as err:  # noqa
        logger.warning("document %r failed: %s", comment.id, err)
        return DocumentResult(comment.id, failed=True)


@dataclass
class RunResult:
    funnel: Counter
    counts: Counter
    keyphrases: List[ScoredKeyphrase]
    sources: Counter
    summary: dict = field(default_factory=dict)
    written: List[str] = field(default_factory=list)


class _Counted:
    """Counts items passing through under *key* of *funnel*."""

    def __init__(self, iterable, funnel, key):
        self.iterable = iterable
        self.funnel = funnel
        self.key = key

    def __iter__(self):
        for item in self.iterable:
            self.funnel[self.key] += 1
            yield item


def _results(comments, cfg: RunConfig, resources: Resources):
    if cfg.jobs == 1:
        _init_worker(cfg, resources)
        for comment in comments:
            yield _process(comment)
        return
    ctx = multiprocessing.get_context()
    with ctx.Pool(cfg.jobs, initializer=_init_worker, initargs=(cfg,)) as pool:
        yield from pool.imap(_process, comments, chunksize=CHUNKSIZE)


def run_pipeline(cfg: RunConfig, write: bool = True) -> RunResult:
    """Run extraction over the configured inputs. Per-document problems are
    counted and logged; configuration and I/O problems raise.

    The data tables are loaded here before any worker starts, so a bad table
    raises a ConfigError instead of killing pool workers.
    """
    resources = Resources.load(cfg)
    funnel = Counter({k: 0 for k in FUNNEL_KEYS})
    read_stats = ReadStats()
    stream = corpus.read_corpus(cfg.inputs, cfg.format, read_stats)
    if cfg.dedup:
        stream = corpus.dedup(stream)
    stream = _Counted(stream, funnel, "deduped")
    stream = _Counted(corpus.sample(stream, cfg.corpus), funnel, "sampled")

    counts = Counter()
    refine_stats = RefineStats()
    keyphrases = []
    for result in _results(stream, cfg, resources):
        if result.failed:
            funnel["failed"] += 1
            continue
        if not result.kept:
            funnel["non_english"] += 1
            continue
        funnel["english"] += 1
        funnel["processed"] += 1
        funnel["sentences"] += result.sentences
        funnel["chunks"] += result.chunks
        refine_stats.merge(result.stats)
        counts.update(aggregate(result.keyphrases))
        keyphrases.extend(result.keyphrases)

    funnel["read"] = read_stats.records
    funnel["rejected_records"] = read_stats.rejected
    funnel["invalid_bytes"] = read_stats.invalid_bytes
    funnel["candidates"] = refine_stats.candidates
    for reason in REJECT_REASONS:
        funnel["rejected_" + reason] = refine_stats.rejected[reason]
    funnel["neutral"] = refine_stats.neutral
    funnel["emitted"] = refine_stats.emitted

    summary = build_summary(counts, {k: funnel[k] for k in FUNNEL_KEYS},
                            dict(sorted(read_stats.sources.items())),
                            cfg.effective(), cfg.top)
    result = RunResult(funnel, counts, keyphrases, read_stats.sources, summary)
    if write:
        result.written = write_report(counts, summary, cfg.out_dir, keyphrases,
                                      cfg.report_format)
    for key in FUNNEL_KEYS:
        logger.info("%s: %d", key.replace("_", " "), funnel[key])
    return result

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
