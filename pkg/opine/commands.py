#!/usr/bin/python3

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
Mine opinionated keyphrases from comment corpora.

Usage:
    opine [-v | -q] [--config FILE] <command> [<args>...]
    opine -h | --help
    opine --version

Options:
    -v, --verbose      Log debugging detail.
    -q, --quiet        Log warnings and errors only.
    --config FILE      Flat `key = value` settings file.
    -h, --help         Show this text.
    --version          Show the version.

Commands:
    run         Full extraction over a corpus, writing the reports.
    preprocess  Clean text lines.
    annotate    Split, tag and lemmatize cleaned text lines.
    chunk       Chunk tagged sentences, print IOB labels and keyphrases.
    score       Sentiment scores of keyphrase lines.
    help        Show help on a command.

The stage commands read JSON lines or plain text lines from the file given,
or standard input, and write JSON lines to standard output.
"""

__all__ = ['OpineCommands', 'CommandController', 'setup_logging', 'main',
           'EXIT_OK', 'EXIT_IO', 'EXIT_CONFIG']

import json
import logging
import sys
import textwrap

import docopt

from . import __version__
from . import exceptions
from .annotate import TaggedToken
from .chunk import (assemble_keyphrases, find_chunks, format_conll, read_conll,
                    to_iob)
from .colors import ColorFormatter
from .config import Settings, normalize_key
from .grammar import parse_grammar
from .pipeline import Resources, RunConfig, run_pipeline
from .refine import classify_polarity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2

# flags that switch a default off
_NEGATED_FLAGS = {
    "--no-merge-adjacent-chunks": "merge_adjacent_chunks",
    "--no-dedup": "dedup",
    "--drop-unknown-language": "keep_unknown_language",
}


def setup_logging(verbosity=0, stream=None):
    """One stderr handler on the `opine` logger. Positive *verbosity* is
    DEBUG, negative WARNING, zero INFO.
    """
    stream = sys.stderr if stream is None else stream
    level = logging.DEBUG if verbosity > 0 else logging.WARNING if verbosity < 0 else logging.INFO
    root = logging.getLogger("opine")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    isatty = getattr(stream, "isatty", None)
    handler.setFormatter(ColorFormatter("%(levelname)s: %(message)s",
                                        use_color=bool(isatty and isatty())))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    return root


def settings_from_arguments(arguments, config=None) -> Settings:
    """Config file values overlaid with the options given on the command line.
    Options left unset are None and never mask the file.
    """
    settings = Settings.from_file(config) if config else Settings()
    given = {}
    for name, value in arguments.items():
        if not name.startswith("--") or name in ("--config", "--conll", "--steps"):
            continue
        if name in _NEGATED_FLAGS:
            if value:
                given[_NEGATED_FLAGS[name]] = False
            continue
        if value is not None and value is not False:
            given[normalize_key(name)] = value
    inputs = list(arguments.get("<input>") or [])
    if arguments.get("--input"):
        inputs.insert(0, arguments["--input"])
    if inputs:
        given["input"] = inputs
    settings.update_from(given)
    return settings


def _input_lines(path):
    if path in (None, "-"):
        return sys.stdin
    try:
        with open(path, encoding="utf-8") as fo:
            return fo.readlines()
    except (OSError, UnicodeDecodeError) as err:
        raise exceptions.CorpusIOError("cannot read {}: {}".format(
            path, getattr(err, "strerror", None) or err)) from None


def _records(path):
    """(id, record) per non-blank input line. JSON objects are decoded, other
    lines become {"text": line} with id `line-<n>`.
    """
    lines = _input_lines(path)
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        record = None
        if line.startswith("{"):
            try:
                record = json.loads(line)
            except ValueError:
                logger.warning("line %d: malformed JSON, read as text", lineno)
        if not isinstance(record, dict):
            record = {"text": line}
        yield str(record.get("id", "line-{}".format(lineno))), record


def _tokens_json(tagged):
    return [{"surface": t.surface, "lemma": t.lemma, "tag": t.tag} for t in tagged]


def _sentences_of(record):
    """Tagged sentences from a chunk stage input record: `sentences` as
    written by annotate, or one sentence of `tokens` as [lemma, tag] pairs.
    """
    if "sentences" in record:
        sentences = record["sentences"]
    elif "tokens" in record:
        sentences = [record["tokens"]]
    else:
        raise exceptions.CorpusIOError("record {!r} has no 'sentences' or 'tokens'".format(
            record.get("id")))
    out = []
    for si, sentence in enumerate(sentences):
        tagged = []
        for ti, tok in enumerate(sentence):
            if isinstance(tok, dict):
                lemma, tag = tok["lemma"], tok["tag"]
                surface = tok.get("surface", lemma)
            else:
                lemma, tag = tok[0], tok[1]
                surface = lemma
            tagged.append(TaggedToken(surface, lemma, tag, si, ti))
        out.append(tagged)
    return out


class OpineCommands:
    """Commands are methods with docstrings here."""

    def __init__(self, config=None, out=None):
        self._config = config
        self._out = sys.stdout if out is None else out

    def _write(self, record):
        self._out.write(json.dumps(record, sort_keys=True, ensure_ascii=False))
        self._out.write("\n")

    def _run_config(self, arguments) -> RunConfig:
        config = arguments.get("--config") or self._config
        return RunConfig.from_settings(settings_from_arguments(arguments, config))

    def default_command(self, arguments):
        """Called when typed command wasn't found."""
        argv = arguments["argv"]
        logger.error("unknown command: %r", argv[0])
        return EXIT_CONFIG

    def run(self, arguments):
        """Extract opinionated keyphrases from a corpus and write the reports.

        Usage:
            run [options] [<input>...]

        Options:
            --config FILE                  Settings file, as before the command.
            -i FILE, --input FILE          Corpus file (also taken as arguments, globs allowed).
            --format FMT                   jsonl or csv.
            -o DIR, --out-dir DIR          Report directory.
            --report-format FMT            csv or json.
            --grammar TEXT                 Chunk grammar text, or a file holding it.
            --max-len N                    Longest keyphrase in tokens.
            --neutral-band X               Scores within +-X are neutral.
            --sample-fraction X            Share of comments to keep.
            --seed N                       Sampling seed.
            --english-threshold X          Word list coverage for English.
            --stopwords FILE               Whole candidate stopwords.
            --boundary-stopwords FILE      Words that cannot start or end a keyphrase.
            --slang FILE                   Slang table.
            --contractions FILE            Contraction table.
            --lexicon FILE                 Sentiment lexicon.
            --tagger-lexicon FILE          Tagger lexicon.
            --abbreviations FILE           Abbreviation list.
            --lemma-exceptions FILE        Lemmatizer exception table.
            --english-words FILE           Word list for the language gate.
            -j N, --jobs N                 Worker processes.
            --top N                        Top keyphrases per polarity in the summary.
            --no-merge-adjacent-chunks     Keep adjacent chunks apart.
            --no-dedup                     Keep duplicate comments.
            --drop-unknown-language        Drop comments too short to classify.
        """
        cfg = self._run_config(arguments)
        if not cfg.inputs:
            raise exceptions.ConfigError("no input given")
        result = run_pipeline(cfg)
        for path in result.written:
            logger.info("wrote %s", path)
        return EXIT_OK

    def preprocess(self, arguments):
        """Clean text lines: artifacts, contractions, HTML, special characters,
        repeats, slang and numbers.

        Usage:
            preprocess [options] [<file>]

        Options:
            --contractions FILE    Contraction table.
            --slang FILE           Slang table.
            --steps NAMES          Comma separated steps to run instead of all of them.
        """
        res = Resources.load(self._run_config(arguments))
        only = None
        if arguments["--steps"]:
            only = [s.strip() for s in arguments["--steps"].split(",") if s.strip()]
        for rid, record in _records(arguments["<file>"]):
            text, applied = res.preprocessor.run(str(record.get("text", "")), only)
            self._write({"id": rid, "text": text, "steps_applied": list(applied)})
        return EXIT_OK

    def annotate(self, arguments):
        """Split cleaned text lines into sentences of tagged, lemmatized tokens.

        Usage:
            annotate [options] [<file>]

        Options:
            --tagger-lexicon FILE      Tagger lexicon.
            --lemma-exceptions FILE    Lemmatizer exception table.
            --abbreviations FILE       Abbreviation list.
        """
        res = Resources.load(self._run_config(arguments))
        for rid, record in _records(arguments["<file>"]):
            sentences = res.annotator.annotate(str(record.get("text", "")))
            self._write({"id": rid, "sentences": [_tokens_json(s) for s in sentences]})
        return EXIT_OK

    def chunk(self, arguments):
        """Chunk tagged sentences and assemble keyphrases.

        Input is annotate output, records with `tokens` as [lemma, tag] pairs,
        or with --conll, CoNLL lines of `lemma tag [label]`.

        Usage:
            chunk [options] [<file>]

        Options:
            --conll                        Read and write CoNLL IOB text.
            --grammar TEXT                 Chunk grammar text, or a file holding it.
            --no-merge-adjacent-chunks     Keep adjacent chunks apart.
        """
        cfg = self._run_config(arguments)
        grammar = parse_grammar(cfg.grammar)
        merge_adjacent = cfg.merge_adjacent_chunks
        if arguments["--conll"]:
            path = arguments["<file>"]
            name = "<stdin>" if path in (None, "-") else path
            for iob in read_conll(_input_lines(path), name):
                tagged = [TaggedToken(t.lemma, t.lemma, t.tag, 0, i) for i, t in enumerate(iob)]
                self._out.write(format_conll(to_iob(tagged, find_chunks(tagged, grammar))))
                self._out.write("\n")
            return EXIT_OK
        for rid, record in _records(arguments["<file>"]):
            for tagged in _sentences_of(record):
                chunks = find_chunks(tagged, grammar)
                iob = to_iob(tagged, chunks)
                self._write({
                    "id": rid,
                    "sentence_index": tagged[0].sentence_index if tagged else 0,
                    "chunks": [[c.start, c.end] for c in chunks],
                    "iob": [[t.lemma, t.tag, t.label] for t in iob],
                    "keyphrases": assemble_keyphrases(iob, merge_adjacent),
                })
        return EXIT_OK

    def score(self, arguments):
        """Score keyphrase lines with the sentiment lexicon.

        Usage:
            score [options] [<file>]

        Options:
            --lexicon FILE        Sentiment lexicon.
            --neutral-band X      Scores within +-X are neutral.
        """
        cfg = self._run_config(arguments)
        res = Resources.load(cfg)
        for rid, record in _records(arguments["<file>"]):
            text = str(record.get("text", ""))
            scores = res.analyzer.polarity_scores(text)
            self._write({
                "id": rid,
                "text": text,
                "score": round(scores["compound"], 4),
                "polarity": classify_polarity(scores["compound"], res.filter),
                "neg": scores["neg"],
                "neu": scores["neu"],
                "pos": scores["pos"],
            })
        return EXIT_OK

    def help(self, arguments):
        """Print help text on command given, or all commands.

        Usage:
            help [<commandname>...]
        """
        args = arguments["<commandname>"]
        if not args:
            self._out.write(__doc__.lstrip())
            return EXIT_OK
        for name in args:
            meth = getattr(self, name, None)
            if name.startswith("_") or meth is None or not meth.__doc__:
                self._out.write("No command named {!r} found.\n".format(name))
                continue
            self._out.write("\n{}\n".format(name))
            self._out.write(textwrap.dedent(meth.__doc__))
            self._out.write("\n")
        return EXIT_OK


class CommandController:
    """Calls command methods with their docopt parsed arguments and maps
    errors to exit statuses.
    """

    def __init__(self, commands):
        self.commands = commands

    def call(self, argv):
        """Dispatch command method by calling with an argv that has the method
        name as first element.
        """
        if not argv or not argv[0] or argv[0].startswith("_"):
            return EXIT_CONFIG
        meth = getattr(self.commands, argv[0], None)
        if meth is None or not meth.__doc__:
            meth = self.commands.default_command
        try:
            arguments = docopt.docopt(textwrap.dedent(meth.__doc__), argv=argv[1:],
                                      help=False, version=None)
            arguments["argv"] = argv
        except docopt.DocoptLanguageError:
            arguments = {"argv": argv}
        except docopt.DocoptExit as docerr:
            logger.warning("%s", str(docerr).strip())
            return EXIT_CONFIG
        try:
            return meth(arguments)
        except exceptions.ConfigError as err:
            logger.error("%s", err)
            return EXIT_CONFIG
        except (exceptions.CorpusIOError, OSError) as err:
            logger.error("%s", err)
            return EXIT_IO
        except exceptions.OpineError as err:
            logger.error("%s: %s", err.__class__.__name__, err)
            return EXIT_IO


def main(argv=None):
    arguments = docopt.docopt(__doc__, argv=argv, version=__version__, options_first=True)
    setup_logging(1 if arguments["--verbose"] else -1 if arguments["--quiet"] else 0)
    controller = CommandController(OpineCommands(config=arguments["--config"]))
    try:
        return controller.call([arguments["<command>"]] + arguments["<args>"])
    except KeyboardInterrupt:
        return 130

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
