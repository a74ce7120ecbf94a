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
Common exceptions.
"""

__all__ = ['OpineError', 'ConfigError', 'DataFileError', 'CorpusIOError',
           'GrammarError', 'GrammarSyntaxError', 'ChunkInvariantError',
           'FSMError']


class OpineError(Exception):
    def __init__(self, value=None):
        super().__init__(value)
        self.value = value

    def __str__(self):
        return str(self.value) if self.value is not None else self.__class__.__name__


class ConfigError(OpineError):
    """Bad option, config file entry, or data file. Exit status 2.
    """


class DataFileError(ConfigError):
    """A bundled or user supplied data table could not be read or parsed.
    """
    def __init__(self, path, message, lineno=None):
        self.path = str(path)
        self.lineno = lineno
        where = self.path if lineno is None else "{}:{}".format(self.path, lineno)
        super().__init__("{}: {}".format(where, message))


class CorpusIOError(OpineError):
    """Input could not be read, or output could not be written. Exit status 1.
    """


class GrammarError(ConfigError):
    """A chunk grammar that parses but cannot be used.
    """


class GrammarSyntaxError(GrammarError):
    """Pattern text does not parse. Carries the 0-based character offset.
    """
    def __init__(self, message, position):
        self.message = message
        self.position = position
        super().__init__("{} at position {}".format(message, position))


class ChunkInvariantError(OpineError):
    """Chunks handed to IOB conversion overlap, are out of order, or out of
    bounds. This is a programming error, never a user error.
    """


class FSMError(OpineError):
    """No transition is defined for the input symbol in the current state.
    """
    def __init__(self, symbol, state, position=None):
        self.symbol = symbol
        self.state = state
        self.position = position
        super().__init__("Transition {!r} is undefined in state {}.".format(symbol, state))
