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

"""A dictionary of run settings that supports environment-style operations.

Config files are flat text, one setting per line:

    # comments and blank lines are ignored
    max-len = 10
    data = $HOME/opine-data
    slang = ${data}/slang.csv

Keys are the long option names, with or without leading dashes; dashes and
underscores are interchangeable. Values may refer to the process environment
or to keys set earlier in the file.
"""

__all__ = ['Settings', 'normalize_key']

import os

from .exceptions import ConfigError

import re
_var_re = re.compile(r'\$([a-zA-Z0-9_\?]+|\{[^}]*\})')
del re

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def normalize_key(name):
    return str(name).strip().lstrip("-").replace("-", "_").lower()


class Settings(dict):
    """Settings is a dictionary-like object that does automatic variable
    expansion when setting new elements with `set` or `export`.

    Lookups for variable expansion fall back to the process environment, so
    data file locations can be written relative to $HOME and friends.
    """

    @classmethod
    def from_file(cls, path, **kwargs):
        """Constructor that reads a flat `key = value` config file."""
        settings = cls(**kwargs)
        try:
            with open(path, encoding="utf-8") as fo:
                lines = fo.readlines()
        except OSError as err:
            raise ConfigError("cannot read config file {}: {}".format(
                path, err.strerror or err)) from None
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError("{}:{}: expected 'key = value', got {!r}".format(
                    path, lineno, line))
            settings.export(line)
        return settings

    def set(self, name, val):
        self.__setitem__(normalize_key(name), self.expand(str(val)))

    def export(self, nameval):
        """Similar to the _export_ command in the bash shell.

        It assigns the name on the left of the equals sign to the value on the
        right, performing variable expansion if necessary.
        """
        name, val = nameval.split("=", 1)
        name = normalize_key(name)
        if not name:
            raise ConfigError("empty key in {!r}".format(nameval))
        self.__setitem__(name, self.expand(val.strip()))
        return name

    def update_from(self, other):
        """Overlay the non-None values of *other*, which take precedence."""
        for name, val in other.items():
            if val is not None:
                self[normalize_key(name)] = val

    def expand(self, value):
        """Pass in a string that might have variable expansion to be performed
        (e.g. a section that has $NAME embedded), and return the expanded
        string.
        """
        i = 0
        while 1:
            m = _var_re.search(value, i)
            if not m:
                return value
            i, j = m.span(0)
            vname = m.group(1)
            if vname[0] == '{':
                vname = vname[1:-1]
            tail = value[j:]
            tv = self.get(normalize_key(vname))
            if tv is None:
                tv = os.environ.get(vname)
            if tv is not None:  # expand to empty if not found
                value = value[:i] + str(tv)
            else:
                value = value[:i]
            i = len(value)
            value = value + tail

    # typed accessors
    def get_str(self, name, default=None):
        val = self.get(normalize_key(name))
        return default if val is None else str(val)

    def get_int(self, name, default=None):
        val = self.get(normalize_key(name))
        if val is None:
            return default
        try:
            return int(val)
        except (TypeError, ValueError):
            raise ConfigError("{}: expected an integer, got {!r}".format(name, val)) from None

    def get_float(self, name, default=None):
        val = self.get(normalize_key(name))
        if val is None:
            return default
        try:
            return float(val)
        except (TypeError, ValueError):
            raise ConfigError("{}: expected a number, got {!r}".format(name, val)) from None

    def get_bool(self, name, default=None):
        val = self.get(normalize_key(name))
        if val is None:
            return default
        if isinstance(val, bool):
            return val
        sval = str(val).strip().lower()
        if sval in _TRUE:
            return True
        if sval in _FALSE:
            return False
        raise ConfigError("{}: expected a boolean, got {!r}".format(name, val))

    def get_path(self, name, default=None):
        val = self.get(normalize_key(name))
        if val is None:
            return default
        return os.path.expanduser(str(val))

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
