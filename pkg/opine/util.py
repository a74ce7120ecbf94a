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
Miscellaneous utility functions.
"""

__all__ = ['globargv', 'collapse_whitespace']

import os
import glob
import re

_WS_RE = re.compile(r"\s+")


def globargv(argv):
    """Expand all arguments in argv, all of glob charaters, environment
    variables, and user shorthand. Return a new list with what can be expanded
    so expanded, and those that can't are added as-is. Glob matches are sorted
    so runs over the same directory see files in the same order.
    """
    newargv = []
    for rawarg in argv:
        arg = os.path.expandvars(os.path.expanduser(str(rawarg)))
        gl = glob.has_magic(arg) and sorted(glob.glob(arg)) or [arg]
        newargv.extend(gl)
    return newargv


def collapse_whitespace(text):
    """Collapse whitespace runs to single spaces and trim."""
    return _WS_RE.sub(" ", text).strip()
