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
ANSI color escapes and a log formatter that uses them on terminals.
"""

__all__ = ['ColorFormatter']

import logging

RESET = "\x1b[0m"

RED = "\x1b[31m"
GREEN = "\x1b[32m"
YELLOW = "\x1b[33m"
GREY = "\x1b[37m"

LT_RED = "\x1b[31;01m"

_LEVEL_COLORS = {
    logging.DEBUG: GREY,
    logging.INFO: GREEN,
    logging.WARNING: YELLOW,
    logging.ERROR: RED,
    logging.CRITICAL: LT_RED,
}


class ColorFormatter(logging.Formatter):
    """Colors the level name when *use_color* is true (normally: the
    handler's stream is a tty).
    """

    def __init__(self, fmt="%(levelname)s: %(message)s", datefmt=None, use_color=False):
        super().__init__(fmt, datefmt)
        self.use_color = use_color

    def format(self, record):
        if not self.use_color:
            return super().format(record)
        saved = record.levelname
        record.levelname = _LEVEL_COLORS.get(record.levelno, "") + saved + RESET
        try:
            return super().format(record)
        finally:
            record.levelname = saved

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab:fileencoding=utf-8
