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
Character driven FSM with actions, used to lex chunk grammar patterns.

Transitions are keyed on (input_symbol, state), with ANY as the fallback
symbol for a state. An action is called with the symbol and the FSM itself.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Optional

from .exceptions import FSMError

__all__ = ['FSM', 'ANY']

ANY = -1

Action = Optional[Callable[[str, "FSM"], None]]


class FSM:

    ANY = ANY

    def __init__(self, initial_state: Hashable = 0):
        self._transitions = {}   # Map (input_symbol, state) to (action, next_state).
        self.initial_state = initial_state
        self.accepting = {initial_state}
        self.reset()

    def reset(self):
        self.current_state = self.initial_state
        self.position = 0

    def add_transition(self, input_symbol, state, action: Action, next_state):
        self._transitions[(input_symbol, state)] = (action, next_state)

    def add_transitions(self, symbols: Iterable, state, action: Action, next_state):
        for c in symbols:
            self.add_transition(c, state, action, next_state)

    def get_transition(self, input_symbol, state):
        try:
            return self._transitions[(input_symbol, state)]
        except KeyError:
            try:
                return self._transitions[(ANY, state)]
            except KeyError:
                raise FSMError(input_symbol, state, self.position) from None

    def process(self, input_symbol):
        action, next_state = self.get_transition(input_symbol, self.current_state)
        if action is not None:
            action(input_symbol, self)
        if next_state is not None:
            self.current_state = next_state

    def process_string(self, s: str):
        """Feed every character of *s*. `position` is the offset of the
        character being processed.
        """
        for self.position, c in enumerate(s):
            self.process(c)
        self.position = len(s)

    def finished(self) -> bool:
        """True if the input consumed so far ends in an accepting state."""
        return self.current_state in self.accepting

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
