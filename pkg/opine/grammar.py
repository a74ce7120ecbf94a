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
Chunk grammars: regular patterns over part-of-speech tags.

    { <DT>? <JJ.*>* <NN.*>* <VB.*>? (<IN>? <DT>? <JJ.*>* <NN.*>*)? }

An atom `<NN>` matches that tag, `<NN.*>` any tag starting with NN. Atoms
and parenthesized groups take the quantifiers ?, * and +. The braces are
optional. There is no alternation.

The pattern is lexed by a character FSM, parsed into a small tree, built into
an NFA and determinized over the Penn tagset. Patterns that can only match
the empty sequence are rejected, since a chunk has at least one token.
"""

from __future__ import annotations

__all__ = ['DEFAULT_GRAMMAR', 'Atom', 'Seq', 'Repeat', 'CompiledGrammar',
           'parse_grammar', 'parse_pattern', 'lex_pattern']

from collections import namedtuple
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exceptions import FSMError, GrammarError, GrammarSyntaxError
from .fsm import FSM, ANY
from .tagger import PENN_TAGS

DEFAULT_GRAMMAR = "{ <DT>? <JJ.*>* <NN.*>* <VB.*>? (<IN>? <DT>? <JJ.*>* <NN.*>*)? }"

ALPHABET = tuple(sorted(PENN_TAGS))

QUANTIFIERS = {"?": (0, 1), "*": (0, None), "+": (1, None)}

Token = namedtuple("Token", "kind value position")


# pattern tree

@dataclass(frozen=True)
class Atom:
    name: str
    prefix: bool = False

    def tags(self) -> FrozenSet[str]:
        if self.prefix:
            return frozenset(t for t in ALPHABET if t.startswith(self.name))
        return frozenset([self.name]) if self.name in PENN_TAGS else frozenset()

    def __str__(self):
        return "<{}{}>".format(self.name, ".*" if self.prefix else "")


@dataclass(frozen=True)
class Seq:
    items: Tuple = ()

    def __str__(self):
        return " ".join(str(i) for i in self.items)


@dataclass(frozen=True)
class Repeat:
    node: object
    min: int
    max: Optional[int]

    def __str__(self):
        q = {(0, 1): "?", (0, None): "*", (1, None): "+"}[(self.min, self.max)]
        inner = str(self.node)
        return (inner if isinstance(self.node, Atom) else "({})".format(inner)) + q


# lexing

class _PatternLexer:

    def __init__(self):
        f = FSM("free")
        f.add_transitions(" \t\r\n", "free", None, "free")
        f.add_transitions("{}()", "free", self._bracket, "free")
        f.add_transitions("?*+", "free", self._quantifier, "free")
        f.add_transition("<", "free", self._open_atom, "atom")
        f.add_transition(">", "free", self._stray_close, "free")
        f.add_transition("<", "atom", self._nested_open, "atom")
        f.add_transition(">", "atom", self._close_atom, "free")
        f.add_transition(ANY, "atom", self._atom_text, "atom")
        self._fsm = f

    def lex(self, source: str) -> List[Token]:
        self.tokens = []
        self._fsm.reset()
        try:
            self._fsm.process_string(source)
        except FSMError as err:
            raise GrammarSyntaxError("unexpected character {!r}".format(err.symbol),
                                     err.position) from None
        if not self._fsm.finished():
            raise GrammarSyntaxError("unbalanced '<'", self._atom_start)
        return self.tokens

    def _bracket(self, c, fsm):
        self.tokens.append(Token(c, c, fsm.position))

    def _quantifier(self, c, fsm):
        self.tokens.append(Token("quantifier", c, fsm.position))

    def _open_atom(self, c, fsm):
        self._atom_start = fsm.position
        self._atom = ""

    def _atom_text(self, c, fsm):
        self._atom += c

    def _nested_open(self, c, fsm):
        raise GrammarSyntaxError("unbalanced '<'", self._atom_start)

    def _stray_close(self, c, fsm):
        raise GrammarSyntaxError("unbalanced '>'", fsm.position)

    def _close_atom(self, c, fsm):
        self.tokens.append(Token("atom", self._atom, self._atom_start))


def lex_pattern(source: str) -> List[Token]:
    return _PatternLexer().lex(source)


# parsing

def _make_atom(text, position) -> Atom:
    name = text.strip()
    prefix = name.endswith(".*")
    if prefix:
        name = name[:-2]
    if (not name and not prefix) or any(c.isspace() or c in "*+?()<>{}|" for c in name):
        raise GrammarSyntaxError("bad tag pattern {!r}".format(text), position)
    atom = Atom(name, prefix)
    if not atom.tags():
        raise GrammarError("tag pattern {} matches no known tag (at position {})".format(
            atom, position))
    return atom


class _PatternParser:
    """Recursive descent over the lexer's tokens.

        pattern  := "{" sequence "}" | sequence
        sequence := item*
        item     := (atom | "(" sequence ")") quantifier?
    """

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self) -> Optional[Token]:
        tok = self._peek()
        self.index += 1
        return tok

    def parse(self):
        first = self._peek()
        braced = first is not None and first.kind == "{"
        if braced:
            self._next()
        node = self._sequence()
        if braced:
            tok = self._next()
            if tok is None:
                raise GrammarSyntaxError("unbalanced '{'", first.position)
            if tok.kind != "}":
                self._unexpected(tok)
        tok = self._peek()
        if tok is not None:
            self._unexpected(tok)
        return node

    def _unexpected(self, tok):
        if tok.kind == "quantifier":
            raise GrammarSyntaxError("quantifier {!r} has nothing to repeat".format(tok.value),
                                     tok.position)
        if tok.kind in (")", "}"):
            raise GrammarSyntaxError("unbalanced {!r}".format(tok.value), tok.position)
        raise GrammarSyntaxError("unexpected {!r}".format(tok.value), tok.position)

    def _sequence(self) -> Seq:
        items = []
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in ("atom", "("):
                return Seq(tuple(items))
            items.append(self._item())

    def _item(self):
        tok = self._next()
        if tok.kind == "atom":
            node = _make_atom(tok.value, tok.position)
        else:
            node = self._sequence()
            close = self._next()
            if close is None:
                raise GrammarSyntaxError("unbalanced '('", tok.position)
            if close.kind != ")":
                self._unexpected(close)
        quant = self._peek()
        if quant is not None and quant.kind == "quantifier":
            self._next()
            lo, hi = QUANTIFIERS[quant.value]
            node = Repeat(node, lo, hi)
        return node


def parse_pattern(source: str):
    """Parse pattern text into its tree (Atom, Seq and Repeat nodes)."""
    return _PatternParser(lex_pattern(source)).parse()


# automaton

class _NFA:
    """Thompson construction. Each state has epsilon edges and tag set edges."""

    def __init__(self):
        self.epsilon = []
        self.moves = []

    def state(self) -> int:
        self.epsilon.append([])
        self.moves.append([])
        return len(self.epsilon) - 1

    def build(self, node) -> Tuple[int, int]:
        start, end = self.state(), self.state()
        if isinstance(node, Atom):
            self.moves[start].append((node.tags(), end))
        elif isinstance(node, Seq):
            current = start
            for item in node.items:
                s, e = self.build(item)
                self.epsilon[current].append(s)
                current = e
            self.epsilon[current].append(end)
        elif isinstance(node, Repeat):
            s, e = self.build(node.node)
            self.epsilon[start].append(s)
            self.epsilon[e].append(end)
            if node.min == 0:
                self.epsilon[start].append(end)
            if node.max is None:
                self.epsilon[e].append(s)
        else:
            raise TypeError("not a pattern node: {!r}".format(node))
        return start, end

    def closure(self, states) -> FrozenSet[int]:
        seen = set(states)
        todo = list(states)
        while todo:
            for nxt in self.epsilon[todo.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return frozenset(seen)

    def step(self, states, tag) -> FrozenSet[int]:
        targets = [t for s in states for tags, t in self.moves[s] if tag in tags]
        return self.closure(targets) if targets else frozenset()


class CompiledGrammar:
    """A DFA over the Penn tagset. State 0 is the start state; a missing
    (tag, state) entry means no match is possible from there.
    """

    def __init__(self, source: str, tree, transitions: Dict[Tuple[str, int], int],
                 accepting: FrozenSet[int], nstates: int):
        self.source = source
        self.tree = tree
        self.transitions = transitions
        self.accepting = accepting
        self.nstates = nstates

    def __repr__(self):
        return "{}({!r})".format(self.__class__.__name__, self.source)

    def accepts(self, tags: Sequence[str]) -> bool:
        """True if the whole (non-empty) tag sequence is a chunk."""
        if not tags:
            return False
        state = 0
        for tag in tags:
            state = self.transitions.get((tag, state))
            if state is None:
                return False
        return state in self.accepting

    def longest_match(self, tags: Sequence[str], start: int = 0) -> Optional[int]:
        """End (exclusive) of the longest non-empty match starting at
        *start*, or None.
        """
        state = 0
        end = None
        for i in range(start, len(tags)):
            state = self.transitions.get((tags[i], state))
            if state is None:
                break
            if state in self.accepting:
                end = i + 1
        return end


def _determinize(nfa: _NFA, start: int, final: int):
    initial = nfa.closure([start])
    numbers = {initial: 0}
    todo = [initial]
    transitions = {}
    while todo:
        current = todo.pop()
        for tag in ALPHABET:
            target = nfa.step(current, tag)
            if not target:
                continue
            if target not in numbers:
                numbers[target] = len(numbers)
                todo.append(target)
            transitions[(tag, numbers[current])] = numbers[target]
    accepting = frozenset(n for states, n in numbers.items() if final in states)
    return transitions, accepting, len(numbers)


def _matches_nonempty(transitions, accepting) -> bool:
    """True if some sequence of one or more tags reaches an accepting state."""
    seen = set()
    todo = [t for (tag, s), t in transitions.items() if s == 0]
    while todo:
        state = todo.pop()
        if state in accepting:
            return True
        if state in seen:
            continue
        seen.add(state)
        todo.extend(t for (tag, s), t in transitions.items() if s == state)
    return False


def parse_grammar(source: str = DEFAULT_GRAMMAR) -> CompiledGrammar:
    """Compile chunk grammar text. Raises GrammarSyntaxError for text that
    does not parse and GrammarError for a pattern that can only match the
    empty sequence.
    """
    tree = parse_pattern(source)
    nfa = _NFA()
    start, final = nfa.build(tree)
    transitions, accepting, nstates = _determinize(nfa, start, final)
    if not _matches_nonempty(transitions, accepting):
        raise GrammarError("pattern {!r} can only match the empty sequence".format(source))
    return CompiledGrammar(source, tree, transitions, accepting, nstates)

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
