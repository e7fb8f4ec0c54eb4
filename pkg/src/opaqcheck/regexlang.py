"""A small regular-expression language over declared event tokens.

Syntax: event tokens, concatenation by juxtaposition (whitespace), union
``+``, iteration ``*``, parentheses, and ``()`` for the empty word.  Event
tokens must not contain the reserved characters ``( ) + *``.  Patterns
compile through the standard fragment construction with silent moves, then
determinize into a complete automaton over the full model alphabet,
suitable for folding into a system as a secret.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import SILENT, EpsilonNfa, InvalidModel, Lts, PartitionedAlphabet, determinize

_RESERVED = "()+*"


class RegexError(InvalidModel):
    def __init__(self, position: int, message: str):
        super().__init__(f"column {position + 1}: {message}")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # "event" or one of ( ) + *
    value: str
    position: int


def _tokenize(pattern: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(pattern):
        c = pattern[i]
        if c.isspace():
            i += 1
        elif c in _RESERVED:
            tokens.append(_Token(c, c, i))
            i += 1
        else:
            j = i
            while j < len(pattern) and not pattern[j].isspace() and pattern[j] not in _RESERVED:
                j += 1
            tokens.append(_Token("event", pattern[i:j], i))
            i = j
    return tokens


class _Fragment:
    """Start/stop states of a partial automaton under construction."""

    __slots__ = ("start", "stop")

    def __init__(self, start: int, stop: int):
        self.start = start
        self.stop = stop


class _Parser:
    def __init__(self, pattern: str, events: set[str]):
        self.tokens = _tokenize(pattern)
        self.pos = 0
        self.events = events
        self.length = len(pattern)
        self.transitions: set[tuple[int, str | None, int]] = set()
        self.counter = 0

    def _state(self) -> int:
        self.counter += 1
        return self.counter

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise RegexError(self.length, "unexpected end of pattern")
        self.pos += 1
        return tok

    def _epsilon(self) -> _Fragment:
        s, t = self._state(), self._state()
        self.transitions.add((s, SILENT, t))
        return _Fragment(s, t)

    def parse(self) -> _Fragment:
        frag = self._union()
        tok = self._peek()
        if tok is not None:
            raise RegexError(tok.position, f"unexpected {tok.value!r}")
        return frag

    def _union(self) -> _Fragment:
        parts = [self._concat()]
        while (tok := self._peek()) is not None and tok.kind == "+":
            self._take()
            parts.append(self._concat())
        if len(parts) == 1:
            return parts[0]
        s, t = self._state(), self._state()
        for p in parts:
            self.transitions.add((s, SILENT, p.start))
            self.transitions.add((p.stop, SILENT, t))
        return _Fragment(s, t)

    def _concat(self) -> _Fragment:
        factors = []
        while (tok := self._peek()) is not None and tok.kind in ("event", "("):
            factors.append(self._factor())
        if not factors:
            tok = self._peek()
            pos = tok.position if tok else self.length
            raise RegexError(pos, "expected an event or a group")
        frag = factors[0]
        for nxt in factors[1:]:
            self.transitions.add((frag.stop, SILENT, nxt.start))
            frag = _Fragment(frag.start, nxt.stop)
        return frag

    def _factor(self) -> _Fragment:
        frag = self._atom()
        while (tok := self._peek()) is not None and tok.kind == "*":
            self._take()
            s, t = self._state(), self._state()
            self.transitions |= {
                (s, SILENT, frag.start),
                (frag.stop, SILENT, t),
                (s, SILENT, t),
                (frag.stop, SILENT, frag.start),
            }
            frag = _Fragment(s, t)
        return frag

    def _atom(self) -> _Fragment:
        tok = self._take()
        if tok.kind == "event":
            if tok.value not in self.events:
                raise RegexError(tok.position, f"unknown event {tok.value!r}")
            s, t = self._state(), self._state()
            self.transitions.add((s, tok.value, t))
            return _Fragment(s, t)
        if tok.kind == "(":
            nxt = self._peek()
            if nxt is not None and nxt.kind == ")":
                self._take()
                return self._epsilon()
            frag = self._union()
            closing = self._take()
            if closing.kind != ")":
                raise RegexError(closing.position, "expected ')'")
            return frag
        raise RegexError(tok.position, f"unexpected {tok.value!r}")


def compile_regex(pattern: str, alpha: PartitionedAlphabet) -> Lts:
    """Compile a pattern into a complete deterministic automaton over the
    full alphabet, language in accepting set ``F``."""
    if not pattern.strip():
        raise RegexError(0, "empty pattern (use '()' for the empty word)")
    parser = _Parser(pattern, set(alpha.events))
    frag = parser.parse()
    states = frozenset(range(1, parser.counter + 1))
    nfa = EpsilonNfa(alpha.events, states, frozenset(parser.transitions), frag.start, {"F": frozenset({frag.stop})})
    return determinize(nfa, "F", alpha)
