"""Observation functions: what an attacker sees of a run.

A static observer sees the observable events only (natural projection).  An
Orwellian observer additionally learns, retroactively, everything up to the
last downgrading event: the prefix up to that event is reported verbatim
and only the remainder is filtered through the natural projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automata import (
    SILENT,
    EpsilonNfa,
    InvalidModel,
    Lts,
    PartitionedAlphabet,
    State,
    Word,
    determinize,
    entry_words,
)


def project_natural(s: Word, observable: Iterable[str]) -> Word:
    """Erase every event outside ``observable``, preserving order."""
    keep = set(observable)
    return tuple(e for e in s if e in keep)


@dataclass(frozen=True)
class Factorization:
    """Unique split of a word at its last downgrading event.

    ``prefix`` is empty or ends with a downgrading event; ``continuation``
    contains none; their concatenation is the original word.
    """

    prefix: Word
    continuation: Word


def factorize(s: Word, downgrading: Iterable[str]) -> Factorization:
    down = set(downgrading)
    cut = 0
    for i, e in enumerate(s):
        if e in down:
            cut = i + 1
    return Factorization(s[:cut], s[cut:])


def project_orwellian(s: Word, observable: Iterable[str], downgrading: Iterable[str]) -> Word:
    """Keep the prefix up to the last downgrading event verbatim and
    naturally project the rest.

    Closed form of the rightmost-event recursion (emit downgrading events
    with their full past, keep observable events, drop the rest); linear
    and stackless.  With no downgrading events this is the natural
    projection.
    """
    f = factorize(s, downgrading)
    return f.prefix + project_natural(f.continuation, observable)


@dataclass(frozen=True)
class ObservationKind:
    """A concrete observer: which events it sees directly and which events
    retroactively reveal their past."""

    observable: frozenset
    downgrading: frozenset = frozenset()

    @classmethod
    def natural(cls, observable: Iterable[str]) -> "ObservationKind":
        return cls(frozenset(observable))

    @classmethod
    def orwellian(cls, observable: Iterable[str], downgrading: Iterable[str]) -> "ObservationKind":
        return cls(frozenset(observable), frozenset(downgrading))

    def observe(self, s: Word) -> Word:
        return project_orwellian(s, self.observable, self.downgrading)


def project_language(a: Lts, set_name: str, observable: Iterable[str]) -> Lts:
    """Automaton for the natural-projection image of one of ``a``'s languages.

    Transitions outside ``observable`` turn silent, then the subset
    construction yields a complete deterministic automaton over the
    observable events whose language (under the same set name) is the image.
    """
    keep = set(observable)
    unknown = keep - set(a.alphabet.events)
    if unknown:
        raise InvalidModel(f"unknown events {sorted(unknown)}")
    kept_order = tuple(e for e in a.alphabet.events if e in keep)
    nfa = EpsilonNfa(
        kept_order,
        a.states,
        frozenset((q, e if e in keep else SILENT, r) for (q, e), r in a.delta.items()),
        a.initial,
        {set_name: a.accepting(set_name)},
    )
    return determinize(nfa, set_name, PartitionedAlphabet(observable=kept_order))


def orwellian_image_nfa(a: Lts) -> EpsilonNfa:
    """Nondeterministic automaton for the Orwellian-projection images of
    ``a``'s languages, one accepting set per source set.

    An image word is a verbatim prefix ending at a downgrading event (or
    empty) followed by the natural projection of a downgrade-free
    continuation.  The automaton has a verbatim prefix layer copying the
    system; every downgrading move additionally jumps into a continuation
    component rooted at its target, where unobservable moves turn silent.
    A fresh start state also enters the initial state's component
    silently, covering runs with no downgrade.

    Note the image alphabet is the full source alphabet: prefixes keep
    their unobservable events.
    """
    alpha = a.alphabet
    low = set(alpha.observable)
    down = set(alpha.downgrading)
    entries = set(entry_words(a))
    start: State = ("in",)
    states = {start}
    states |= {("pre", q) for q in a.states}
    states |= {("post", q, r) for q in entries for r in a.states}
    transitions = {
        (start, SILENT, ("pre", a.initial)),
        (start, SILENT, ("post", a.initial, a.initial)),
    }
    for (q, e), r in a.delta.items():
        transitions.add((("pre", q), e, ("pre", r)))
        if e in down:
            transitions.add((("pre", q), e, ("post", r, r)))
    for q in entries:
        for (r, e), r2 in a.delta.items():
            if e in down:
                continue
            transitions.add((("post", q, r), e if e in low else SILENT, ("post", q, r2)))
    accepting = {
        name: frozenset(("post", q, r) for q in entries for r in members)
        for name, members in a.accepting_sets.items()
    }
    return EpsilonNfa(alpha.events, frozenset(states), frozenset(transitions), start, accepting)
