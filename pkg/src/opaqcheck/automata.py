"""Finite automata and the closed set of constructions the deciders run on.

Two representations are used throughout: a deterministic labeled transition
system with a partial step function (``Lts``) and a nondeterministic
automaton with silent moves (``EpsilonNfa``), the intermediate form of
projection images and the layered reduction constructions.

States are opaque hashable tokens.  Constructions produce structured names
(pairs for products, frozensets for subset states); :func:`render_state`
turns them into canonical whitespace-free strings for reports and
serialized models.

Everything here is immutable after construction and every operation is a
pure function of its inputs, so concurrent use needs no coordination.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping

State = Hashable
Word = tuple[str, ...]

#: Label of silent transitions in an EpsilonNfa; distinct from every event.
SILENT = None


class InvalidModel(ValueError):
    """Malformed automaton, alphabet, or operation input."""


def word(text: str) -> Word:
    """Split a space-separated event string into a word."""
    return tuple(text.split())


def format_word(w: Iterable[str]) -> str:
    """Render a word as space-separated event tokens."""
    return " ".join(w)


def render_state(q: State) -> str:
    """Canonical whitespace-free name for a possibly structured state."""
    if isinstance(q, tuple):
        return "(" + ",".join(render_state(p) for p in q) + ")"
    if isinstance(q, frozenset):
        return "{" + ",".join(sorted(render_state(p) for p in q)) + "}"
    return str(q)


@dataclass(frozen=True)
class PartitionedAlphabet:
    """Event set split into disjoint observability roles.

    Interference checks read the same roles as Low (observable), High
    (unobservable) and Down (downgrading).  Event order is declaration
    order, observable class first; it fixes the lexicographic order used
    when counterexamples and witnesses are tie-broken.
    """

    observable: tuple[str, ...] = ()
    unobservable: tuple[str, ...] = ()
    downgrading: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        ordered = self.observable + self.unobservable + self.downgrading
        for e in ordered:
            if not isinstance(e, str) or not e or any(c.isspace() for c in e):
                raise InvalidModel(f"bad event token {e!r}")
        if len(set(ordered)) != len(ordered):
            raise InvalidModel("alphabet classes overlap or repeat an event")
        object.__setattr__(self, "_events", ordered)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(ordered)})

    @property
    def events(self) -> tuple[str, ...]:
        return self._events  # type: ignore[attr-defined]

    def __contains__(self, e: object) -> bool:
        return e in self._index  # type: ignore[attr-defined]

    def index(self, e: str) -> int:
        try:
            return self._index[e]  # type: ignore[attr-defined]
        except KeyError:
            raise InvalidModel(f"unknown event {e!r}") from None

    def role(self, e: str) -> str:
        if e in self.observable:
            return "observable"
        if e in self.unobservable:
            return "unobservable"
        if e in self.downgrading:
            return "downgrading"
        raise InvalidModel(f"unknown event {e!r}")

    def restricted(self, keep: Iterable[str]) -> "PartitionedAlphabet":
        """The sub-alphabet containing only ``keep``, roles preserved."""
        kept = set(keep)
        unknown = kept - set(self.events)
        if unknown:
            raise InvalidModel(f"unknown events {sorted(unknown)}")
        return PartitionedAlphabet(
            tuple(e for e in self.observable if e in kept),
            tuple(e for e in self.unobservable if e in kept),
            tuple(e for e in self.downgrading if e in kept),
        )


def alphabet(observable: str = "", unobservable: str = "", downgrading: str = "") -> PartitionedAlphabet:
    """Build an alphabet from space-separated event tokens."""
    return PartitionedAlphabet(tuple(observable.split()), tuple(unobservable.split()), tuple(downgrading.split()))


def word_sort_key(alpha: PartitionedAlphabet, w: Word) -> tuple[int, tuple[int, ...]]:
    """Shortest-then-lexicographic order key, event order per declaration."""
    return (len(w), tuple(alpha.index(e) for e in w))


@dataclass(frozen=True, eq=False)
class Lts:
    """Deterministic labeled transition system with a partial step function.

    ``accepting_sets`` maps set names to state sets so several languages
    (typically ``F`` for the system language and ``Fphi`` for a secret)
    ride the same automaton.
    """

    alphabet: PartitionedAlphabet
    states: frozenset
    delta: Mapping[tuple[State, str], State]
    initial: State
    accepting_sets: Mapping[str, frozenset]

    def __post_init__(self) -> None:
        if self.initial not in self.states:
            raise InvalidModel(f"initial state {render_state(self.initial)} not declared")
        for (q, e), r in self.delta.items():
            if q not in self.states or r not in self.states:
                raise InvalidModel(f"transition {render_state(q)} -{e}-> {render_state(r)} uses undeclared state")
            if e not in self.alphabet:
                raise InvalidModel(f"transition on undeclared event {e!r}")
        for name, members in self.accepting_sets.items():
            if not members <= self.states:
                raise InvalidModel(f"accepting set {name} contains undeclared states")

    @classmethod
    def from_transitions(
        cls,
        alpha: PartitionedAlphabet,
        transitions: Iterable[tuple[State, str, State]],
        initial: State,
        accepting_sets: Mapping[str, Iterable[State]],
        states: Iterable[State] = (),
    ) -> "Lts":
        """Build from transition triples, rejecting nondeterminism."""
        delta: dict[tuple[State, str], State] = {}
        everything = set(states)
        everything.add(initial)
        for q, e, r in transitions:
            if (q, e) in delta and delta[(q, e)] != r:
                raise InvalidModel(f"nondeterministic on ({render_state(q)}, {e})")
            delta[(q, e)] = r
            everything.add(q)
            everything.add(r)
        sets = {name: frozenset(members) for name, members in accepting_sets.items()}
        return cls(alpha, frozenset(everything), delta, initial, sets)

    def accepting(self, name: str) -> frozenset:
        try:
            return self.accepting_sets[name]
        except KeyError:
            raise InvalidModel(f"automaton has no accepting set named {name!r}") from None

    def accepts(self, w: Word, set_name: str = "F") -> bool:
        q = step(self, self.initial, w)
        return q is not None and q in self.accepting(set_name)


@dataclass(frozen=True, eq=False)
class EpsilonNfa:
    """Nondeterministic automaton with silent (``SILENT``-labeled) moves."""

    alphabet: tuple[str, ...]
    states: frozenset
    transitions: frozenset
    initial: State
    accepting_sets: Mapping[str, frozenset]

    def __post_init__(self) -> None:
        events = set(self.alphabet)
        if self.initial not in self.states:
            raise InvalidModel("initial state not declared")
        for q, label, r in self.transitions:
            if q not in self.states or r not in self.states:
                raise InvalidModel("transition endpoint not declared")
            if label is not SILENT and label not in events:
                raise InvalidModel(f"transition on undeclared event {label!r}")
        for name, members in self.accepting_sets.items():
            if not members <= self.states:
                raise InvalidModel(f"accepting set {name} contains undeclared states")

    def accepting(self, name: str) -> frozenset:
        try:
            return self.accepting_sets[name]
        except KeyError:
            raise InvalidModel(f"automaton has no accepting set named {name!r}") from None

    def _adjacency(self) -> tuple[dict, dict]:
        silent: dict[State, set] = {}
        labeled: dict[tuple[State, str], set] = {}
        for q, label, r in self.transitions:
            if label is SILENT:
                silent.setdefault(q, set()).add(r)
            else:
                labeled.setdefault((q, label), set()).add(r)
        return silent, labeled

    def epsilon_closure(self, seed: Iterable[State], silent: dict | None = None) -> frozenset:
        if silent is None:
            silent, _ = self._adjacency()
        todo = list(seed)
        seen = set(todo)
        while todo:
            q = todo.pop()
            for r in silent.get(q, ()):
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def accepts(self, w: Word, set_name: str = "F") -> bool:
        """Direct simulation; the reference answer determinization is tested against."""
        silent, labeled = self._adjacency()
        current = self.epsilon_closure({self.initial}, silent)
        for e in w:
            moved = set()
            for q in current:
                moved |= labeled.get((q, e), set())
            current = self.epsilon_closure(moved, silent)
            if not current:
                return False
        return bool(current & self.accepting(set_name))


@dataclass(frozen=True)
class Inclusion:
    """Outcome of a language-inclusion check."""

    holds: bool
    counterexample: Word | None = None


# ---------------------------------------------------------------------------
# walking and reachability


def step(a: Lts, q: State, s: Word) -> State | None:
    """Run the partial step function from ``q`` over ``s``.

    Returns the reached state, or None as soon as a step is undefined.
    """
    if q not in a.states:
        raise InvalidModel(f"unknown state {render_state(q)}")
    for e in s:
        if e not in a.alphabet:
            raise InvalidModel(f"unknown event {e!r}")
        q = a.delta.get((q, e))
        if q is None:
            return None
    return q


def reachable_states(a: Lts) -> set:
    seen = {a.initial}
    todo = [a.initial]
    while todo:
        q = todo.pop()
        for e in a.alphabet.events:
            r = a.delta.get((q, e))
            if r is not None and r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


def state_order(a: Lts) -> tuple:
    """Canonical state order: breadth-first discovery, then leftovers by name."""
    order = [a.initial]
    seen = {a.initial}
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for e in a.alphabet.events:
            r = a.delta.get((q, e))
            if r is not None and r not in seen:
                seen.add(r)
                order.append(r)
    order.extend(sorted(a.states - seen, key=render_state))
    return tuple(order)


def lex_shortest_paths(a: Lts) -> dict[State, Word]:
    """For every reachable state the shortest word reaching it, ties broken
    lexicographically by event declaration order."""
    paths: dict[State, Word] = {a.initial: ()}
    queue: deque[State] = deque([a.initial])
    while queue:
        q = queue.popleft()
        for e in a.alphabet.events:
            r = a.delta.get((q, e))
            if r is not None and r not in paths:
                paths[r] = paths[q] + (e,)
                queue.append(r)
    return paths


def shortest_accepted(a: Lts, target: Callable[[State], bool] | Iterable[State]) -> Word | None:
    """Shortest word reaching a target state, lexicographically least among
    the shortest; None when no target state is reachable."""
    if not callable(target):
        members = frozenset(target)
        target = lambda q: q in members  # noqa: E731
    if target(a.initial):
        return ()
    seen = {a.initial}
    queue: deque[tuple[State, Word]] = deque([(a.initial, ())])
    while queue:
        q, path = queue.popleft()
        for e in a.alphabet.events:
            r = a.delta.get((q, e))
            if r is None or r in seen:
                continue
            w = path + (e,)
            if target(r):
                return w
            seen.add(r)
            queue.append((r, w))
    return None


# ---------------------------------------------------------------------------
# constructions


def trim(a: Lts) -> Lts:
    """Restrict to the part reachable from the initial state."""
    keep = reachable_states(a)
    return Lts(
        a.alphabet,
        frozenset(keep),
        {(q, e): r for (q, e), r in a.delta.items() if q in keep},
        a.initial,
        {name: members & keep for name, members in a.accepting_sets.items()},
    )


def rebase(a: Lts, q: State) -> Lts:
    """The same automaton started from ``q``."""
    if q not in a.states:
        raise InvalidModel(f"unknown state {render_state(q)}")
    return Lts(a.alphabet, a.states, a.delta, q, a.accepting_sets)


def restrict(a: Lts, events: Iterable[str]) -> Lts:
    """Drop the given events from the alphabet and every transition on them."""
    dropped = set(events)
    unknown = dropped - set(a.alphabet.events)
    if unknown:
        raise InvalidModel(f"unknown events {sorted(unknown)}")
    return Lts(
        a.alphabet.restricted(set(a.alphabet.events) - dropped),
        a.states,
        {(q, e): r for (q, e), r in a.delta.items() if e not in dropped},
        a.initial,
        a.accepting_sets,
    )


def with_alphabet(a: Lts, alpha: PartitionedAlphabet) -> Lts:
    """Re-house the automaton over a wider (or re-partitioned) alphabet."""
    used = {e for (_, e) in a.delta}
    if not used <= set(alpha.events):
        raise InvalidModel("new alphabet misses events in use")
    return Lts(alpha, a.states, a.delta, a.initial, a.accepting_sets)


def with_set(a: Lts, name: str, members: Iterable[State]) -> Lts:
    sets = dict(a.accepting_sets)
    sets[name] = frozenset(members)
    return Lts(a.alphabet, a.states, a.delta, a.initial, sets)


def product(a: Lts, b: Lts) -> Lts:
    """Synchronous product, trimmed to reachable pairs.

    A step is defined exactly when both components step; accepting sets are
    left for the caller to attach (components are readable off the pair
    states).
    """
    if a.alphabet.events != b.alphabet.events:
        raise InvalidModel("product requires identical alphabets")
    start = (a.initial, b.initial)
    states = {start}
    delta: dict[tuple[State, str], State] = {}
    queue = deque([start])
    while queue:
        (p, q) = queue.popleft()
        for e in a.alphabet.events:
            pa = a.delta.get((p, e))
            qb = b.delta.get((q, e))
            if pa is None or qb is None:
                continue
            nxt = (pa, qb)
            delta[((p, q), e)] = nxt
            if nxt not in states:
                states.add(nxt)
                queue.append(nxt)
    return Lts(a.alphabet, frozenset(states), delta, start, {})


def _fresh_sink(states: frozenset) -> str:
    name = "sink"
    while name in states:
        name += "_"
    return name


def complete(a: Lts, over: Iterable[str] | None = None) -> Lts:
    """Total-ize the step function by adding one fresh non-accepting sink."""
    events = tuple(over) if over is not None else a.alphabet.events
    used = {e for (_, e) in a.delta}
    if not used <= set(events):
        raise InvalidModel("completion events must cover the events in use")
    if not set(events) <= set(a.alphabet.events):
        raise InvalidModel("completion events must belong to the alphabet")
    sink = _fresh_sink(a.states)
    states = a.states | {sink}
    delta = dict(a.delta)
    for q in states:
        for e in events:
            delta.setdefault((q, e), sink)
    return Lts(a.alphabet, states, delta, a.initial, a.accepting_sets)


def is_complete(a: Lts, over: Iterable[str] | None = None) -> bool:
    events = tuple(over) if over is not None else a.alphabet.events
    return all((q, e) in a.delta for q in a.states for e in events)


def complement(a: Lts, set_name: str) -> Lts:
    """Complete, then flip membership of the named accepting set."""
    done = complete(a)
    sets = dict(done.accepting_sets)
    sets[set_name] = done.states - done.accepting(set_name)
    return Lts(done.alphabet, done.states, done.delta, done.initial, sets)


def lts_to_nfa(a: Lts) -> EpsilonNfa:
    return EpsilonNfa(
        a.alphabet.events,
        a.states,
        frozenset((q, e, r) for (q, e), r in a.delta.items()),
        a.initial,
        dict(a.accepting_sets),
    )


def determinize(nfa: EpsilonNfa, accepting: str, alpha: PartitionedAlphabet | None = None) -> Lts:
    """Silent-closure subset construction.

    The result is deterministic and complete over the automaton's alphabet;
    a subset state belongs to the named accepting set exactly when it meets
    the source set.  Only reachable subsets are materialized.
    """
    if alpha is None:
        alpha = PartitionedAlphabet(observable=nfa.alphabet)
    elif set(alpha.events) != set(nfa.alphabet):
        raise InvalidModel("partition does not cover the automaton's alphabet")
    silent, labeled = nfa._adjacency()
    marks = nfa.accepting(accepting)
    start = nfa.epsilon_closure({nfa.initial}, silent)
    subsets = {start}
    delta: dict[tuple[State, str], State] = {}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for e in alpha.events:
            moved: set = set()
            for q in current:
                moved |= labeled.get((q, e), set())
            nxt = nfa.epsilon_closure(moved, silent)
            delta[(current, e)] = nxt
            if nxt not in subsets:
                subsets.add(nxt)
                queue.append(nxt)
    return Lts(
        alpha,
        frozenset(subsets),
        delta,
        start,
        {accepting: frozenset(s for s in subsets if s & marks)},
    )


def is_subset(a: Lts, a_set: str, b: Lts, b_set: str) -> Inclusion:
    """Decide language inclusion through emptiness of a x complement(b).

    On failure the counterexample is the shortest word of the difference,
    lexicographically least among the shortest.
    """
    if a.alphabet.events != b.alphabet.events:
        raise InvalidModel("inclusion requires identical alphabets")
    b_comp = complement(b, b_set)
    pairs = product(a, b_comp)
    in_a = a.accepting(a_set)
    in_comp = b_comp.accepting(b_set)
    w = shortest_accepted(pairs, lambda pq: pq[0] in in_a and pq[1] in in_comp)
    return Inclusion(w is None, w)


def incorporate_secret(g: Lts, f: str, g_phi: Lts, f_phi: str) -> Lts:
    """Fold a secret automaton into the system as a second accepting set.

    The result is the trimmed product carrying ``F`` (the system language)
    and ``Fphi`` (system language intersect secret language, which forces
    the secret inside the system language).  The secret automaton is
    completed first when its step function is partial.
    """
    if set(g.alphabet.events) != set(g_phi.alphabet.events):
        raise InvalidModel("secret automaton must share the system alphabet")
    phi = with_alphabet(g_phi, g.alphabet)
    if not is_complete(phi):
        phi = complete(phi)
    pairs = product(g, phi)
    f_states = g.accepting(f)
    phi_states = phi.accepting(f_phi)
    return Lts(
        pairs.alphabet,
        pairs.states,
        pairs.delta,
        pairs.initial,
        {
            "F": frozenset(s for s in pairs.states if s[0] in f_states),
            "Fphi": frozenset(s for s in pairs.states if s[0] in f_states and s[1] in phi_states),
        },
    )


def entry_words(a: Lts) -> dict[State, Word]:
    """Per downgrade entry state, the shortest word reaching it that is
    empty or ends with a downgrading event (ties broken lexicographically).

    The keys are the initial state plus every reachable target of a
    downgrading transition.
    """
    paths = lex_shortest_paths(a)
    down = set(a.alphabet.downgrading)
    best: dict[State, Word] = {a.initial: ()}
    for (q, e), r in a.delta.items():
        if e not in down or q not in paths:
            continue
        cand = paths[q] + (e,)
        old = best.get(r)
        if old is None or word_sort_key(a.alphabet, cand) < word_sort_key(a.alphabet, old):
            if r != a.initial:
                best[r] = cand
    return best


def downgrade_entry_states(a: Lts) -> frozenset:
    """The initial state plus every reachable target of a downgrading move."""
    return frozenset(entry_words(a))


def find_isomorphism(a: Lts, b: Lts, check_sets: bool = True) -> dict | None:
    """State bijection matching initial states, steps and (optionally)
    accepting sets; None when there is none.  Expects trimmed automata."""
    if a.alphabet.events != b.alphabet.events:
        return None
    if len(a.states) != len(b.states):
        return None
    fwd = {a.initial: b.initial}
    bwd = {b.initial: a.initial}
    queue = deque([a.initial])
    while queue:
        p = queue.popleft()
        q = fwd[p]
        for e in a.alphabet.events:
            pa = a.delta.get((p, e))
            qb = b.delta.get((q, e))
            if (pa is None) != (qb is None):
                return None
            if pa is None:
                continue
            if pa in fwd:
                if fwd[pa] != qb:
                    return None
                continue
            if qb in bwd:
                return None
            fwd[pa] = qb
            bwd[qb] = pa
            queue.append(pa)
    if len(fwd) != len(a.states):
        return None
    if check_sets:
        if set(a.accepting_sets) != set(b.accepting_sets):
            return None
        for name, members in a.accepting_sets.items():
            if {fwd[s] for s in members} != set(b.accepting(name)):
                return None
    return fwd
