"""Opacity deciders.

A secret is opaque when every secret run shares its observation with some
non-secret run, so an observer can never be sure the secret happened.  For
a static observer this is one regular-language inclusion between projection
images.  For an Orwellian observer the problem splits into one static check
per downgrade entry state: a run discloses after its last downgrade exactly
when its continuation discloses under the static observer started there.
"""

from __future__ import annotations

from .automata import (
    InvalidModel,
    Lts,
    Word,
    entry_words,
    is_subset,
    rebase,
    restrict,
    state_order,
    trim,
    with_set,
    word_sort_key,
)
from .observation import ObservationKind, project_language
from .oracle import enumerate_language
from .verdicts import OpacityVerdict, SubCheck

_NONSECRET = "_nonsecret"


def _shortest_secret_preimage(system: Lts, observable: tuple[str, ...], observation: Word) -> Word:
    """Shortest secret word (ties lexicographic) observed as ``observation``
    under the natural projection."""
    from collections import deque

    keep = set(observable)
    secret = system.accepting("Fphi") & system.accepting("F")

    def done(q, i):
        return i == len(observation) and q in secret

    if done(system.initial, 0):
        return ()
    seen = {(system.initial, 0)}
    queue = deque([(system.initial, 0, ())])
    while queue:
        q, i, path = queue.popleft()
        for e in system.alphabet.events:
            r = system.delta.get((q, e))
            if r is None:
                continue
            j = i
            if e in keep:
                if i == len(observation) or observation[i] != e:
                    continue
                j = i + 1
            if (r, j) in seen:
                continue
            w = path + (e,)
            if done(r, j):
                return w
            seen.add((r, j))
            queue.append((r, j, w))
    raise AssertionError("observation came from the secret image but has no secret preimage")


def check_opacity_static(system: Lts, observable: tuple[str, ...] | None = None) -> OpacityVerdict:
    """Decide opacity under a static observer of ``observable`` events.

    The system carries the full language in ``F`` and the secret in
    ``Fphi`` (clamped into ``F``).  Opacity holds exactly when the image of
    the secret is included in the image of the non-secret part; on
    violation the witness is the shortest secret preimage of the shortest
    escaping observation.
    """
    if observable is None:
        observable = system.alphabet.observable
    unknown = set(observable) - set(system.alphabet.events)
    if unknown:
        raise InvalidModel(f"observable events {sorted(unknown)} not in the alphabet")
    f_states = system.accepting("F")
    secret = system.accepting("Fphi") & f_states
    normalized = with_set(with_set(system, "Fphi", secret), _NONSECRET, f_states - secret)
    secret_image = project_language(normalized, "Fphi", observable)
    nonsecret_image = project_language(normalized, _NONSECRET, observable)
    inclusion = is_subset(secret_image, "Fphi", nonsecret_image, _NONSECRET)
    if inclusion.holds:
        return OpacityVerdict(holds=True)
    witness = _shortest_secret_preimage(normalized, tuple(observable), inclusion.counterexample)
    return OpacityVerdict(holds=False, witness=witness)


def check_opacity_orwellian(system: Lts, secret: Lts | None = None, secret_set: str | None = None) -> OpacityVerdict:
    """Decide opacity under the Orwellian observer of the system's alphabet.

    When ``secret`` is given it is folded into the system first and the
    verdict speaks in product state names.  The check runs one static
    sub-check per downgrade entry state, on the system restricted to
    downgrade-free behaviour from that state; the property holds exactly
    when all of them do.  Each failing entry state contributes a global
    disclosing trace (its shortest entry word followed by the local
    witness); the reported witness is the least of those.
    """
    if secret is not None:
        from .automata import incorporate_secret

        if secret_set is None:
            secret_set = "Fphi" if "Fphi" in secret.accepting_sets else "F"
        system = incorporate_secret(system, "F", secret, secret_set)
    if "Fphi" not in system.accepting_sets:
        raise InvalidModel("Orwellian opacity check needs an Fphi accepting set or a secret automaton")
    system = trim(system)
    secret_states = system.accepting("Fphi") & system.accepting("F")
    system = with_set(system, "Fphi", secret_states)

    entries = entry_words(system)
    order = {q: i for i, q in enumerate(state_order(system))}
    breakdown: list[SubCheck] = []
    candidates: list[Word] = []
    for q in sorted(entries, key=order.__getitem__):
        local = trim(restrict(rebase(system, q), system.alphabet.downgrading))
        sub = check_opacity_static(local, system.alphabet.observable)
        breakdown.append(SubCheck(q, sub.holds, sub.witness))
        if not sub.holds:
            candidates.append(entries[q] + sub.witness)
    if not candidates:
        return OpacityVerdict(holds=True, breakdown=tuple(breakdown))
    witness = min(candidates, key=lambda w: word_sort_key(system.alphabet, w))
    return OpacityVerdict(holds=False, witness=witness, breakdown=tuple(breakdown))


def disclosing_class(system: Lts, w: Word, kind: ObservationKind, bound: int) -> tuple[Word, ...]:
    """Every word of the system language up to ``bound`` observed like ``w``."""
    if not system.accepts(w, "F"):
        raise InvalidModel(f"word {' '.join(w) or '(empty)'} is not in the system language")
    target = kind.observe(w)
    return tuple(u for u in enumerate_language(system, "F", bound).words if kind.observe(u) == target)
