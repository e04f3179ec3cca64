"""The subsequence (scattered-subword) order and language closures under it."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .nfa import Nfa, Word


@dataclass(frozen=True)
class EmbeddingWitness:
    """Positions of the leftmost embedding of one word into another.

    ``positions`` is strictly increasing and has one entry per letter of the
    embedded word; the host letter at each position equals that letter.
    """

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(self.positions))


def is_subsequence(inner: Word, host: Word) -> EmbeddingWitness | None:
    """Leftmost (greedy) embedding of ``inner`` into ``host``, or None if there is none."""
    inner = tuple(inner)
    host = tuple(host)
    positions: list[int] = []
    start = 0
    for letter in inner:
        try:
            index = host.index(letter, start)
        except ValueError:
            return None
        positions.append(index)
        start = index + 1
    return EmbeddingWitness(tuple(positions))


def embeds(inner: Word, host: Word) -> bool:
    return is_subsequence(inner, host) is not None


def downward_closure(nfa: Nfa) -> Nfa:
    """Automaton accepting exactly the subsequences of the language.

    Every transition ``(p, a, q)`` is widened to ``(p, a, r)`` for each state
    ``r`` reachable from ``q``, and the initial set is widened the same way,
    so letters of an accepting run may be skipped without an epsilon.  The
    result keeps the alphabet and is trimmed.
    """
    succ: dict[str, set[str]] = {}
    for p, _, q in nfa.transitions:
        succ.setdefault(p, set()).add(q)

    reach: dict[str, set[str]] = {}
    for state in nfa.states:
        seen = {state}
        queue = deque([state])
        while queue:
            for nxt in succ.get(queue.popleft(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        reach[state] = seen

    transitions = {
        (p, a, r) for p, a, q in nfa.transitions for r in reach[q]
    }
    initials = set()
    for state in nfa.initials:
        initials.update(reach[state])
    return Nfa(nfa.alphabet, nfa.states, transitions, initials, nfa.accepting).trim()


def upward_closure(nfa: Nfa) -> Nfa:
    """Automaton accepting exactly the superwords of the language.

    Self-loops under every alphabet symbol are added to every state; the
    result keeps the alphabet and is trimmed.
    """
    loops = {(q, a, q) for q in nfa.states for a in nfa.alphabet}
    return Nfa(
        nfa.alphabet,
        nfa.states,
        frozenset(nfa.transitions) | loops,
        nfa.initials,
        nfa.accepting,
    ).trim()


def embeds_into_language(word: Word, nfa: Nfa) -> bool:
    """Whether the word embeds into some member of the language."""
    return downward_closure(nfa).accepts(word)
