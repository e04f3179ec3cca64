"""Shared test utilities: random automata, tiny fixed languages, brute-force word sets."""

from __future__ import annotations

import random
from itertools import product

from ptsep import Nfa, Path, Word


def random_nfa(
    rng: random.Random,
    max_states: int = 4,
    alphabet: tuple[str, ...] = ("a", "b"),
    density: float = 0.25,
) -> Nfa:
    """A random trimmed automaton (possibly with zero states, i.e. the empty language)."""
    count = rng.randint(1, max_states)
    states = [str(i) for i in range(count)]
    transitions = {
        (p, a, q)
        for p in states
        for a in alphabet
        for q in states
        if rng.random() < density
    }
    initials = {s for s in states if rng.random() < 0.35}
    if not initials:
        initials = {rng.choice(states)}
    accepting = {s for s in states if rng.random() < 0.35}
    if not accepting:
        accepting = {rng.choice(states)}
    return Nfa(alphabet, states, transitions, initials, accepting).trim()


def random_accepted_path(
    rng: random.Random, nfa: Nfa, max_length: int, tries: int = 200
) -> Path | None:
    """A random accepting run of length <= max_length, or None if none was hit."""
    if not nfa.states:
        return None
    by_state: dict[str, list[tuple[str, str]]] = {}
    for p, a, q in nfa.transitions:
        by_state.setdefault(p, []).append((a, q))
    for edges in by_state.values():
        edges.sort()
    for _ in range(tries):
        state = rng.choice(sorted(nfa.initials))
        states = [state]
        symbols: list[str] = []
        accepting_hits = [0] if state in nfa.accepting else []
        for _ in range(max_length):
            edges = by_state.get(state)
            if not edges:
                break
            symbol, state = rng.choice(edges)
            symbols.append(symbol)
            states.append(state)
            if state in nfa.accepting:
                accepting_hits.append(len(symbols))
        if accepting_hits:
            cut = rng.choice(accepting_hits)
            return Path(states=tuple(states[: cut + 1]), symbols=tuple(symbols[:cut]))
    return None


def simple_nfa(
    alphabet: tuple[str, ...],
    transitions: set[tuple[str, str, str]],
    initials: set[str],
    accepting: set[str],
) -> Nfa:
    states = sorted({t[0] for t in transitions} | {t[2] for t in transitions} | initials | accepting)
    return Nfa(alphabet, states, transitions, initials, accepting)


def even_as() -> Nfa:
    """(aa)*"""
    return simple_nfa(("a",), {("e", "a", "o"), ("o", "a", "e")}, {"e"}, {"e"})


def odd_as() -> Nfa:
    """a(aa)*"""
    return simple_nfa(("a",), {("e", "a", "o"), ("o", "a", "e")}, {"e"}, {"o"})


def empty_language(alphabet: tuple[str, ...] = ("a", "b")) -> Nfa:
    return Nfa(alphabet, (), frozenset(), frozenset(), frozenset())


def all_words(alphabet: tuple[str, ...], max_length: int) -> list[Word]:
    words: list[Word] = []
    for length in range(max_length + 1):
        words.extend(product(alphabet, repeat=length))
    return words


def brute_language(nfa: Nfa, max_length: int) -> set[Word]:
    return {w for w in all_words(nfa.alphabet, max_length) if nfa.accepts(w)}


def deletion_closure(words: set[Word]) -> set[Word]:
    """All subsequences of the given words."""
    closed = set(words)
    stack = list(words)
    while stack:
        word = stack.pop()
        for i in range(len(word)):
            smaller = word[:i] + word[i + 1 :]
            if smaller not in closed:
                closed.add(smaller)
                stack.append(smaller)
    return closed


def embeds_into_language_exact(word: Word, nfa: Nfa) -> bool:
    """Independent exact check that some accepted word has ``word`` as a subsequence.

    Breadth-first search over (state, matched-length) pairs: every transition
    may either match the next wanted letter or be skipped.  Does not use the
    closure constructions under test.
    """
    from collections import deque

    start = {(q, 0) for q in nfa.initials}
    seen = set(start)
    queue = deque(start)
    target = len(word)
    while queue:
        state, matched = queue.popleft()
        if matched == target and state in nfa.accepting:
            return True
        for p, symbol, q in nfa.transitions:
            if p != state:
                continue
            nxt = [(q, matched)]
            if matched < target and symbol == word[matched]:
                nxt.append((q, matched + 1))
            for pair in nxt:
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
    return any(
        (q, target) in seen for q in nfa.accepting
    )


def insertion_closure(
    words: set[Word], alphabet: tuple[str, ...], max_length: int
) -> set[Word]:
    """All superwords of the given words, up to the length cap."""
    closed = {w for w in words if len(w) <= max_length}
    stack = list(closed)
    while stack:
        word = stack.pop()
        if len(word) >= max_length:
            continue
        for i in range(len(word) + 1):
            for symbol in alphabet:
                bigger = word[:i] + (symbol,) + word[i:]
                if bigger not in closed:
                    closed.add(bigger)
                    stack.append(bigger)
    return closed
