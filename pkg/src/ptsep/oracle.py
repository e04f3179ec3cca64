"""Brute-force reference implementations used to validate the automata machinery.

These do the dumbest correct thing over bounded word sets: exhaustive language
enumeration and dynamic programming over the subsequence lattice.  They are
deliberately independent of the closure and chain constructions they check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import AmbiguousMembershipError, ResourceLimitError
from .nfa import Nfa, Word

#: Cap on the number of candidate words an enumeration may visit.
DEFAULT_ENUMERATION_BUDGET = 2_000_000


@dataclass(frozen=True)
class BoundedLanguage:
    """Every accepted word up to the length bound."""

    words: frozenset[Word]
    bound: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(tuple(w) for w in self.words))


def enumerate_language(
    nfa: Nfa,
    bound: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> BoundedLanguage:
    """Exact bounded slice of the language by exhaustive generation and membership."""
    size = max(len(nfa.alphabet), 1)
    total = 1
    power = 1
    for _ in range(bound):
        power *= size
        total += power
    if total > budget:
        raise ResourceLimitError(
            f"enumerating {total} candidate words exceeds the budget of {budget}"
        )
    words: set[Word] = set()
    for length in range(bound + 1):
        for combo in product(nfa.alphabet, repeat=length):
            if nfa.accepts(combo):
                words.add(combo)
    return BoundedLanguage(frozenset(words), bound)


def _deletions(word: Word) -> set[Word]:
    return {word[:i] + word[i + 1 :] for i in range(len(word))}


def oracle_max_tower(first: BoundedLanguage, second: BoundedLanguage) -> int:
    """Length of the longest alternating subsequence chain across the two word sets.

    Dynamic programming over the subsequence lattice below the input words.
    The value is a lower bound on the true maximal tower length, exact
    whenever some optimal tower fits inside both bounds.  A word present in
    both sets signals an infinite tower and raises AmbiguousMembershipError.
    """
    shared = first.words & second.words
    if shared:
        sample = sorted(shared)[0]
        raise AmbiguousMembershipError(
            f"word {sample!r} lies in both languages: towers are unbounded"
        )
    sets = (first.words, second.words)

    # Close the input words downward under single-letter deletions; that is
    # exactly the set of words embeddable into some input word.
    domain: set[Word] = set(first.words) | set(second.words)
    stack = list(domain)
    while stack:
        for smaller in _deletions(stack.pop()):
            if smaller not in domain:
                domain.add(smaller)
                stack.append(smaller)

    # best_end[(w, s)]: longest tower whose top is exactly w on side s.
    # best_below[(w, s)]: longest tower whose top embeds into w on side s.
    best_end: dict[tuple[Word, int], int] = {}
    best_below: dict[tuple[Word, int], int] = {}
    for word in sorted(domain, key=lambda w: (len(w), w)):
        smaller_words = _deletions(word)
        inherited = [0, 0]
        for side in (0, 1):
            inherited[side] = max(
                (best_below.get((small, side), 0) for small in smaller_words),
                default=0,
            )
        for side in (0, 1):
            ended = 0
            if word in sets[side]:
                ended = 1 + inherited[1 - side]
                best_end[(word, side)] = ended
            best_below[(word, side)] = max(inherited[side], ended)
    return max(best_end.values(), default=0)
