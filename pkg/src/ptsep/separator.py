"""Synthesis and verification of piecewise testable separators.

A separator here contains the *second* input language and is disjoint from
the first.  It is assembled per chain level as the upward closure of what the
second language lost minus the upward closure of what the first language
lost; the union over all levels is a boolean combination of upward closures
and therefore piecewise testable by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .chain import (
    ChainTrace,
    DEFAULT_MAX_LEVELS,
    VERDICT_EXHAUSTED,
    VERDICT_INFINITE,
    run_chain,
)
from .closures import embeds, upward_closure
from .errors import NotSeparableError, NotUpwardClosedError, ResourceLimitError, UndecidedError
from .nfa import DEFAULT_STATE_BUDGET, Nfa, Word, union_all


@dataclass(frozen=True)
class SeparatorResult:
    """The synthesized separator plus its per-level components.

    ``separator`` accepts the union of the ``levels`` languages; the levels
    are retained so the per-level containment properties can be audited.
    ``pieces_available`` records that the retained components are suitable for
    minimal-piece extraction of their upward-closed building blocks.
    """

    separator: Nfa
    levels: tuple[Nfa, ...]
    pieces_available: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))


@dataclass(frozen=True)
class PieceSet:
    """A finite antichain of words whose upward closures cover an upward-closed language."""

    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))


def synthesize(
    first: Nfa,
    second: Nfa,
    max_levels: int = DEFAULT_MAX_LEVELS,
    state_budget: int = DEFAULT_STATE_BUDGET,
    trace: ChainTrace | None = None,
) -> SeparatorResult:
    """Build a piecewise testable separator containing the second language.

    Requires a separable pair; raises NotSeparableError on an infinite tower
    and UndecidedError if the chain budget runs out.  A precomputed trace for
    the same pair of automata may be passed to avoid re-running the chain.
    """
    if trace is None:
        trace = run_chain(first, second, max_levels, state_budget)
    if trace.verdict == VERDICT_INFINITE:
        raise NotSeparableError("an infinite tower exists; no piecewise testable separator")
    if trace.verdict == VERDICT_EXHAUSTED:
        raise UndecidedError("chain level budget exhausted before a verdict")
    stabilized = trace.stabilized_at
    assert stabilized is not None
    base = trace.levels[0]
    components: list[Nfa] = []
    separator = Nfa(base.first.alphabet, (), frozenset(), frozenset(), frozenset())
    for level in range(1, stabilized + 1):
        # Minimizing the lost languages first keeps the upward closures (and
        # their subset constructions) small.
        lost_second = base.second.difference(
            trace.levels[level].second, state_budget
        ).minimized(state_budget)
        lost_first = base.first.difference(
            trace.levels[level].first, state_budget
        ).minimized(state_budget)
        component = upward_closure(lost_second).difference(
            upward_closure(lost_first), state_budget
        ).minimized(state_budget)
        components.append(component)
        separator = union_all([separator, component]).minimized(state_budget)
    return SeparatorResult(separator, tuple(components))


def verify_separator(
    candidate: Nfa,
    first: Nfa,
    second: Nfa,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> bool:
    """True iff the candidate contains the second language and misses the first entirely."""
    return (
        second.is_subset(candidate, state_budget)
        and candidate.intersect(first).is_empty()
    )


def _upward_of_word(word: Word, alphabet: tuple[str, ...]) -> Nfa:
    """Automaton for all superwords of a single word over the given alphabet."""
    states = [str(i) for i in range(len(word) + 1)]
    transitions = {(str(i), symbol, str(i + 1)) for i, symbol in enumerate(word)}
    loops = {(state, symbol, state) for state in states for symbol in alphabet}
    return Nfa(alphabet, states, transitions | loops, {"0"}, {str(len(word))})


def minimal_pieces(
    upclosed: Nfa,
    state_budget: int = DEFAULT_STATE_BUDGET,
    max_piece_length: int = 64,
) -> PieceSet:
    """The embedding-minimal members of an upward-closed language.

    Words are enumerated in length-lexicographic order (alphabet order inside
    a length); a word is kept when it lies in the language and no kept word
    embeds into it.  Enumeration stops as soon as the union of the kept
    words' superword languages covers the input, which a well-quasi-order
    argument guarantees to happen at a finite length.
    """
    closed = upward_closure(upclosed)
    if not closed.is_subset(upclosed, state_budget):
        raise NotUpwardClosedError("the input language is not upward closed")
    if upclosed.is_empty():
        return PieceSet(())
    kept: list[Word] = []
    cover = Nfa(upclosed.alphabet, (), frozenset(), frozenset(), frozenset())
    for length in range(max_piece_length + 1):
        for combo in product(upclosed.alphabet, repeat=length):
            word = tuple(combo)
            if any(embeds(piece, word) for piece in kept):
                continue
            if not upclosed.accepts(word):
                continue
            kept.append(word)
            cover = union_all(
                [cover, _upward_of_word(word, upclosed.alphabet)]
            ).minimized(state_budget)
            if upclosed.is_subset(cover, state_budget):
                return PieceSet(tuple(kept))
    raise ResourceLimitError(
        f"piece enumeration did not converge within length {max_piece_length}"
    )
