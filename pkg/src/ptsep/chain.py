"""Decreasing-language chains: separability verdicts, exact tower lengths, witness towers.

A tower between two languages is a sequence of words, each embedding into the
next, that strictly alternates between the languages.  The chain construction
repeatedly restricts each language to the words embeddable into the other
side's previous restriction; both restrictions die out exactly when no
infinite tower exists, and the point where they die out drives both the
separator synthesis and the exact maximal tower length computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closures import downward_closure, is_subsequence, upward_closure
from .errors import (
    AmbiguousMembershipError,
    InfiniteTowerError,
    InvalidTowerError,
    NoTowerError,
    UndecidedError,
    UnknownSymbolError,
)
from .nfa import DEFAULT_STATE_BUDGET, Nfa, Word, merge_alphabets

VERDICT_SEPARABLE = "separable"
VERDICT_INFINITE = "infinite-tower"
VERDICT_EXHAUSTED = "exhausted"

SIDE_FIRST = "first"
SIDE_SECOND = "second"

#: Far above the theoretical bound for desk-scale inputs; hitting it signals a
#: configuration problem, not a mathematical verdict.
DEFAULT_MAX_LEVELS = 4096


@dataclass(frozen=True)
class Tower:
    """An alternating embedding-ordered sequence of words with side labels.

    ``words[i]`` embeds into ``words[i + 1]``, the sides strictly alternate
    between "first" and "second", and each word is meant to belong to the
    language its side names (checked by :meth:`validate_members`, which needs
    the automata).  The empty tower is allowed as the degenerate result of
    prefix-tower search.
    """

    words: tuple[Word, ...]
    sides: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))
        object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.words) != len(self.sides):
            raise ValueError("words and sides must have the same length")
        for side in self.sides:
            if side not in (SIDE_FIRST, SIDE_SECOND):
                raise ValueError(f"unknown side label {side!r}")
        for i in range(len(self.sides) - 1):
            if self.sides[i] == self.sides[i + 1]:
                raise ValueError("tower sides must strictly alternate")
            if is_subsequence(self.words[i], self.words[i + 1]) is None:
                raise ValueError(
                    f"tower word {i} does not embed into its successor"
                )

    def __len__(self) -> int:
        return len(self.words)

    def validate_members(self, first: Nfa, second: Nfa) -> None:
        """Raise InvalidTowerError unless every word lies in the language its side names."""
        for i, (word, side) in enumerate(zip(self.words, self.sides)):
            automaton = first if side == SIDE_FIRST else second
            try:
                accepted = automaton.accepts(word)
            except UnknownSymbolError as exc:
                raise InvalidTowerError(f"tower word {i}: {exc}") from exc
            if not accepted:
                raise InvalidTowerError(
                    f"tower word {i} is not accepted by the {side} automaton"
                )


@dataclass(frozen=True)
class ChainLevel:
    """One level of the chain: the restriction of each input language."""

    first: Nfa
    second: Nfa


@dataclass(frozen=True)
class ChainTrace:
    """All computed chain levels plus the verdict.

    ``stabilized_at`` is the first level index at which both restrictions are
    empty (separable case); ``limit`` is the exhausted level budget.
    """

    levels: tuple[ChainLevel, ...]
    verdict: str
    stabilized_at: int | None = None
    limit: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))


@dataclass(frozen=True)
class TowerLength:
    """Either an exact non-negative integer or the infinite marker (value None)."""

    value: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @classmethod
    def finite(cls, value: int) -> "TowerLength":
        return cls(value)

    @classmethod
    def infinite(cls) -> "TowerLength":
        return cls(None)


def run_chain(
    first: Nfa,
    second: Nfa,
    max_levels: int = DEFAULT_MAX_LEVELS,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> ChainTrace:
    """Iterate the embedding-restriction chain until a verdict or the level budget.

    Level k restricts the first language to the words embeddable into the
    second language's level k-1 restriction, then restricts the second to the
    words embeddable into the first's *new* restriction.  Every stored level
    is trimmed and minimized.  A nonempty intersection of the inputs is
    detected up front and reported as an infinite tower immediately (a shared
    word repeats forever).
    """
    alphabet = merge_alphabets(first.alphabet, second.alphabet)
    left = first.with_alphabet(alphabet).minimized(state_budget)
    right = second.with_alphabet(alphabet).minimized(state_budget)
    levels = [ChainLevel(left, right)]
    if left.is_empty() and right.is_empty():
        return ChainTrace(tuple(levels), VERDICT_SEPARABLE, stabilized_at=0)
    if not left.intersect(right).is_empty():
        return ChainTrace(tuple(levels), VERDICT_INFINITE)
    for level in range(1, max_levels + 1):
        prev = levels[-1]
        new_left = prev.first.intersect(
            downward_closure(prev.second).minimized(state_budget)
        ).minimized(state_budget)
        new_right = prev.second.intersect(
            downward_closure(new_left).minimized(state_budget)
        ).minimized(state_budget)
        levels.append(ChainLevel(new_left, new_right))
        if new_left.is_empty() and new_right.is_empty():
            return ChainTrace(tuple(levels), VERDICT_SEPARABLE, stabilized_at=level)
        # The chain is decreasing, so one inclusion per side decides equality.
        if prev.first.is_subset(new_left, state_budget) and prev.second.is_subset(
            new_right, state_budget
        ):
            return ChainTrace(tuple(levels), VERDICT_INFINITE)
    return ChainTrace(tuple(levels), VERDICT_EXHAUSTED, limit=max_levels)


def has_infinite_tower(
    first: Nfa,
    second: Nfa,
    max_levels: int = DEFAULT_MAX_LEVELS,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> bool:
    """Whether an infinite alternating tower exists between the two languages.

    Raises UndecidedError if the chain exhausts ``max_levels``; raise the
    budget and retry in that case.
    """
    trace = run_chain(first, second, max_levels, state_budget)
    if trace.verdict == VERDICT_EXHAUSTED:
        raise UndecidedError(
            f"no verdict within {max_levels} chain levels; raise max_levels"
        )
    return trace.verdict == VERDICT_INFINITE


def _interleaved_chain(
    bottom: Nfa,
    top: Nfa,
    max_levels: int,
    state_budget: int,
) -> list[Nfa]:
    """Nonempty restrictions D_1, D_2, ... of the interleaved descent.

    D_1 holds the bottom-language words embeddable into the top language, and
    each later D_t holds the words of D_{t-2} embeddable into D_{t-1}; D_t is
    nonempty exactly when an alternating tower of length t + 1 starts in the
    bottom language (in this orientation).  The list stops before the first
    empty restriction.
    """
    chain: list[Nfa] = []
    prev2, prev1 = bottom, top
    for _ in range(max_levels):
        current = prev2.intersect(
            downward_closure(prev1).minimized(state_budget)
        ).minimized(state_budget)
        if current.is_empty():
            return chain
        chain.append(current)
        prev2, prev1 = prev1, current
    raise UndecidedError(
        f"the interleaved chain did not terminate within {max_levels} levels"
    )


def max_tower_length(
    first: Nfa,
    second: Nfa,
    max_levels: int = DEFAULT_MAX_LEVELS,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> TowerLength:
    """Exact length of the longest alternating tower, or the infinite marker.

    Both orientations of the interleaved descent are run so both alternation
    parities are covered; the result is symmetric in the two inputs.
    """
    trace = run_chain(first, second, max_levels, state_budget)
    if trace.verdict == VERDICT_EXHAUSTED:
        raise UndecidedError(
            f"no verdict within {max_levels} chain levels; raise max_levels"
        )
    if trace.verdict == VERDICT_INFINITE:
        return TowerLength.infinite()
    base = trace.levels[0]
    if base.first.is_empty() and base.second.is_empty():
        return TowerLength.finite(0)
    depth_a = len(_interleaved_chain(base.first, base.second, max_levels, state_budget))
    depth_b = len(_interleaved_chain(base.second, base.first, max_levels, state_budget))
    return TowerLength.finite(1 + max(depth_a, depth_b))


def _singleton(word: Word, alphabet: tuple[str, ...]) -> Nfa:
    """Straight-line automaton accepting exactly one word."""
    states = [str(i) for i in range(len(word) + 1)]
    transitions = {(str(i), symbol, str(i + 1)) for i, symbol in enumerate(word)}
    return Nfa(alphabet, states, transitions, {"0"}, {str(len(word))})


def extract_tower(
    first: Nfa,
    second: Nfa,
    max_levels: int = DEFAULT_MAX_LEVELS,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> Tower:
    """A maximal alternating tower, built from the deeper interleaved descent.

    The bottom word is a shortest member of the deepest nonempty restriction;
    each following word is a shortest member of the previous restriction that
    the current word embeds into.  The result's length equals
    :func:`max_tower_length`.
    """
    trace = run_chain(first, second, max_levels, state_budget)
    if trace.verdict == VERDICT_EXHAUSTED:
        raise UndecidedError(
            f"no verdict within {max_levels} chain levels; raise max_levels"
        )
    if trace.verdict == VERDICT_INFINITE:
        raise InfiniteTowerError(
            "an infinite tower exists, so there is no maximal finite tower"
        )
    base = trace.levels[0]
    chain_a = _interleaved_chain(base.first, base.second, max_levels, state_budget)
    chain_b = _interleaved_chain(base.second, base.first, max_levels, state_budget)
    if len(chain_a) >= len(chain_b):
        chain, level_zero = chain_a, base.second
        odd_side, even_side = SIDE_FIRST, SIDE_SECOND
    else:
        chain, level_zero = chain_b, base.first
        odd_side, even_side = SIDE_SECOND, SIDE_FIRST
    if not chain:
        if not base.first.is_empty():
            word = base.first.shortest_word()
            assert word is not None
            return Tower((word,), (SIDE_FIRST,))
        if not base.second.is_empty():
            word = base.second.shortest_word()
            assert word is not None
            return Tower((word,), (SIDE_SECOND,))
        raise NoTowerError("both languages are empty")

    def side_of(index: int) -> str:
        return odd_side if index % 2 == 1 else even_side

    depth = len(chain)
    bottom = chain[-1].shortest_word()
    assert bottom is not None
    words = [bottom]
    sides = [side_of(depth)]
    ladder = list(reversed(chain[:-1])) + [level_zero]
    alphabet = level_zero.alphabet
    for index, language in zip(range(depth - 1, -1, -1), ladder):
        hull = upward_closure(_singleton(words[-1], alphabet))
        lifted = language.intersect(hull).shortest_word()
        assert lifted is not None
        words.append(lifted)
        sides.append(side_of(index))
    return Tower(tuple(words), tuple(sides))


def longest_prefix_tower(word: Word, first: Nfa, second: Nfa) -> Tower:
    """The longest tower whose members are all prefixes of the word (including the empty one).

    Every prefix is labeled by the language containing it; a prefix in both
    languages raises AmbiguousMembershipError since it implies an infinite
    tower.  The longest alternating subsequence of the label sequence is then
    taken by dynamic programming, ties broken toward the lexicographically
    earliest set of prefix lengths.
    """
    word = tuple(word)
    alphabet = merge_alphabets(first.alphabet, second.alphabet)
    left = first.with_alphabet(alphabet)
    right = second.with_alphabet(alphabet)
    alpha = set(alphabet)
    for symbol in word:
        if symbol not in alpha:
            raise UnknownSymbolError(
                f"symbol {symbol!r} is not in the alphabet {alphabet}"
            )

    labels: list[str | None] = []
    cur_left = set(left.initials)
    cur_right = set(right.initials)
    for position in range(len(word) + 1):
        in_left = bool(cur_left & left.accepting)
        in_right = bool(cur_right & right.accepting)
        if in_left and in_right:
            raise AmbiguousMembershipError(
                f"the prefix of length {position} lies in both languages"
            )
        labels.append(SIDE_FIRST if in_left else SIDE_SECOND if in_right else None)
        if position < len(word):
            cur_left = left.step(cur_left, word[position])
            cur_right = right.step(cur_right, word[position])

    total = len(labels)
    # down[i]: longest alternating tower starting at prefix i and growing rightward.
    down = [0] * total
    for i in range(total - 1, -1, -1):
        if labels[i] is None:
            continue
        best = 0
        for j in range(i + 1, total):
            if labels[j] is not None and labels[j] != labels[i] and down[j] > best:
                best = down[j]
        down[i] = 1 + best
    height = max(down, default=0)
    if height == 0:
        return Tower((), ())
    chosen: list[int] = []
    need = height
    previous: str | None = None
    for i in range(total):
        if labels[i] is None or labels[i] == previous or down[i] < need:
            continue
        chosen.append(i)
        previous = labels[i]
        need -= 1
        if need == 0:
            break
    words = tuple(word[:i] for i in chosen)
    sides = tuple(labels[i] for i in chosen)
    return Tower(words, sides)
