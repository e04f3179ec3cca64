"""Greedy cyclic factorizations, factor weights, and the closed-form tower length bound.

A word accepted along a path factorizes greedily into *letter factors*
(single symbols between distinct states) and *cycle factors* (segments whose
path contains a cycle over exactly the segment's own alphabet).  Letter
factors weigh 1; a cycle factor over x distinct symbols weighs
``cycle_weight(n, x)`` where n is the automaton's state count.  Refining the
factorizations down a tower makes the total weight strictly increase, which
is what bounds the tower length; :func:`audit_tower_weights` performs that
refinement mechanically and reports the weights.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .chain import SIDE_FIRST, Tower
from .closures import is_subsequence
from .errors import InvalidTowerError
from .nfa import Nfa, Path, Word


def upper_bound(states: int, alphabet_size: int) -> int:
    """Maximal finite tower length for automata with ``states`` states over ``alphabet_size`` letters.

    Exact integer value of ``1 + n + n**2 + ... + n**m``; for a single state
    the geometric sum degenerates to ``m + 1``.
    """
    if states < 1:
        raise ValueError("the state count must be positive")
    if alphabet_size < 0:
        raise ValueError("the alphabet size must be non-negative")
    total = 0
    power = 1
    for _ in range(alphabet_size + 1):
        total += power
        power *= states
    return total


def cycle_weight(states: int, letters: int) -> int:
    """Weight of a cycle factor over ``letters`` distinct symbols in an automaton with ``states`` states.

    Equals ``n + n**2 + ... + n**x`` (so ``cycle_weight(n, 0) == 0``); for a
    single state the sum degenerates to ``x``.
    """
    if states < 1:
        raise ValueError("the state count must be positive")
    if letters < 0:
        raise ValueError("the letter count must be non-negative")
    total = 0
    power = 1
    for _ in range(letters):
        power *= states
        total += power
    return total


@dataclass(frozen=True)
class Factor:
    """One factor of a cyclic factorization.

    ``anchor_state`` is the path state witnessing the factor: for a letter
    factor it is the source state; for a cycle factor it is a state whose
    revisit on the segment spans a cycle over exactly the factor's alphabet.

    The greedy factorizer only emits letter factors between distinct states
    (a self-loop is a cycle over its own letter).  Refinement bookkeeping in
    :func:`audit_tower_weights` may additionally mark a single-letter fragment
    of an upper letter factor as a letter factor even on a self-loop, so that
    a letter keeps weight 1 all the way down a tower.
    """

    word: Word
    kind: str  # "letter" | "cycle"
    from_state: str
    to_state: str
    anchor_state: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if self.kind not in ("letter", "cycle"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == "letter" and len(self.word) != 1:
            raise ValueError("a letter factor is a single symbol")

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(self.word)


@dataclass(frozen=True)
class CyclicFactorization:
    """A factor sequence covering a word along a path, with the boundary states."""

    factors: tuple[Factor, ...]
    boundary_states: tuple[str, ...]
    subject: Word
    automaton_states: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "boundary_states", tuple(self.boundary_states))
        object.__setattr__(self, "subject", tuple(self.subject))
        joined: tuple[str, ...] = ()
        for factor in self.factors:
            joined += factor.word
        if joined != self.subject:
            raise ValueError("factor words do not concatenate to the subject")
        if len(self.boundary_states) != len(self.factors) + 1:
            raise ValueError("boundary states must bracket every factor")
        for i, factor in enumerate(self.factors):
            if factor.from_state != self.boundary_states[i] or factor.to_state != self.boundary_states[i + 1]:
                raise ValueError("factor endpoints disagree with the boundary states")


@dataclass(frozen=True)
class WeightReport:
    """Per-factor weights and their total for one factorization."""

    per_factor: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "per_factor", tuple(self.per_factor))
        if self.total != sum(self.per_factor):
            raise ValueError("the total must equal the sum of the per-factor weights")


@dataclass(frozen=True)
class TowerWeightAudit:
    """Weights along a tower, bottom to top, with the strictness violation flag."""

    reports: tuple[WeightReport, ...]
    factorizations: tuple[CyclicFactorization, ...]
    violation: bool

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(report.total for report in self.reports)


def _range_or_table(values: list[int]) -> list[list[int]]:
    """Sparse table for O(1) bitwise-OR range queries over symbol bitmasks."""
    table = [values]
    span = 1
    while span * 2 <= len(values):
        prev = table[-1]
        table.append([prev[i] | prev[i + span] for i in range(len(values) - span * 2 + 1)])
        span *= 2
    return table


def _range_or(table: list[list[int]], start: int, stop: int) -> int:
    """OR of values[start:stop]; stop must exceed start."""
    width = stop - start
    level = width.bit_length() - 1
    span = 1 << level
    row = table[level]
    return row[start] | row[stop - span]


def cyclic_factorize(nfa: Nfa, path: Path) -> CyclicFactorization:
    """Greedy cyclic factorization of a path's word.

    Each factor is the longest prefix of the remaining segment whose path
    contains a cycle over exactly the prefix's alphabet; when no prefix
    qualifies the factor is the single next letter.  The empty path yields
    the empty factorization.
    """
    path.check_in(nfa)
    states = path.states
    symbols = path.symbols
    length = len(symbols)
    bit = {symbol: 1 << i for i, symbol in enumerate(nfa.alphabet)}
    marks = [bit[s] for s in symbols]
    table = _range_or_table(marks) if marks else []

    factors: list[Factor] = []
    boundaries: list[str] = [states[0]]
    position = 0
    while position < length:
        best_end: int | None = None
        best_anchor: str | None = None
        prefix_mask = 0
        # cycle alphabet -> first (state-revisit) pair found, scanning ends left to right
        cycles: dict[int, tuple[int, int]] = {}
        occurrences: dict[str, list[int]] = {states[position]: [position]}
        for end in range(position + 1, length + 1):
            prefix_mask |= marks[end - 1]
            landed = states[end]
            for start in occurrences.get(landed, ()):
                mask = _range_or(table, start, end)
                if mask not in cycles:
                    cycles[mask] = (start, end)
            occurrences.setdefault(landed, []).append(end)
            if prefix_mask in cycles:
                best_end = end
                best_anchor = states[cycles[prefix_mask][0]]
        if best_end is None:
            factors.append(
                Factor(
                    word=(symbols[position],),
                    kind="letter",
                    from_state=states[position],
                    to_state=states[position + 1],
                    anchor_state=states[position],
                )
            )
            position += 1
        else:
            assert best_anchor is not None
            factors.append(
                Factor(
                    word=tuple(symbols[position:best_end]),
                    kind="cycle",
                    from_state=states[position],
                    to_state=states[best_end],
                    anchor_state=best_anchor,
                )
            )
            position = best_end
        boundaries.append(states[position])
    return CyclicFactorization(
        factors=tuple(factors),
        boundary_states=tuple(boundaries),
        subject=symbols,
        automaton_states=len(nfa.states),
    )


def factorization_weight(factorization: CyclicFactorization) -> WeightReport:
    """Letter factors weigh 1; cycle factors weigh ``cycle_weight(n, |alphabet of factor|)``."""
    states = factorization.automaton_states
    weights = tuple(
        1 if factor.kind == "letter" else cycle_weight(states, len(factor.letters))
        for factor in factorization.factors
    )
    return WeightReport(per_factor=weights, total=sum(weights))


def _split_by_boundaries(
    lower: Word, upper: Word, cuts: list[int]
) -> list[tuple[int, int]]:
    """Split the lower word at the upper word's factor boundaries via the leftmost embedding.

    ``cuts`` are cumulative end positions of the upper factors; the result
    gives (start, stop) index pairs into the lower word, one per upper factor,
    such that each lower segment embeds into the matching upper factor.
    """
    witness = is_subsequence(lower, upper)
    if witness is None:
        raise InvalidTowerError("a tower word does not embed into its successor")
    positions = witness.positions
    segments: list[tuple[int, int]] = []
    start = 0
    for cut in cuts:
        stop = start
        while stop < len(positions) and positions[stop] < cut:
            stop += 1
        segments.append((start, stop))
        start = stop
    return segments


def _subpath(path: Path, start: int, stop: int) -> Path:
    return Path(states=path.states[start : stop + 1], symbols=path.symbols[start:stop])


def audit_tower_weights(tower: Tower, first: Nfa, second: Nfa) -> TowerWeightAudit:
    """Refine factorizations down the tower and report the weight of every level.

    The top word is factorized along a deterministic accepting path; each
    step down splits the lower word at the upper factor boundaries via the
    leftmost embedding, picks a deterministic accepting path for the lower
    word, factorizes each segment along its subpath, and concatenates.  The
    weights use the larger trimmed state count of the two automata so the
    levels are comparable.  ``violation`` is set when some level's weight
    fails to strictly exceed the one below it.
    """
    if len(tower) == 0:
        raise InvalidTowerError("cannot audit an empty tower")
    tower.validate_members(first, second)
    trimmed_first = first.trim()
    trimmed_second = second.trim()
    shared_states = max(len(trimmed_first.states), len(trimmed_second.states), 1)

    def automaton_for(side: str) -> Nfa:
        return trimmed_first if side == SIDE_FIRST else trimmed_second

    factorizations: list[CyclicFactorization] = []
    top_auto = automaton_for(tower.sides[-1])
    top_path = top_auto.accepting_path(tower.words[-1])
    current = replace(
        cyclic_factorize(top_auto, top_path), automaton_states=shared_states
    )
    factorizations.append(current)
    for index in range(len(tower) - 2, -1, -1):
        upper = current
        lower_word = tower.words[index]
        lower_auto = automaton_for(tower.sides[index])
        cuts: list[int] = []
        consumed = 0
        for factor in upper.factors:
            consumed += len(factor.word)
            cuts.append(consumed)
        segments = _split_by_boundaries(lower_word, upper.subject, cuts)
        lower_path = lower_auto.accepting_path(lower_word)
        factors: list[Factor] = []
        for (start, stop), upper_factor in zip(segments, upper.factors):
            if start == stop:
                continue
            if upper_factor.kind == "letter":
                # The nonempty fragment of a letter factor is that letter; it
                # stays a letter factor (weight 1) even when the lower path
                # realizes it as a self-loop.
                factors.append(
                    Factor(
                        word=(lower_word[start],),
                        kind="letter",
                        from_state=lower_path.states[start],
                        to_state=lower_path.states[stop],
                        anchor_state=lower_path.states[start],
                    )
                )
                continue
            piece = cyclic_factorize(lower_auto, _subpath(lower_path, start, stop))
            factors.extend(piece.factors)
        # Empty segments contribute nothing; the path is continuous, so the
        # remaining factors still chain state to state.
        boundaries: list[str] = [lower_path.states[0]]
        for factor in factors:
            boundaries.append(factor.to_state)
        current = CyclicFactorization(
            factors=tuple(factors),
            boundary_states=tuple(boundaries),
            subject=lower_word,
            automaton_states=shared_states,
        )
        factorizations.insert(0, current)
    reports = tuple(factorization_weight(f) for f in factorizations)
    totals = [report.total for report in reports]
    violation = any(totals[i] >= totals[i + 1] for i in range(len(totals) - 1))
    return TowerWeightAudit(
        reports=reports,
        factorizations=tuple(factorizations),
        violation=violation,
    )
