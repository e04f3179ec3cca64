"""Epsilon-free nondeterministic finite automata with boolean algebra and decision procedures.

States are opaque string identifiers.  The alphabet is an ordered tuple of
symbol names; its order fixes every canonical ordering used by the package
(shortest-word tie breaking, breadth-first renumbering, output sorting).
All values are immutable: operations return fresh automata and never mutate
their inputs, so values may be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    InvalidPathError,
    PathNotFoundError,
    ResourceLimitError,
    UnknownSymbolError,
)

Word = tuple[str, ...]
Transition = tuple[str, str, str]

EPSILON: Word = ()

#: Cap on subset-construction states before a ResourceLimitError is raised.
DEFAULT_STATE_BUDGET = 10**6

# Characters excluded from state and symbol names so that the JSON and DOT
# formats round-trip without escaping.
_RESERVED_CHARS = frozenset('"\\,')


def state_key(state: str) -> tuple[int, str]:
    """Shortlex order on state identifiers ("2" sorts before "10")."""
    return (len(state), state)


def merge_alphabets(*alphabets: Sequence[str]) -> tuple[str, ...]:
    """Ordered union: the first alphabet, then unseen symbols of the rest in order."""
    merged: list[str] = []
    seen: set[str] = set()
    for alphabet in alphabets:
        for symbol in alphabet:
            if symbol not in seen:
                seen.add(symbol)
                merged.append(symbol)
    return tuple(merged)


def check_name(name: object, what: str) -> str:
    if not isinstance(name, str) or not name:
        raise ValueError(f"{what} must be a non-empty string, got {name!r}")
    if any(c.isspace() for c in name) or any(c in _RESERVED_CHARS for c in name):
        raise ValueError(f"{what} {name!r} contains whitespace or a reserved character")
    return name


@dataclass(frozen=True)
class Path:
    """Alternating run ``states[0] -symbols[0]-> states[1] -symbols[1]-> ...``.

    A path of zero symbols is a single state.
    """

    states: tuple[str, ...]
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.states) != len(self.symbols) + 1:
            raise ValueError("a path needs exactly one more state than symbols")

    @property
    def word(self) -> Word:
        return self.symbols

    def check_in(self, nfa: "Nfa") -> None:
        """Raise InvalidPathError unless this is a run of the given automaton."""
        declared = set(nfa.states)
        for state in self.states:
            if state not in declared:
                raise InvalidPathError(f"state {state!r} is not declared in the automaton")
        for i, symbol in enumerate(self.symbols):
            triple = (self.states[i], symbol, self.states[i + 1])
            if triple not in nfa.transitions:
                raise InvalidPathError(f"{triple!r} is not a transition of the automaton")


@dataclass(frozen=True)
class Nfa:
    """A finite automaton: ordered alphabet, states, transition triples, initial and accepting sets.

    ``transitions`` holds ``(source, symbol, target)`` triples; there is no
    epsilon.  Construction validates that transitions only reference declared
    states and symbols.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    transitions: frozenset[Transition]
    initials: frozenset[str]
    accepting: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", frozenset((p, a, q) for p, a, q in self.transitions))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        for symbol in self.alphabet:
            check_name(symbol, "symbol")
        for state in self.states:
            check_name(state, "state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate symbols in alphabet")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state identifiers")
        declared = set(self.states)
        alpha = set(self.alphabet)
        for group, what in ((self.initials, "initial"), (self.accepting, "accepting")):
            missing = group - declared
            if missing:
                raise ValueError(f"{what} states {sorted(missing)} are not declared")
        for p, a, q in self.transitions:
            if p not in declared or q not in declared:
                raise ValueError(f"transition {(p, a, q)!r} references an undeclared state")
            if a not in alpha:
                raise ValueError(f"transition {(p, a, q)!r} uses a symbol outside the alphabet")

    # -- cached lookup tables -------------------------------------------------

    @cached_property
    def _delta(self) -> dict[tuple[str, str], tuple[str, ...]]:
        table: dict[tuple[str, str], list[str]] = {}
        for p, a, q in self.transitions:
            table.setdefault((p, a), []).append(q)
        return {key: tuple(sorted(targets, key=state_key)) for key, targets in table.items()}

    @cached_property
    def _successors(self) -> dict[str, set[str]]:
        table: dict[str, set[str]] = {}
        for p, _, q in self.transitions:
            table.setdefault(p, set()).add(q)
        return table

    @cached_property
    def _predecessors(self) -> dict[str, set[str]]:
        table: dict[str, set[str]] = {}
        for p, _, q in self.transitions:
            table.setdefault(q, set()).add(p)
        return table

    # -- membership and emptiness --------------------------------------------

    def step(self, current: Iterable[str], symbol: str) -> set[str]:
        """One subset-simulation step."""
        nxt: set[str] = set()
        for state in current:
            nxt.update(self._delta.get((state, symbol), ()))
        return nxt

    def accepts(self, word: Iterable[str]) -> bool:
        """Subset simulation from the initial set; UnknownSymbolError on foreign symbols."""
        word = tuple(word)
        alpha = set(self.alphabet)
        for symbol in word:
            if symbol not in alpha:
                raise UnknownSymbolError(f"symbol {symbol!r} is not in the alphabet {self.alphabet}")
        current: set[str] = set(self.initials)
        for symbol in word:
            if not current:
                return False
            current = self.step(current, symbol)
        return bool(current & self.accepting)

    def is_empty(self) -> bool:
        """True iff no accepting state is reachable from an initial state."""
        seen = set(self.initials)
        if seen & self.accepting:
            return False
        queue = deque(seen)
        while queue:
            for nxt in self._successors.get(queue.popleft(), ()):
                if nxt in seen:
                    continue
                if nxt in self.accepting:
                    return False
                seen.add(nxt)
                queue.append(nxt)
        return True

    # -- structural operations -------------------------------------------------

    def trim(self) -> "Nfa":
        """Keep only states on accepting paths; renumber breadth-first from the initials.

        The language is preserved.  An empty language yields an automaton with
        no states at all.
        """
        return _assemble(self.alphabet, self.transitions, self.initials, self.accepting)

    def with_alphabet(self, alphabet: Sequence[str]) -> "Nfa":
        """The same automaton over a larger alphabet (which must contain the current one)."""
        alphabet = tuple(alphabet)
        if alphabet == self.alphabet:
            return self
        if not set(self.alphabet) <= set(alphabet):
            raise ValueError("the new alphabet must contain every current symbol")
        return Nfa(alphabet, self.states, self.transitions, self.initials, self.accepting)

    # -- boolean algebra --------------------------------------------------------

    def intersect(self, other: "Nfa") -> "Nfa":
        """Product automaton over the merged alphabet; the result is trimmed."""
        alphabet = merge_alphabets(self.alphabet, other.alphabet)
        initials = {(p, q) for p in self.initials for q in other.initials}
        seen: set[tuple[str, str]] = set(initials)
        queue = deque(sorted(initials))
        transitions: list[tuple[object, str, object]] = []
        accepting: set[tuple[str, str]] = set()
        while queue:
            pair = queue.popleft()
            p, q = pair
            if p in self.accepting and q in other.accepting:
                accepting.add(pair)
            for symbol in alphabet:
                lefts = self._delta.get((p, symbol), ())
                if not lefts:
                    continue
                rights = other._delta.get((q, symbol), ())
                for np in lefts:
                    for nq in rights:
                        target = (np, nq)
                        transitions.append((pair, symbol, target))
                        if target not in seen:
                            seen.add(target)
                            queue.append(target)
        return _assemble(alphabet, transitions, initials, accepting)

    def determinize(self, state_budget: int = DEFAULT_STATE_BUDGET) -> "Nfa":
        """Complete subset-construction DFA over the same alphabet, numbered in discovery order."""
        start = frozenset(self.initials)
        names: dict[frozenset[str], str] = {start: "0"}
        order: list[frozenset[str]] = [start]
        transitions: list[Transition] = []
        index = 0
        while index < len(order):
            subset = order[index]
            index += 1
            src = names[subset]
            for symbol in self.alphabet:
                target: set[str] = set()
                for state in subset:
                    target.update(self._delta.get((state, symbol), ()))
                frozen = frozenset(target)
                if frozen not in names:
                    if len(names) >= state_budget:
                        raise ResourceLimitError(
                            f"subset construction exceeded the state budget of {state_budget}"
                        )
                    names[frozen] = str(len(names))
                    order.append(frozen)
                transitions.append((src, symbol, names[frozen]))
        accepting = frozenset(names[s] for s in order if s & self.accepting)
        states = tuple(str(i) for i in range(len(order)))
        return Nfa(self.alphabet, states, frozenset(transitions), frozenset({"0"}), accepting)

    def minimized(self, state_budget: int = DEFAULT_STATE_BUDGET) -> "Nfa":
        """Trimmed minimal DFA for the language (canonical numbering)."""
        return _minimize_complete_dfa(self.determinize(state_budget)).trim()

    def difference(self, other: "Nfa", state_budget: int = DEFAULT_STATE_BUDGET) -> "Nfa":
        """Automaton for L(self) minus L(other).

        The subtrahend is determinized over the merged alphabet, minimized,
        and complemented; the result is the trimmed product.
        """
        alphabet = merge_alphabets(self.alphabet, other.alphabet)
        comp = _complement_complete_dfa(
            _minimize_complete_dfa(other.with_alphabet(alphabet).determinize(state_budget))
        )
        return self.with_alphabet(alphabet).intersect(comp)

    def is_subset(self, other: "Nfa", state_budget: int = DEFAULT_STATE_BUDGET) -> bool:
        """True iff L(self) is contained in L(other): the difference is empty.

        The product with the complement is explored on the fly so the check
        stops at the first counterexample state pair.
        """
        alphabet = merge_alphabets(self.alphabet, other.alphabet)
        left = self.with_alphabet(alphabet)
        comp = _complement_complete_dfa(
            _minimize_complete_dfa(other.with_alphabet(alphabet).determinize(state_budget))
        )
        comp_delta = {key: targets[0] for key, targets in comp._delta.items()}
        comp_start = next(iter(comp.initials))
        seen = {(p, comp_start) for p in left.initials}
        queue = deque(seen)
        while queue:
            p, d = queue.popleft()
            if p in left.accepting and d in comp.accepting:
                return False
            for symbol in alphabet:
                lefts = left._delta.get((p, symbol), ())
                if not lefts:
                    continue
                nd = comp_delta[(d, symbol)]
                for np in lefts:
                    pair = (np, nd)
                    if pair not in seen:
                        seen.add(pair)
                        queue.append(pair)
        return True

    def equivalent(self, other: "Nfa", state_budget: int = DEFAULT_STATE_BUDGET) -> bool:
        """Language equality, via inclusion both ways."""
        return self.is_subset(other, state_budget) and other.is_subset(self, state_budget)

    # -- witness extraction -----------------------------------------------------

    def shortest_word(self) -> Word | None:
        """A length-lexicographically minimal accepted word, or None for the empty language.

        Ties within a length are broken by the alphabet order.
        """
        if self.initials & self.accepting:
            return EPSILON
        rank = {symbol: i for i, symbol in enumerate(self.alphabet)}
        # Per state, the lexicographically least symbol-index word of the
        # current length reaching it.
        frontier: dict[str, tuple[int, ...]] = {q: () for q in self.initials}
        for _ in range(len(self.states)):
            nxt: dict[str, tuple[int, ...]] = {}
            for state in sorted(frontier, key=state_key):
                coded = frontier[state]
                for symbol in self.alphabet:
                    code = coded + (rank[symbol],)
                    for target in self._delta.get((state, symbol), ()):
                        known = nxt.get(target)
                        if known is None or code < known:
                            nxt[target] = code
            hits = [code for state, code in nxt.items() if state in self.accepting]
            if hits:
                best = min(hits)
                return tuple(self.alphabet[i] for i in best)
            if not nxt:
                return None
            frontier = nxt
        return None

    def accepting_path(self, word: Iterable[str]) -> Path:
        """A deterministic accepting run for the word (canonical backtracking).

        Raises PathNotFoundError if the word is not accepted.
        """
        word = tuple(word)
        alpha = set(self.alphabet)
        for symbol in word:
            if symbol not in alpha:
                raise UnknownSymbolError(f"symbol {symbol!r} is not in the alphabet {self.alphabet}")
        layers: list[set[str]] = [set(self.initials)]
        for symbol in word:
            layers.append(self.step(layers[-1], symbol))
        finals = layers[-1] & self.accepting
        if not finals:
            raise PathNotFoundError("the word is not accepted by the automaton")
        reverse: list[str] = [min(finals, key=state_key)]
        for position in range(len(word) - 1, -1, -1):
            symbol = word[position]
            target = reverse[-1]
            sources = [
                p for p in layers[position] if target in self._delta.get((p, symbol), ())
            ]
            reverse.append(min(sources, key=state_key))
        return Path(states=tuple(reversed(reverse)), symbols=word)


def union_all(automata: Iterable[Nfa]) -> Nfa:
    """Disjoint union of the automata (language union), trimmed and renumbered."""
    automata = list(automata)
    alphabet = merge_alphabets(*(a.alphabet for a in automata))
    transitions: list[tuple[object, str, object]] = []
    initials: set[object] = set()
    accepting: set[object] = set()
    for i, nfa in enumerate(automata):
        tag = str(i)
        transitions.extend(((tag, p), a, (tag, q)) for p, a, q in nfa.transitions)
        initials.update((tag, s) for s in nfa.initials)
        accepting.update((tag, s) for s in nfa.accepting)
    return _assemble(alphabet, transitions, initials, accepting)


# -- internal helpers -----------------------------------------------------------


def _generic_key(state: object) -> tuple:
    """Deterministic total order over the composite states built internally."""
    if isinstance(state, str):
        return (0, len(state), state)
    return (1, len(state), tuple(_generic_key(part) for part in state))


def _closure(seed: Iterable[object], table: dict[object, set[object]]) -> set[object]:
    seen = set(seed)
    queue = deque(seen)
    while queue:
        for nxt in table.get(queue.popleft(), ()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _assemble(
    alphabet: Sequence[str],
    transitions: Iterable[tuple[object, str, object]],
    initials: Iterable[object],
    accepting: Iterable[object],
) -> Nfa:
    """Trim an automaton over arbitrary hashable states and renumber it canonically.

    States not on an accepting path are dropped; the survivors are renamed
    "0", "1", ... in breadth-first order from the initial states (alphabet
    order first, shortlex on the old identity second).
    """
    transitions = list(transitions)
    initials = set(initials)
    accepting = set(accepting)
    succ: dict[object, set[object]] = {}
    pred: dict[object, set[object]] = {}
    for p, _, q in transitions:
        succ.setdefault(p, set()).add(q)
        pred.setdefault(q, set()).add(p)
    keep = _closure(initials, succ) & _closure(accepting, pred)
    if not keep:
        return Nfa(tuple(alphabet), (), frozenset(), frozenset(), frozenset())
    delta: dict[tuple[object, str], list[object]] = {}
    for p, a, q in transitions:
        if p in keep and q in keep:
            delta.setdefault((p, a), []).append(q)
    names: dict[object, str] = {}
    queue: deque[object] = deque()
    for state in sorted((s for s in initials if s in keep), key=_generic_key):
        names[state] = str(len(names))
        queue.append(state)
    while queue:
        state = queue.popleft()
        for symbol in alphabet:
            for target in sorted(delta.get((state, symbol), ()), key=_generic_key):
                if target not in names:
                    names[target] = str(len(names))
                    queue.append(target)
    new_transitions = {
        (names[p], a, names[q])
        for (p, a), targets in delta.items()
        for q in targets
    }
    return Nfa(
        tuple(alphabet),
        tuple(str(i) for i in range(len(names))),
        frozenset(new_transitions),
        frozenset(names[s] for s in initials if s in keep),
        frozenset(names[s] for s in accepting if s in keep),
    )


def _minimize_complete_dfa(dfa: Nfa) -> Nfa:
    """Moore partition refinement.  Expects the complete DFA shape produced by determinize."""
    order = sorted(dfa.states, key=state_key)
    delta = {key: targets[0] for key, targets in dfa._delta.items()}
    cls = {q: (1 if q in dfa.accepting else 0) for q in order}
    count = len(set(cls.values()))
    while True:
        fresh: dict[tuple, int] = {}
        new_cls: dict[str, int] = {}
        for q in order:
            signature = (cls[q], tuple(cls[delta[(q, a)]] for a in dfa.alphabet))
            if signature not in fresh:
                fresh[signature] = len(fresh)
            new_cls[q] = fresh[signature]
        cls = new_cls
        if len(fresh) == count:
            break
        count = len(fresh)
    start = next(iter(dfa.initials))
    transitions = {
        (str(cls[p]), a, str(cls[delta[(p, a)]])) for p in order for a in dfa.alphabet
    }
    quotient = Nfa(
        dfa.alphabet,
        tuple(str(i) for i in range(count)),
        frozenset(transitions),
        frozenset({str(cls[start])}),
        frozenset(str(cls[q]) for q in dfa.accepting),
    )
    return _renumber(quotient)


def _renumber(nfa: Nfa) -> Nfa:
    """Breadth-first renumbering without trimming (used where completeness must survive)."""
    names: dict[str, str] = {}
    queue: deque[str] = deque()
    for state in sorted(nfa.initials, key=state_key):
        names[state] = str(len(names))
        queue.append(state)
    while queue:
        state = queue.popleft()
        for symbol in nfa.alphabet:
            for target in nfa._delta.get((state, symbol), ()):
                if target not in names:
                    names[target] = str(len(names))
                    queue.append(target)
    for state in sorted(nfa.states, key=state_key):
        if state not in names:
            names[state] = str(len(names))
    return Nfa(
        nfa.alphabet,
        tuple(str(i) for i in range(len(names))),
        frozenset((names[p], a, names[q]) for p, a, q in nfa.transitions),
        frozenset(names[s] for s in nfa.initials),
        frozenset(names[s] for s in nfa.accepting),
    )


def _complement_complete_dfa(dfa: Nfa) -> Nfa:
    return Nfa(
        dfa.alphabet,
        dfa.states,
        dfa.transitions,
        dfa.initials,
        frozenset(dfa.states) - dfa.accepting,
    )
