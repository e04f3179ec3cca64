"""Built-in automaton families with long finite towers, plus their witness words and towers.

Three parameterized pairs of disjoint languages with no infinite tower:

* ``quadratic`` (odd n >= 5, binary alphabet): tower length at least
  n^2 - 4n + 5 against automata with n - 1 and n states.
* ``cubic`` (n divisible by four, n >= 8, four letters): tower length at
  least (n - 2) * (n^2/4 + n/2 - 2) + 1.
* ``exponential`` (m >= 0, alphabet of m + 2 letters): tower length exactly
  2^(m + 2) against automata with 2 and m + 3 states.

Every witness is a prefix tower: the witness word's prefixes alternate
between the two languages, so :func:`witness_tower` just runs the
longest-prefix-tower search on the witness word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import Tower, longest_prefix_tower
from .errors import InvalidParameterError
from .nfa import Nfa, Word

KIND_QUADRATIC = "quadratic"
KIND_CUBIC = "cubic"
KIND_EXPONENTIAL = "exponential"

FAMILY_KINDS = (KIND_QUADRATIC, KIND_CUBIC, KIND_EXPONENTIAL)


@dataclass(frozen=True)
class FamilySpec:
    """Which family to build and at which size parameter."""

    kind: str
    parameter: int

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise InvalidParameterError(
                f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}"
            )
        n = self.parameter
        if self.kind == KIND_QUADRATIC and (n < 5 or n % 2 == 0):
            raise InvalidParameterError("the quadratic family needs an odd parameter >= 5")
        if self.kind == KIND_CUBIC and (n < 8 or n % 4 != 0):
            raise InvalidParameterError(
                "the cubic family needs a parameter divisible by four, >= 8"
            )
        if self.kind == KIND_EXPONENTIAL and n < 0:
            raise InvalidParameterError("the exponential family needs a parameter >= 0")


def build_family(spec: FamilySpec) -> tuple[Nfa, Nfa]:
    """The pair of automata for the family; the first is the one accepting the witness word."""
    if spec.kind == KIND_QUADRATIC:
        return _quadratic_pair(spec.parameter)
    if spec.kind == KIND_CUBIC:
        return _cubic_pair(spec.parameter)
    return _exponential_pair(spec.parameter)


def witness_word(spec: FamilySpec) -> Word:
    """The word whose prefixes realize the family's guaranteed tower length."""
    if spec.kind == KIND_QUADRATIC:
        return _quadratic_witness(spec.parameter)
    if spec.kind == KIND_CUBIC:
        return _cubic_witness(spec.parameter)
    return _exponential_witness(spec.parameter)


def witness_tower(spec: FamilySpec) -> Tower:
    """The longest prefix tower of the witness word between the family's languages."""
    first, second = build_family(spec)
    return longest_prefix_tower(witness_word(spec), first, second)


# -- quadratic family (binary alphabet) ------------------------------------------


def _quadratic_pair(n: int) -> tuple[Nfa, Nfa]:
    # First automaton, n - 1 states: an a-path 1 -> 2 -> ... -> n-2, extra
    # a-jumps from state 1 to every path state, b-self-loops everywhere except
    # the final two states, and a b-cycle between states n-2 and n-1.
    states_a = [str(i) for i in range(1, n)]
    transitions_a: set[tuple[str, str, str]] = set()
    for i in range(1, n - 2):
        transitions_a.add((str(i), "a", str(i + 1)))
    for j in range(2, n - 1):
        transitions_a.add(("1", "a", str(j)))
    for i in range(1, n - 2):
        transitions_a.add((str(i), "b", str(i)))
    transitions_a.add((str(n - 2), "b", str(n - 1)))
    transitions_a.add((str(n - 1), "b", str(n - 2)))
    first = Nfa(("a", "b"), states_a, transitions_a, {"1"}, {str(n - 1)})

    # Second automaton, n states: a b-path 1 -> ... -> n, b-jumps from state 1
    # to every even state, and an a-return from state n to state 1.
    states_b = [str(i) for i in range(1, n + 1)]
    transitions_b: set[tuple[str, str, str]] = set()
    for i in range(1, n):
        transitions_b.add((str(i), "b", str(i + 1)))
    for j in range(2, n, 2):
        transitions_b.add(("1", "b", str(j)))
    transitions_b.add((str(n), "a", "1"))
    second = Nfa(("a", "b"), states_b, transitions_b, {"1"}, {"1", str(n)})
    return first, second


def _quadratic_witness(n: int) -> Word:
    block = ("b",) * (n - 1) + ("a",)
    return block * (n - 3) + ("b",) * n


# -- cubic family (four letters) --------------------------------------------------


def _cubic_pair(n: int) -> tuple[Nfa, Nfa]:
    half = n // 2
    # First automaton, n - 1 states: an a-path 1 -> ... -> n-2 with a-jumps
    # from state 1, self-loops under b, c, d everywhere except the final
    # state, and a b-transition from every non-final state to the final one.
    states_a = [str(i) for i in range(1, n)]
    transitions_a: set[tuple[str, str, str]] = set()
    for i in range(1, n - 2):
        transitions_a.add((str(i), "a", str(i + 1)))
    for j in range(2, n - 1):
        transitions_a.add(("1", "a", str(j)))
    for i in range(1, n - 1):
        for symbol in ("b", "c", "d"):
            transitions_a.add((str(i), symbol, str(i)))
        transitions_a.add((str(i), "b", str(n - 1)))
    first = Nfa(("a", "b", "c", "d"), states_a, transitions_a, {"1"}, {str(n - 1)})

    # Second automaton, n states, accepting {n/2, n}.  Lower part: a d-path
    # 1 -> ... -> n/2 with d-jumps from state 1 and b,c-self-loops below n/2.
    # Upper part: a b/c-alternating path n/2 -> ... -> n-1 starting with b,
    # b-jumps from n/2 to the odd states up to n-1, and a,c exits from n-1 to
    # n plus an a-return from n-1 to 1.
    states_b = [str(i) for i in range(1, n + 1)]
    transitions_b: set[tuple[str, str, str]] = set()
    for i in range(1, half):
        transitions_b.add((str(i), "d", str(i + 1)))
        transitions_b.add((str(i), "b", str(i)))
        transitions_b.add((str(i), "c", str(i)))
    for j in range(2, half + 1):
        transitions_b.add(("1", "d", str(j)))
    for offset, i in enumerate(range(half, n - 1)):
        symbol = "b" if offset % 2 == 0 else "c"
        transitions_b.add((str(i), symbol, str(i + 1)))
    for j in range(half + 1, n):
        if j % 2 == 1:
            transitions_b.add((str(half), "b", str(j)))
    transitions_b.add((str(n - 1), "a", str(n)))
    transitions_b.add((str(n - 1), "c", str(n)))
    transitions_b.add((str(n - 1), "a", "1"))
    second = Nfa(("a", "b", "c", "d"), states_b, transitions_b, {"1"}, {str(half), str(n)})
    return first, second


def _cubic_witness(n: int) -> Word:
    quarter = n // 4
    unit = ("b", "d") + ("b", "c") * quarter
    body = unit * (n // 2 - 2) + ("b", "d") + ("b", "c") * (quarter - 1)
    return (body + ("b", "a")) * (n - 3) + body + ("b", "c", "b")


# -- exponential family (growing alphabet) ----------------------------------------


def _exponential_alphabet(m: int) -> tuple[str, ...]:
    return ("b", "c") + tuple(f"a{j}" for j in range(1, m + 1))


def _exponential_pair(m: int) -> tuple[Nfa, Nfa]:
    alphabet = _exponential_alphabet(m)
    # First automaton: two states, self-loops on everything at the initial
    # state, one b into the accepting state; accepts every word ending in b.
    transitions_a = {("1", symbol, "1") for symbol in alphabet}
    transitions_a.add(("1", "b", "2"))
    first = Nfa(alphabet, ["1", "2"], transitions_a, {"1"}, {"2"})

    # Second automaton: the base p -b-> q -c-> r core accepting {ε, bc},
    # extended level by level.  Level j adds initial state "j" with self-loops
    # on the smaller alphabet and a_j-transitions onto the previous initials.
    states_b = ["p", "q", "r"] + [str(j) for j in range(1, m + 1)]
    transitions_b: set[tuple[str, str, str]] = {("p", "b", "q"), ("q", "c", "r")}
    initials = {"p"}
    for j in range(1, m + 1):
        fresh = str(j)
        for symbol in _exponential_alphabet(j - 1):
            transitions_b.add((fresh, symbol, fresh))
        for target in sorted(initials):
            transitions_b.add((fresh, f"a{j}", target))
        initials.add(fresh)
    second = Nfa(alphabet, states_b, transitions_b, initials, {"p", "r"})
    return first, second


def _exponential_witness(m: int) -> Word:
    word: Word = ("b", "c", "b")
    for j in range(1, m + 1):
        word = word + (f"a{j}",) + word
    return word
