import random

import pytest

from helpers import empty_language, even_as, odd_as, random_nfa, simple_nfa
from ptsep import (
    SIDE_FIRST,
    SIDE_SECOND,
    Tower,
    VERDICT_EXHAUSTED,
    VERDICT_INFINITE,
    VERDICT_SEPARABLE,
    downward_closure,
    errors,
    extract_tower,
    has_infinite_tower,
    longest_prefix_tower,
    max_tower_length,
    run_chain,
)
from ptsep.families import FamilySpec, build_family, witness_word


def test_tower_invariants_enforced():
    with pytest.raises(ValueError):
        Tower(((), ("a",)), (SIDE_FIRST, SIDE_FIRST))  # no alternation
    with pytest.raises(ValueError):
        Tower((("b",), ("a",)), (SIDE_FIRST, SIDE_SECOND))  # no embedding
    with pytest.raises(ValueError):
        Tower(((),), ("nowhere",))
    tower = Tower(((), ("a",)), (SIDE_SECOND, SIDE_FIRST))
    assert len(tower) == 2


def test_tower_membership_validation(exponential0):
    first, second = exponential0
    good = Tower(((), ("b",)), (SIDE_SECOND, SIDE_FIRST))
    good.validate_members(first, second)
    bad = Tower(((), ("b",)), (SIDE_FIRST, SIDE_SECOND))
    with pytest.raises(errors.InvalidTowerError):
        bad.validate_members(first, second)


def test_run_chain_on_quadratic_family(quadratic7):
    trace = run_chain(*quadratic7)
    assert trace.verdict == VERDICT_SEPARABLE
    assert trace.stabilized_at is not None
    last = trace.levels[-1]
    assert last.first.is_empty() and last.second.is_empty()


def test_run_chain_detects_infinite_tower():
    trace = run_chain(even_as(), odd_as())
    assert trace.verdict == VERDICT_INFINITE
    # the stabilized pair embeds into each other both ways
    fixed = trace.levels[-1]
    assert fixed.first.is_subset(downward_closure(fixed.second))
    assert fixed.second.is_subset(downward_closure(fixed.first))


def test_run_chain_empty_against_finite(exponential0):
    _, second = exponential0
    trace = run_chain(empty_language(second.alphabet), second)
    assert trace.verdict == VERDICT_SEPARABLE
    assert trace.stabilized_at is not None and trace.stabilized_at <= 1


def test_run_chain_levels_are_decreasing(exponential1):
    trace = run_chain(*exponential1)
    for later, earlier in zip(trace.levels[1:], trace.levels):
        assert later.first.is_subset(earlier.first)
        assert later.second.is_subset(earlier.second)


def test_run_chain_exhausted_budget(quadratic5):
    trace = run_chain(*quadratic5, max_levels=1)
    assert trace.verdict == VERDICT_EXHAUSTED
    assert trace.limit == 1


def test_has_infinite_tower_shared_word():
    shared = simple_nfa(("a",), {("p", "a", "q")}, {"p"}, {"q"})
    assert has_infinite_tower(shared, shared)


def test_has_infinite_tower_exponential_family():
    first, second = build_family(FamilySpec("exponential", 2))
    assert not has_infinite_tower(first, second)


def test_has_infinite_tower_empty_side(exponential0):
    first, _ = exponential0
    assert not has_infinite_tower(empty_language(first.alphabet), first)


def test_has_infinite_tower_undecided(quadratic5):
    with pytest.raises(errors.UndecidedError):
        has_infinite_tower(*quadratic5, max_levels=1)


def test_max_tower_length_exponential_base(exponential0):
    assert max_tower_length(*exponential0).value == 4


def test_max_tower_length_quadratic_window(quadratic5):
    length = max_tower_length(*quadratic5)
    assert not length.is_infinite
    assert 10 <= length.value <= 31


def test_max_tower_length_degenerate_cases(exponential0):
    first, _ = exponential0
    nothing = empty_language(first.alphabet)
    assert max_tower_length(first, nothing).value == 1
    assert max_tower_length(nothing, nothing).value == 0
    assert max_tower_length(even_as(), odd_as()).is_infinite


def test_max_tower_length_is_symmetric():
    rng = random.Random(5150)
    checked = 0
    while checked < 8:
        a = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        b = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        trace = run_chain(a, b, max_levels=64)
        if trace.verdict != VERDICT_SEPARABLE:
            continue
        assert max_tower_length(a, b).value == max_tower_length(b, a).value
        checked += 1


def test_extract_tower_exponential_base(exponential0):
    tower = extract_tower(*exponential0)
    assert tower.words == ((), ("b",), ("b", "c"), ("b", "c", "b"))
    assert tower.sides == (SIDE_SECOND, SIDE_FIRST, SIDE_SECOND, SIDE_FIRST)
    tower.validate_members(*exponential0)


def test_extract_tower_matches_max_length(quadratic5):
    tower = extract_tower(*quadratic5)
    tower.validate_members(*quadratic5)
    assert len(tower) == max_tower_length(*quadratic5).value


def test_extract_tower_errors(exponential0):
    first, _ = exponential0
    nothing = empty_language(first.alphabet)
    with pytest.raises(errors.NoTowerError):
        extract_tower(nothing, empty_language(first.alphabet))
    with pytest.raises(errors.InfiniteTowerError):
        extract_tower(even_as(), odd_as())
    single = extract_tower(first, nothing)
    assert len(single) == 1 and single.sides == (SIDE_FIRST,)


def test_longest_prefix_tower_exponential(exponential0):
    tower = longest_prefix_tower(("b", "c", "b"), *exponential0)
    assert len(tower) == 4
    assert tower.words == ((), ("b",), ("b", "c"), ("b", "c", "b"))


def test_longest_prefix_tower_quadratic_witness(quadratic7):
    word = witness_word(FamilySpec("quadratic", 7))
    tower = longest_prefix_tower(word, *quadratic7)
    assert len(tower) >= 26
    tower.validate_members(*quadratic7)


def test_longest_prefix_tower_without_members():
    a = simple_nfa(("a",), {("p", "a", "q")}, {"p"}, {"q"})
    b = simple_nfa(("a",), {("p", "a", "q")}, {"p"}, {"q"})
    # neither accepts the empty word; towers over the empty word are empty
    with pytest.raises(errors.AmbiguousMembershipError):
        longest_prefix_tower(("a",), a, b)
    tower = longest_prefix_tower((), a, b)
    assert len(tower) == 0


def test_longest_prefix_tower_bounded_by_max(exponential1):
    word = witness_word(FamilySpec("exponential", 1))
    prefix_len = len(longest_prefix_tower(word, *exponential1))
    overall = max_tower_length(*exponential1).value
    assert prefix_len <= overall
