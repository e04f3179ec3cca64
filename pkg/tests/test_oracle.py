import random

import pytest

from helpers import empty_language, random_nfa
from ptsep import (
    VERDICT_SEPARABLE,
    errors,
    max_tower_length,
    run_chain,
)
from ptsep.families import FamilySpec, build_family
from ptsep.oracle import BoundedLanguage, enumerate_language, oracle_max_tower


def test_enumerate_finite_language(exponential0):
    _, second = exponential0
    bounded = enumerate_language(second, 4)
    assert bounded.words == {(), ("b", "c")}
    assert bounded.bound == 4


def test_enumerate_short_slice(exponential0):
    first, _ = exponential0
    bounded = enumerate_language(first, 2)
    assert bounded.words == {("b",), ("b", "b"), ("c", "b")}


def test_enumerate_empty_language():
    assert enumerate_language(empty_language(), 5).words == frozenset()


def test_enumerate_budget():
    first, _ = build_family(FamilySpec("exponential", 0))
    with pytest.raises(errors.ResourceLimitError):
        enumerate_language(first, 40)


def test_oracle_exponential_base(exponential0):
    first, second = exponential0
    value = oracle_max_tower(
        enumerate_language(first, 3), enumerate_language(second, 3)
    )
    assert value == 4


def test_oracle_tiny_sets():
    one = BoundedLanguage(frozenset({("a",)}), 1)
    two = BoundedLanguage(frozenset({("a", "a")}), 2)
    other = BoundedLanguage(frozenset({("b",)}), 1)
    assert oracle_max_tower(one, two) == 2
    assert oracle_max_tower(one, other) == 1


def test_oracle_flags_shared_word():
    same = BoundedLanguage(frozenset({("a",)}), 1)
    with pytest.raises(errors.AmbiguousMembershipError):
        oracle_max_tower(same, same)


def test_oracle_monotone_in_bound(exponential0):
    first, second = exponential0
    values = [
        oracle_max_tower(enumerate_language(first, k), enumerate_language(second, k))
        for k in range(6)
    ]
    assert values == sorted(values)


def test_oracle_is_a_lower_bound():
    rng = random.Random(6174)
    checked = 0
    while checked < 10:
        a = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        b = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        trace = run_chain(a, b, max_levels=64)
        if trace.verdict != VERDICT_SEPARABLE:
            continue
        checked += 1
        exact = max_tower_length(a, b).value
        approx = oracle_max_tower(enumerate_language(a, 6), enumerate_language(b, 6))
        assert approx <= exact


def test_oracle_exact_on_small_exponential_families():
    for m in (0, 1):
        first, second = build_family(FamilySpec("exponential", m))
        exact = max_tower_length(first, second).value
        approx = oracle_max_tower(
            enumerate_language(first, 10), enumerate_language(second, 10)
        )
        assert approx == exact
