import random

import pytest

from helpers import empty_language, even_as, odd_as, random_nfa
from ptsep import (
    VERDICT_SEPARABLE,
    downward_closure,
    embeds,
    errors,
    minimal_pieces,
    run_chain,
    synthesize,
    union_all,
    upward_closure,
    verify_separator,
)
from ptsep.chain import ChainTrace
from ptsep.families import FamilySpec, build_family
from ptsep.oracle import enumerate_language


def test_synthesize_quadratic(quadratic5):
    first, second = quadratic5
    result = synthesize(first, second)
    assert verify_separator(result.separator, first, second)
    assert result.pieces_available


def test_synthesize_not_separable():
    with pytest.raises(errors.NotSeparableError):
        synthesize(even_as(), odd_as())


def test_synthesize_undecided(quadratic5):
    with pytest.raises(errors.UndecidedError):
        synthesize(*quadratic5, max_levels=1)


def test_synthesize_with_precomputed_trace(exponential1):
    trace = run_chain(*exponential1)
    result = synthesize(*exponential1, trace=trace)
    assert verify_separator(result.separator, *exponential1)


def test_separator_over_empty_first_language(exponential0):
    _, second = exponential0
    nothing = empty_language(second.alphabet)
    result = synthesize(nothing, second)
    assert verify_separator(result.separator, nothing, second)
    # the second language contains the empty word, so the separator is everything
    full = upward_closure(second)
    assert result.separator.equivalent(full)
    for word in ((), ("c", "c", "c"), ("b", "b")):
        assert result.separator.accepts(word)


def test_separator_is_union_of_levels(exponential1):
    first, second = exponential1
    result = synthesize(first, second)
    rebuilt = union_all(result.levels)
    assert rebuilt.equivalent(result.separator)


def test_per_level_inclusion(exponential1):
    first, second = exponential1
    trace = run_chain(first, second)
    result = synthesize(first, second, trace=trace)
    base = trace.levels[0]
    for index, component in enumerate(result.levels, start=1):
        lost = trace.levels[index - 1].second.difference(trace.levels[index].second)
        assert lost.is_subset(component)


def test_verify_separator_basics(exponential0):
    first, second = exponential0
    everything = upward_closure(second)  # contains epsilon, hence everything
    assert verify_separator(everything, empty_language(second.alphabet), second)
    assert not verify_separator(
        empty_language(second.alphabet), first, second
    )


def test_minimal_pieces_examples(exponential0):
    first, second = exponential0
    assert minimal_pieces(upward_closure(second)).words == ((),)
    assert minimal_pieces(upward_closure(first)).words == (("b",),)


def test_minimal_pieces_of_two_words():
    from helpers import simple_nfa

    two = simple_nfa(
        ("b", "c"),
        {("0", "b", "1"), ("1", "c", "2"), ("2", "b", "3")},
        {"0"},
        {"2", "3"},
    )  # {bc, bcb}
    pieces = minimal_pieces(upward_closure(two))
    assert pieces.words == (("b", "c"),)


def test_minimal_pieces_rejects_non_upward_closed(exponential0):
    _, second = exponential0
    with pytest.raises(errors.NotUpwardClosedError):
        minimal_pieces(second)


def test_minimal_pieces_antichain_and_cover():
    rng = random.Random(31337)
    for trial in range(6):
        nfa = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        closed = upward_closure(nfa)
        pieces = minimal_pieces(closed)
        for i, left in enumerate(pieces.words):
            for j, right in enumerate(pieces.words):
                if i != j:
                    assert not embeds(left, right)
        rebuilt = union_all(
            [upward_closure(_word_automaton(w, closed.alphabet)) for w in pieces.words]
        ) if pieces.words else empty_language(closed.alphabet)
        assert rebuilt.equivalent(closed)


def test_upward_membership_iff_minimal_piece_embeds():
    rng = random.Random(2718)
    for trial in range(5):
        nfa = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        closed = upward_closure(nfa)
        pieces = minimal_pieces(closed)
        for word in enumerate_language(closed, 5).words | {("a",) * 5, ("b", "a", "b")}:
            expected = any(embeds(piece, word) for piece in pieces.words)
            assert closed.accepts(word) == expected


def _word_automaton(word, alphabet):
    from ptsep import Nfa

    states = [str(i) for i in range(len(word) + 1)]
    transitions = {(str(i), s, str(i + 1)) for i, s in enumerate(word)}
    return Nfa(alphabet, states, transitions, {"0"}, {str(len(word))})


def test_separable_verdict_implies_working_separator():
    rng = random.Random(1618)
    produced = 0
    while produced < 10:
        a = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        b = random_nfa(rng, max_states=3, alphabet=("a", "b"))
        trace = run_chain(a, b, max_levels=64)
        if trace.verdict != VERDICT_SEPARABLE:
            continue
        result = synthesize(a, b, trace=trace)
        assert verify_separator(result.separator, a, b)
        produced += 1
