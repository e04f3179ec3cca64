import json
import random

import pytest

from helpers import random_nfa
from ptsep import Tower, errors
from ptsep.families import FamilySpec, build_family, witness_tower
from ptsep.formats import (
    automaton_from_document,
    automaton_from_dot,
    automaton_to_document,
    automaton_to_dot,
    format_word,
    tower_from_document,
    tower_to_document,
)


def test_document_round_trip(quadratic7):
    first, _ = quadratic7
    doc = automaton_to_document(first)
    again = automaton_from_document(doc)
    assert again.equivalent(first)
    assert automaton_to_document(again) == doc


def test_document_is_deterministic(quadratic7):
    first, _ = quadratic7
    a = json.dumps(automaton_to_document(first))
    b = json.dumps(automaton_to_document(first))
    assert a == b


def test_document_sorting_shortlex():
    from helpers import simple_nfa

    nfa = simple_nfa(
        ("a",),
        {(str(i), "a", str(i + 1)) for i in range(1, 11)},
        {"1"},
        {"11"},
    )
    doc = automaton_to_document(nfa)
    assert doc["states"][:3] == ["1", "2", "3"]
    assert doc["states"][-1] == "11"


def test_document_rejects_unknown_fields():
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_document({"alphabet": [], "states": [], "initial": [],
                                 "accepting": [], "transitions": [], "extra": 1})
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_document({"alphabet": []})
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_document(
            {"alphabet": ["a"], "states": ["p"], "initial": ["p"], "accepting": [],
             "transitions": [{"from": "p", "symbol": "a", "to": "p", "weight": 3}]}
        )


def test_document_deduplicates_transitions():
    doc = {
        "alphabet": ["a"],
        "states": ["p"],
        "initial": ["p"],
        "accepting": ["p"],
        "transitions": [
            {"from": "p", "symbol": "a", "to": "p"},
            {"from": "p", "symbol": "a", "to": "p"},
        ],
    }
    nfa = automaton_from_document(doc)
    assert len(automaton_to_document(nfa)["transitions"]) == 1


def test_document_semantic_validation():
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_document(
            {"alphabet": ["a"], "states": ["p"], "initial": ["q"],
             "accepting": [], "transitions": []}
        )


def test_tower_document_round_trip(exponential0):
    tower = witness_tower(FamilySpec("exponential", 0))
    doc = tower_to_document(tower)
    assert doc[0] == {"word": [], "side": "second"}
    again = tower_from_document(doc)
    assert again == tower


def test_tower_document_validation():
    with pytest.raises(errors.InvalidDocumentError):
        tower_from_document([{"word": [], "side": "top"}])
    with pytest.raises(errors.InvalidDocumentError):
        tower_from_document([{"word": "bc", "side": "first"}])
    with pytest.raises(errors.InvalidDocumentError):
        tower_from_document({"word": [], "side": "first"})


def test_format_word():
    assert format_word(()) == "ε"
    assert format_word(("b", "c", "b")) == "bcb"
    assert format_word(("b", "a1", "b")) == "b a1 b"


def test_dot_round_trip_on_families():
    for spec in (FamilySpec("quadratic", 5), FamilySpec("exponential", 1)):
        for nfa in build_family(spec):
            doc = automaton_to_document(nfa)
            parsed = automaton_from_dot(automaton_to_dot(nfa))
            assert automaton_to_document(parsed) == doc


def test_dot_round_trip_on_random_automata():
    rng = random.Random(55)
    for trial in range(10):
        nfa = random_nfa(rng, max_states=5, alphabet=("a", "b"))
        doc = automaton_to_document(nfa)
        parsed = automaton_from_dot(automaton_to_dot(nfa))
        assert automaton_to_document(parsed) == doc


def test_dot_rejects_garbage():
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_dot("digraph automaton {\n  ???\n}")
    with pytest.raises(errors.InvalidDocumentError):
        automaton_from_dot('digraph automaton {\n  "p" [shape=circle];\n}')
