"""The service operations as plain functions over the pydantic models.

The FastAPI routes and the CLI both call these, so there is exactly one
implementation of every endpoint regardless of transport.
"""

from __future__ import annotations

from ..bounds import audit_tower_weights
from ..chain import extract_tower, max_tower_length, run_chain
from ..errors import InvalidDocumentError
from ..families import FamilySpec, build_family, witness_tower, witness_word
from ..formats import (
    audit_to_document,
    automaton_from_dot,
    automaton_to_dot,
)
from ..nfa import merge_alphabets
from ..oracle import enumerate_language, oracle_max_tower
from ..separator import synthesize, verify_separator
from .models import (
    AuditRequest,
    AuditResponse,
    AutomatonModel,
    ConvertRequest,
    ConvertResponse,
    DecideResponse,
    FamilyRequest,
    FamilyResponse,
    LevelCountModel,
    PairRequest,
    SeparatorResponse,
    TowerLengthRequest,
    TowerLengthResponse,
    TowerModel,
    WitnessResponse,
)


def decide(request: PairRequest) -> DecideResponse:
    trace = run_chain(
        request.first.to_nfa(),
        request.second.to_nfa(),
        request.max_levels,
        request.state_budget,
    )
    return DecideResponse(
        verdict=trace.verdict,
        stabilized_at=trace.stabilized_at,
        limit=trace.limit,
        levels=[
            LevelCountModel(
                level=index,
                first_states=len(level.first.states),
                second_states=len(level.second.states),
            )
            for index, level in enumerate(trace.levels)
        ],
    )


def tower_length(request: TowerLengthRequest) -> TowerLengthResponse:
    first = request.first.to_nfa()
    second = request.second.to_nfa()
    length = max_tower_length(first, second, request.max_levels, request.state_budget)
    oracle_value = None
    if request.oracle_bound is not None:
        oracle_value = oracle_max_tower(
            enumerate_language(first, request.oracle_bound),
            enumerate_language(second, request.oracle_bound),
        )
    return TowerLengthResponse(
        infinite=length.is_infinite,
        length=length.value,
        oracle_bound=request.oracle_bound,
        oracle_length=oracle_value,
    )


def witness(request: PairRequest) -> WitnessResponse:
    tower = extract_tower(
        request.first.to_nfa(),
        request.second.to_nfa(),
        request.max_levels,
        request.state_budget,
    )
    return WitnessResponse(tower=TowerModel.from_tower(tower).entries)


def separator(request: PairRequest) -> SeparatorResponse:
    first = request.first.to_nfa()
    second = request.second.to_nfa()
    result = synthesize(first, second, request.max_levels, request.state_budget)
    verified = verify_separator(result.separator, first, second, request.state_budget)
    return SeparatorResponse(
        separator=AutomatonModel.from_nfa(result.separator),
        levels=[AutomatonModel.from_nfa(level) for level in result.levels],
        verified=verified,
        pieces_available=result.pieces_available,
    )


def family(request: FamilyRequest) -> FamilyResponse:
    spec = FamilySpec(request.kind, request.parameter)
    first, second = build_family(spec)
    response = FamilyResponse(
        first=AutomatonModel.from_nfa(first),
        second=AutomatonModel.from_nfa(second),
    )
    if request.include_witness:
        word = witness_word(spec)
        tower = witness_tower(spec)
        response = response.model_copy(
            update={
                "witness_word": list(word),
                "witness_tower": TowerModel.from_tower(tower).entries,
            }
        )
    return response


def audit(request: AuditRequest) -> AuditResponse:
    first = request.first.to_nfa()
    second = request.second.to_nfa()
    tower = TowerModel(entries=request.tower).to_tower()
    result = audit_tower_weights(tower, first, second)
    states_used = max(len(first.trim().states), len(second.trim().states), 1)
    alphabet_size = len(merge_alphabets(first.alphabet, second.alphabet))
    doc = audit_to_document(result, tower, states_used, alphabet_size)
    return AuditResponse.model_validate(doc)


def convert(request: ConvertRequest) -> ConvertResponse:
    if (request.automaton is None) == (request.dot is None):
        raise InvalidDocumentError(
            "provide exactly one of 'automaton' (JSON) or 'dot' as the conversion input"
        )
    if request.automaton is not None:
        nfa = request.automaton.to_nfa()
    else:
        nfa = automaton_from_dot(request.dot or "")
    if request.to == "dot":
        return ConvertResponse(dot=automaton_to_dot(nfa))
    return ConvertResponse(automaton=AutomatonModel.from_nfa(nfa))
