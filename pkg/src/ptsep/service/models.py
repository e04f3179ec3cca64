"""Pydantic request/response models for the HTTP service (and the CLI client)."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..chain import DEFAULT_MAX_LEVELS, Tower
from ..formats import (
    automaton_from_document,
    automaton_to_document,
    tower_from_document,
    tower_to_document,
)
from ..nfa import DEFAULT_STATE_BUDGET, Nfa


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class TransitionModel(StrictModel):
    from_state: str = Field(alias="from")
    symbol: str
    to: str


class AutomatonModel(StrictModel):
    alphabet: list[str]
    states: list[str]
    initial: list[str]
    accepting: list[str]
    transitions: list[TransitionModel]

    def to_nfa(self) -> Nfa:
        return automaton_from_document(self.model_dump(by_alias=True))

    @classmethod
    def from_nfa(cls, nfa: Nfa) -> "AutomatonModel":
        return cls.model_validate(automaton_to_document(nfa))


class TowerEntryModel(StrictModel):
    word: list[str]
    side: Literal["first", "second"]


class TowerModel(StrictModel):
    entries: list[TowerEntryModel]

    def to_tower(self) -> Tower:
        return tower_from_document([entry.model_dump() for entry in self.entries])

    @classmethod
    def from_tower(cls, tower: Tower) -> "TowerModel":
        return cls.model_validate({"entries": tower_to_document(tower)})


class PairRequest(StrictModel):
    first: AutomatonModel
    second: AutomatonModel
    max_levels: int = Field(default=DEFAULT_MAX_LEVELS, ge=1)
    state_budget: int = Field(default=DEFAULT_STATE_BUDGET, ge=1)


class LevelCountModel(StrictModel):
    level: int
    first_states: int
    second_states: int


class DecideResponse(StrictModel):
    verdict: Literal["separable", "infinite-tower", "exhausted"]
    stabilized_at: int | None
    levels: list[LevelCountModel]
    limit: int | None = None


class TowerLengthRequest(PairRequest):
    oracle_bound: int | None = Field(default=None, ge=0)


class TowerLengthResponse(StrictModel):
    infinite: bool
    length: int | None
    oracle_bound: int | None = None
    oracle_length: int | None = None


class WitnessResponse(StrictModel):
    tower: list[TowerEntryModel]


class SeparatorResponse(StrictModel):
    separator: AutomatonModel
    levels: list[AutomatonModel]
    verified: bool
    pieces_available: bool


class FamilyRequest(StrictModel):
    kind: Literal["quadratic", "cubic", "exponential"]
    parameter: int
    include_witness: bool = False


class FamilyResponse(StrictModel):
    first: AutomatonModel
    second: AutomatonModel
    witness_word: list[str] | None = None
    witness_tower: list[TowerEntryModel] | None = None


class AuditRequest(StrictModel):
    tower: list[TowerEntryModel]
    first: AutomatonModel
    second: AutomatonModel


class AuditFactorModel(StrictModel):
    kind: Literal["letter", "cycle"]
    word: list[str]
    from_state: str = Field(alias="from")
    to_state: str = Field(alias="to")
    anchor: str
    weight: int


class AuditLevelModel(StrictModel):
    index: int
    side: Literal["first", "second"]
    word: list[str]
    factors: list[AuditFactorModel]
    weight: int


class AuditResponse(StrictModel):
    levels: list[AuditLevelModel]
    violation: bool
    tower_length: int
    states: int
    alphabet_size: int
    upper_bound: int
    within_bound: bool


class ConvertRequest(StrictModel):
    automaton: AutomatonModel | None = None
    dot: str | None = None
    to: Literal["json", "dot"]


class ConvertResponse(StrictModel):
    automaton: AutomatonModel | None = None
    dot: str | None = None


class ErrorBody(StrictModel):
    code: str
    message: str
