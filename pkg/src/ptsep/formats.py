"""Stable file formats: JSON automaton documents, DOT export/import, report documents.

The JSON automaton document looks like::

    {"alphabet": ["a", "b"], "states": ["1", "2"], "initial": ["1"],
     "accepting": ["2"], "transitions": [{"from": "1", "symbol": "a", "to": "2"}]}

Unknown fields are rejected.  Duplicate transitions are allowed on input and
deduplicated on output; output arrays are sorted (states shortlex, symbols in
alphabet order, transitions by source, symbol, target).  Words are JSON
arrays of symbol names, which keeps multi-character symbols such as "a1"
unambiguous.

The DOT export uses one node per state, a doubled circle for accepting
states, an unlabeled entry marker per initial state, and edge labels joined
by commas; an alphabet comment preserves symbol order so our own DOT subset
parses back to the identical document.
"""

from __future__ import annotations

import re
from typing import Any

from .bounds import TowerWeightAudit, upper_bound
from .chain import ChainTrace, Tower, VERDICT_SEPARABLE
from .errors import InvalidDocumentError
from .nfa import Nfa, Word, state_key
from .separator import SeparatorResult

_AUTOMATON_KEYS = {"alphabet", "states", "initial", "accepting", "transitions"}
_TRANSITION_KEYS = {"from", "symbol", "to"}
_TOWER_KEYS = {"word", "side"}


def _string_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise InvalidDocumentError(f"{what} must be an array of strings")
    return value


def automaton_to_document(nfa: Nfa) -> dict:
    """Canonical JSON-ready dict for an automaton."""
    symbol_rank = {symbol: i for i, symbol in enumerate(nfa.alphabet)}
    transitions = sorted(
        nfa.transitions,
        key=lambda t: (state_key(t[0]), symbol_rank[t[1]], state_key(t[2])),
    )
    return {
        "alphabet": list(nfa.alphabet),
        "states": sorted(nfa.states, key=state_key),
        "initial": sorted(nfa.initials, key=state_key),
        "accepting": sorted(nfa.accepting, key=state_key),
        "transitions": [
            {"from": p, "symbol": a, "to": q} for p, a, q in transitions
        ],
    }


def automaton_from_document(doc: Any) -> Nfa:
    """Parse and validate a JSON automaton document."""
    if not isinstance(doc, dict):
        raise InvalidDocumentError("an automaton document must be a JSON object")
    unknown = set(doc) - _AUTOMATON_KEYS
    if unknown:
        raise InvalidDocumentError(f"unknown automaton fields: {sorted(unknown)}")
    missing = _AUTOMATON_KEYS - set(doc)
    if missing:
        raise InvalidDocumentError(f"missing automaton fields: {sorted(missing)}")
    alphabet = _string_list(doc["alphabet"], "alphabet")
    states = _string_list(doc["states"], "states")
    initial = _string_list(doc["initial"], "initial")
    accepting = _string_list(doc["accepting"], "accepting")
    raw_transitions = doc["transitions"]
    if not isinstance(raw_transitions, list):
        raise InvalidDocumentError("transitions must be an array")
    transitions = set()
    for item in raw_transitions:
        if not isinstance(item, dict):
            raise InvalidDocumentError("each transition must be an object")
        unknown = set(item) - _TRANSITION_KEYS
        if unknown:
            raise InvalidDocumentError(f"unknown transition fields: {sorted(unknown)}")
        if set(item) != _TRANSITION_KEYS:
            raise InvalidDocumentError(
                f"a transition needs exactly the fields {sorted(_TRANSITION_KEYS)}"
            )
        p, a, q = item["from"], item["symbol"], item["to"]
        if not all(isinstance(v, str) for v in (p, a, q)):
            raise InvalidDocumentError("transition fields must be strings")
        transitions.add((p, a, q))
    try:
        return Nfa(tuple(alphabet), tuple(states), frozenset(transitions),
                   frozenset(initial), frozenset(accepting))
    except ValueError as exc:
        raise InvalidDocumentError(str(exc)) from exc


# -- words and towers ---------------------------------------------------------------


def word_to_document(word: Word) -> list[str]:
    return list(word)


def word_from_document(value: Any) -> Word:
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise InvalidDocumentError("a word must be an array of symbol names")
    return tuple(value)


def format_word(word: Word) -> str:
    """Human-readable rendering: concatenated single-character symbols, else space-joined."""
    if not word:
        return "ε"
    if all(len(symbol) == 1 for symbol in word):
        return "".join(word)
    return " ".join(word)


def tower_to_document(tower: Tower) -> list[dict]:
    return [
        {"word": word_to_document(word), "side": side}
        for word, side in zip(tower.words, tower.sides)
    ]


def tower_from_document(data: Any) -> Tower:
    if not isinstance(data, list):
        raise InvalidDocumentError("a tower document must be a JSON array")
    words: list[Word] = []
    sides: list[str] = []
    for item in data:
        if not isinstance(item, dict) or set(item) != _TOWER_KEYS:
            raise InvalidDocumentError(
                'each tower entry needs exactly the fields "word" and "side"'
            )
        words.append(word_from_document(item["word"]))
        side = item["side"]
        if side not in ("first", "second"):
            raise InvalidDocumentError(f"unknown tower side {side!r}")
        sides.append(side)
    try:
        return Tower(tuple(words), tuple(sides))
    except ValueError as exc:
        raise InvalidDocumentError(str(exc)) from exc


# -- reports ------------------------------------------------------------------------


def trace_to_document(trace: ChainTrace) -> dict:
    doc: dict = {
        "verdict": trace.verdict,
        "stabilized_at": trace.stabilized_at,
        "levels": [
            {
                "level": index,
                "first_states": len(level.first.states),
                "second_states": len(level.second.states),
            }
            for index, level in enumerate(trace.levels)
        ],
    }
    if trace.limit is not None:
        doc["limit"] = trace.limit
    return doc


def trace_to_text(trace: ChainTrace) -> str:
    lines = []
    if trace.verdict == VERDICT_SEPARABLE:
        lines.append(f"verdict: separable (both languages empty at level {trace.stabilized_at})")
    elif trace.limit is not None:
        lines.append(f"verdict: undecided (level budget {trace.limit} exhausted)")
    else:
        lines.append("verdict: not separable (infinite tower)")
    lines.append("")
    lines.append("level  first-states  second-states")
    for index, level in enumerate(trace.levels):
        lines.append(
            f"{index:>5}  {len(level.first.states):>12}  {len(level.second.states):>13}"
        )
    return "\n".join(lines)


def separator_to_document(result: SeparatorResult, verified: bool) -> dict:
    return {
        "separator": automaton_to_document(result.separator),
        "levels": [automaton_to_document(level) for level in result.levels],
        "verified": verified,
        "pieces_available": result.pieces_available,
    }


def audit_to_document(
    audit: TowerWeightAudit,
    tower: Tower,
    states_used: int,
    alphabet_size: int,
) -> dict:
    bound = upper_bound(states_used, alphabet_size)
    levels = []
    for index, (report, factorization) in enumerate(
        zip(audit.reports, audit.factorizations)
    ):
        levels.append(
            {
                "index": index,
                "side": tower.sides[index],
                "word": word_to_document(tower.words[index]),
                "factors": [
                    {
                        "kind": factor.kind,
                        "word": word_to_document(factor.word),
                        "from": factor.from_state,
                        "to": factor.to_state,
                        "anchor": factor.anchor_state,
                        "weight": weight,
                    }
                    for factor, weight in zip(
                        factorization.factors, report.per_factor
                    )
                ],
                "weight": report.total,
            }
        )
    return {
        "levels": levels,
        "violation": audit.violation,
        "tower_length": len(tower),
        "states": states_used,
        "alphabet_size": alphabet_size,
        "upper_bound": bound,
        "within_bound": len(tower) <= bound,
    }


def audit_to_text(doc: dict) -> str:
    lines = ["level  side    weight  word"]
    for level in doc["levels"]:
        word = format_word(tuple(level["word"]))
        lines.append(
            f"{level['index']:>5}  {level['side']:<6}  {level['weight']:>6}  {word}"
        )
    lines.append("")
    lines.append(f"violation: {'yes' if doc['violation'] else 'none'}")
    comparison = "<=" if doc["within_bound"] else ">"
    lines.append(
        f"tower length {doc['tower_length']} {comparison} upper bound {doc['upper_bound']}"
        f" (states {doc['states']}, alphabet {doc['alphabet_size']})"
    )
    return "\n".join(lines)


# -- DOT ------------------------------------------------------------------------------


def _dot_quote(name: str) -> str:
    return f'"{name}"'


def automaton_to_dot(nfa: Nfa) -> str:
    """Graphviz rendering of the canonical document; parseable by automaton_from_dot."""
    doc = automaton_to_document(nfa)
    marker_base = "__start"
    while any(state.startswith(marker_base) for state in doc["states"]):
        marker_base += "_"
    lines = ["digraph automaton {", "  rankdir=LR;"]
    lines.append(f"  // alphabet: {' '.join(doc['alphabet'])}")
    for index, state in enumerate(doc["initial"]):
        marker = f"{marker_base}{index}"
        lines.append(f"  {_dot_quote(marker)} [shape=none, label=\"\"];")
        lines.append(f"  {_dot_quote(marker)} -> {_dot_quote(state)};")
    accepting = set(doc["accepting"])
    for state in doc["states"]:
        shape = "doublecircle" if state in accepting else "circle"
        lines.append(f"  {_dot_quote(state)} [shape={shape}];")
    grouped: dict[tuple[str, str], list[str]] = {}
    for item in doc["transitions"]:
        grouped.setdefault((item["from"], item["to"]), []).append(item["symbol"])
    for (src, dst), symbols in sorted(
        grouped.items(), key=lambda kv: (state_key(kv[0][0]), state_key(kv[0][1]))
    ):
        label = ",".join(symbols)
        lines.append(f"  {_dot_quote(src)} -> {_dot_quote(dst)} [label=\"{label}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r'^"([^"]+)"\s*\[shape=(\w+)(?:,\s*label="")?\];$')
_DOT_EDGE = re.compile(r'^"([^"]+)"\s*->\s*"([^"]+)"(?:\s*\[label="([^"]*)"\])?;$')
_DOT_ALPHABET = re.compile(r"^//\s*alphabet:\s*(.*)$")


def automaton_from_dot(text: str) -> Nfa:
    """Parse the DOT subset emitted by automaton_to_dot."""
    alphabet: list[str] | None = None
    markers: set[str] = set()
    states: list[str] = []
    accepting: set[str] = set()
    initial: set[str] = set()
    transitions: set[tuple[str, str, str]] = set()
    edges: list[tuple[str, str, str | None]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line in ("digraph automaton {", "}") or line.startswith("rankdir"):
            continue
        found = _DOT_ALPHABET.match(line)
        if found:
            alphabet = found.group(1).split()
            continue
        found = _DOT_NODE.match(line)
        if found:
            name, shape = found.groups()
            if shape == "none":
                markers.add(name)
            elif shape in ("circle", "doublecircle"):
                states.append(name)
                if shape == "doublecircle":
                    accepting.add(name)
            else:
                raise InvalidDocumentError(f"unsupported node shape {shape!r}")
            continue
        found = _DOT_EDGE.match(line)
        if found:
            edges.append(found.groups())
            continue
        raise InvalidDocumentError(f"unparseable DOT line: {raw!r}")
    if alphabet is None:
        raise InvalidDocumentError("the DOT input is missing its alphabet comment")
    for src, dst, label in edges:
        if src in markers:
            initial.add(dst)
            continue
        if label is None:
            raise InvalidDocumentError(f"transition edge {src!r} -> {dst!r} has no label")
        for symbol in label.split(","):
            transitions.add((src, symbol, dst))
    try:
        return Nfa(tuple(alphabet), tuple(states), frozenset(transitions),
                   frozenset(initial), frozenset(accepting))
    except ValueError as exc:
        raise InvalidDocumentError(str(exc)) from exc
