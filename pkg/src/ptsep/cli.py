"""Command-line front end: a thin client of the service API.

Every subcommand builds the same request models the HTTP service consumes and
calls the shared handlers in-process; pass ``--server URL`` to send the same
requests to a running service instead.  Exit codes: 0 separable/success,
1 not separable or verification failure, 2 input error, 3 resource limit,
4 undecided (level budget exhausted).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import TypeVar

import click

from . import errors
from .bounds import upper_bound
from .chain import DEFAULT_MAX_LEVELS, VERDICT_EXHAUSTED, VERDICT_INFINITE, VERDICT_SEPARABLE
from .formats import audit_to_text
from .nfa import DEFAULT_STATE_BUDGET
from .service import api
from .service.models import (
    AuditRequest,
    AuditResponse,
    AutomatonModel,
    ConvertRequest,
    ConvertResponse,
    DecideResponse,
    FamilyRequest,
    FamilyResponse,
    PairRequest,
    SeparatorResponse,
    StrictModel,
    TowerEntryModel,
    TowerLengthRequest,
    TowerLengthResponse,
    WitnessResponse,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_UNDECIDED = 4

_REMOTE_CODES = {
    "resource-limit": errors.ResourceLimitError,
    "undecided": errors.UndecidedError,
    "not-separable": errors.NotSeparableError,
    "infinite-tower": errors.InfiniteTowerError,
    "no-tower": errors.NoTowerError,
    "ambiguous-membership": errors.AmbiguousMembershipError,
    "not-upward-closed": errors.NotUpwardClosedError,
    "invalid-document": errors.InvalidDocumentError,
    "invalid-parameter": errors.InvalidParameterError,
    "invalid-tower": errors.InvalidTowerError,
    "invalid-path": errors.InvalidPathError,
    "path-not-found": errors.PathNotFoundError,
    "unknown-symbol": errors.UnknownSymbolError,
}

_LOCAL_HANDLERS = {
    "decide": api.decide,
    "tower-length": api.tower_length,
    "witness": api.witness,
    "separator": api.separator,
    "family": api.family,
    "audit": api.audit,
    "convert": api.convert,
}

R = TypeVar("R", bound=StrictModel)


class Client:
    """Dispatches a request either to the in-process handlers or to a remote service."""

    def __init__(self, server: str | None) -> None:
        self.server = server.rstrip("/") if server else None

    def call(self, endpoint: str, request: StrictModel, response_type: type[R]) -> R:
        if self.server is None:
            return _LOCAL_HANDLERS[endpoint](request)  # type: ignore[operator]
        import httpx

        response = httpx.post(
            f"{self.server}/{endpoint}",
            json=request.model_dump(by_alias=True, mode="json"),
            timeout=None,
        )
        if response.status_code != 200:
            try:
                body = response.json()
            except ValueError:
                body = {}
            code = body.get("code", "invalid-document")
            message = body.get("message", response.text)
            raise _REMOTE_CODES.get(code, errors.InvalidDocumentError)(message)
        return response_type.model_validate(response.json())


def _read_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise errors.InvalidDocumentError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except ValueError as exc:
        raise errors.InvalidDocumentError(f"{path} is not valid JSON: {exc}") from exc


def _load_automaton(path: str) -> AutomatonModel:
    try:
        return AutomatonModel.model_validate(_read_json(path))
    except ValueError as exc:
        raise errors.InvalidDocumentError(f"{path}: {exc}") from exc


def _load_tower(path: str) -> list[TowerEntryModel]:
    data = _read_json(path)
    if not isinstance(data, list):
        raise errors.InvalidDocumentError(f"{path}: a tower document must be a JSON array")
    try:
        return [TowerEntryModel.model_validate(item) for item in data]
    except ValueError as exc:
        raise errors.InvalidDocumentError(f"{path}: {exc}") from exc


def _emit(payload: object, output: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: Exception, ctx: click.Context) -> None:
    click.echo(f"error: {exc}", err=True)
    if isinstance(exc, errors.ResourceLimitError):
        ctx.exit(EXIT_RESOURCE)
    if isinstance(exc, errors.UndecidedError):
        ctx.exit(EXIT_UNDECIDED)
    if isinstance(
        exc,
        (
            errors.NotSeparableError,
            errors.InfiniteTowerError,
            errors.NoTowerError,
            errors.AmbiguousMembershipError,
        ),
    ):
        ctx.exit(EXIT_NEGATIVE)
    ctx.exit(EXIT_INPUT)


def _pair_options(command):
    command = click.option(
        "--max-levels", type=click.IntRange(min=1), default=DEFAULT_MAX_LEVELS,
        show_default=True, help="Chain level budget.",
    )(command)
    command = click.option(
        "--state-budget", type=click.IntRange(min=1), default=DEFAULT_STATE_BUDGET,
        show_default=True, help="Subset-construction state budget.",
    )(command)
    return command


def _server_option(command):
    return click.option(
        "--server", default=None, metavar="URL",
        help="Send the request to a running service instead of computing in-process.",
    )(command)


@click.group()
def main() -> None:
    """Decide piecewise-testable separability, measure towers, build separators."""


@main.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default=None, help="Write the chain report (JSON) here.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True, help="Report format.")
@_pair_options
@_server_option
@click.pass_context
def decide(ctx, first, second, output, fmt, max_levels, state_budget, server):
    """Decide separability of the two automaton files."""
    try:
        client = Client(server)
        request = PairRequest(
            first=_load_automaton(first), second=_load_automaton(second),
            max_levels=max_levels, state_budget=state_budget,
        )
        response = client.call("decide", request, DecideResponse)
        report = response.model_dump(exclude_none=True)
        if fmt == "text":
            lines = [_verdict_line(response), "", "level  first-states  second-states"]
            for level in response.levels:
                lines.append(
                    f"{level.level:>5}  {level.first_states:>12}  {level.second_states:>13}"
                )
            if response.verdict == VERDICT_SEPARABLE:
                lines += _bound_lines(client, request)
            text = "\n".join(lines) + "\n"
            if output:
                Path(output).write_text(text)
            else:
                click.echo(text, nl=False)
        else:
            click.echo(_verdict_line(response))
            if output:
                _emit(report, output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)
        return
    if response.verdict == VERDICT_INFINITE:
        ctx.exit(EXIT_NEGATIVE)
    if response.verdict == VERDICT_EXHAUSTED:
        ctx.exit(EXIT_UNDECIDED)


def _verdict_line(response: DecideResponse) -> str:
    if response.verdict == VERDICT_SEPARABLE:
        return "separable"
    if response.verdict == VERDICT_INFINITE:
        return "not separable (infinite tower)"
    return "undecided (level budget exhausted)"


def _bound_lines(client: Client, request: PairRequest) -> list[str]:
    length = client.call(
        "tower-length",
        TowerLengthRequest(**request.model_dump()),
        TowerLengthResponse,
    )
    first = request.first.to_nfa().trim()
    second = request.second.to_nfa().trim()
    states = max(len(first.states), len(second.states), 1)
    alphabet = len(set(first.alphabet) | set(second.alphabet))
    bound = upper_bound(states, alphabet)
    return [
        "",
        f"maximal tower length: {length.length}",
        f"upper bound: {bound} (states {states}, alphabet {alphabet})",
    ]


@main.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default=None, help="Write the length report (JSON) here.")
@click.option("--oracle-bound", type=click.IntRange(min=0), default=None, hidden=True,
              help="Also report the brute-force bounded-enumeration tower length.")
@_pair_options
@_server_option
@click.pass_context
def towerlen(ctx, first, second, output, oracle_bound, max_levels, state_budget, server):
    """Print the exact maximal tower length, or "infinite"."""
    try:
        client = Client(server)
        request = TowerLengthRequest(
            first=_load_automaton(first), second=_load_automaton(second),
            max_levels=max_levels, state_budget=state_budget, oracle_bound=oracle_bound,
        )
        response = client.call("tower-length", request, TowerLengthResponse)
        click.echo("infinite" if response.infinite else str(response.length))
        if response.oracle_length is not None:
            click.echo(f"oracle(bound={response.oracle_bound}): {response.oracle_length}")
        if output:
            _emit(response.model_dump(exclude_none=True), output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)


@main.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default=None, help="Write the tower (JSON array) here.")
@_pair_options
@_server_option
@click.pass_context
def witness(ctx, first, second, output, max_levels, state_budget, server):
    """Extract a maximal alternating tower between the two automaton files."""
    try:
        client = Client(server)
        request = PairRequest(
            first=_load_automaton(first), second=_load_automaton(second),
            max_levels=max_levels, state_budget=state_budget,
        )
        response = client.call("witness", request, WitnessResponse)
        _emit([entry.model_dump() for entry in response.tower], output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)


@main.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default=None, help="Write the separator result (JSON) here.")
@_pair_options
@_server_option
@click.pass_context
def separator(ctx, first, second, output, max_levels, state_budget, server):
    """Synthesize a piecewise testable separator containing the second language."""
    try:
        client = Client(server)
        request = PairRequest(
            first=_load_automaton(first), second=_load_automaton(second),
            max_levels=max_levels, state_budget=state_budget,
        )
        response = client.call("separator", request, SeparatorResponse)
        click.echo("verified" if response.verified else "verification failed")
        _emit(response.model_dump(by_alias=True), output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)
        return
    if not response.verified:
        ctx.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("kind", type=click.Choice(["quadratic", "cubic", "exponential"]))
@click.argument("parameter", type=int)
@click.option("--witness", "with_witness", is_flag=True,
              help="Also emit the witness word and its prefix tower.")
@click.option("-o", "--output", default=None, metavar="PREFIX",
              help="Write PREFIX-first.json, PREFIX-second.json (and witness/dot files).")
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json",
              show_default=True, help="Also write DOT renderings with --format dot.")
@_server_option
@click.pass_context
def family(ctx, kind, parameter, with_witness, output, fmt, server):
    """Generate one of the built-in automaton families."""
    try:
        client = Client(server)
        request = FamilyRequest(kind=kind, parameter=parameter, include_witness=with_witness)
        response = client.call("family", request, FamilyResponse)
        if output is None:
            _emit(response.model_dump(by_alias=True, exclude_none=True), None)
        else:
            _emit(response.first.model_dump(by_alias=True), f"{output}-first.json")
            _emit(response.second.model_dump(by_alias=True), f"{output}-second.json")
            if with_witness:
                _emit(
                    {
                        "word": response.witness_word,
                        "tower": [e.model_dump() for e in (response.witness_tower or [])],
                    },
                    f"{output}-witness.json",
                )
            if fmt == "dot":
                for name, model in (("first", response.first), ("second", response.second)):
                    converted = client.call(
                        "convert",
                        ConvertRequest(automaton=model, to="dot"),
                        ConvertResponse,
                    )
                    Path(f"{output}-{name}.dot").write_text(converted.dot or "")
    except errors.PtsepError as exc:
        _fail(exc, ctx)


@main.command()
@click.argument("tower", type=click.Path(exists=True, dir_okay=False))
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default=None, help="Write the audit report (JSON) here.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True, help="Report format.")
@_server_option
@click.pass_context
def audit(ctx, tower, first, second, output, fmt, server):
    """Audit factor weights along a tower and compare against the length bound."""
    try:
        client = Client(server)
        request = AuditRequest(
            tower=_load_tower(tower),
            first=_load_automaton(first),
            second=_load_automaton(second),
        )
        response = client.call("audit", request, AuditResponse)
        doc = response.model_dump(by_alias=True)
        if fmt == "text":
            text = audit_to_text(doc) + "\n"
            if output:
                Path(output).write_text(text)
            else:
                click.echo(text, nl=False)
        else:
            _emit(doc, output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)
        return
    if response.violation or not response.within_bound:
        ctx.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "target", type=click.Choice(["json", "dot"]), required=True,
              help="Output format.")
@click.option("-o", "--output", default=None, help="Write the converted automaton here.")
@_server_option
@click.pass_context
def convert(ctx, source, target, output, server):
    """Convert an automaton between the JSON document and the DOT subset."""
    try:
        client = Client(server)
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise errors.InvalidDocumentError(f"cannot read {source}: {exc}") from exc
        if text.lstrip().startswith("{"):
            request = ConvertRequest(
                automaton=AutomatonModel.model_validate(_read_json(source)), to=target
            )
        else:
            request = ConvertRequest(dot=text, to=target)
        response = client.call("convert", request, ConvertResponse)
        if target == "dot":
            if output:
                Path(output).write_text(response.dot or "")
            else:
                click.echo(response.dot or "", nl=False)
        else:
            _emit((response.automaton or AutomatonModel.model_construct()).model_dump(by_alias=True), output)
    except errors.PtsepError as exc:
        _fail(exc, ctx)
    except ValueError as exc:
        _fail(errors.InvalidDocumentError(str(exc)), ctx)


if __name__ == "__main__":
    main()
