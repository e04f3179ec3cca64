"""FastAPI application exposing the package's operations as a stateless service.

Run it with ``uvicorn ptsep.service.app:app``.  Domain errors map to JSON
error bodies ``{"code": ..., "message": ...}``:

* 400 — invalid input (bad documents, bad parameters, malformed towers)
* 409 — the mathematics refused: not separable, or the level budget ran out
* 413 — a state or enumeration budget was exceeded
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import errors
from . import api
from .models import (
    AuditRequest,
    AuditResponse,
    ConvertRequest,
    ConvertResponse,
    DecideResponse,
    FamilyRequest,
    FamilyResponse,
    PairRequest,
    SeparatorResponse,
    TowerLengthRequest,
    TowerLengthResponse,
    WitnessResponse,
)

_ERROR_STATUS: list[tuple[type[Exception], int, str]] = [
    (errors.ResourceLimitError, 413, "resource-limit"),
    (errors.UndecidedError, 409, "undecided"),
    (errors.NotSeparableError, 409, "not-separable"),
    (errors.InfiniteTowerError, 409, "infinite-tower"),
    (errors.NoTowerError, 409, "no-tower"),
    (errors.AmbiguousMembershipError, 409, "ambiguous-membership"),
    (errors.NotUpwardClosedError, 400, "not-upward-closed"),
    (errors.InvalidDocumentError, 400, "invalid-document"),
    (errors.InvalidParameterError, 400, "invalid-parameter"),
    (errors.InvalidTowerError, 400, "invalid-tower"),
    (errors.InvalidPathError, 400, "invalid-path"),
    (errors.PathNotFoundError, 400, "path-not-found"),
    (errors.UnknownSymbolError, 400, "unknown-symbol"),
]


def create_app() -> FastAPI:
    app = FastAPI(
        title="ptsep",
        description="Piecewise-testable separability, alternating-tower lengths, and separators for NFA-given regular languages.",
        version="0.1.0",
    )

    @app.exception_handler(errors.PtsepError)
    async def domain_error(request: Request, exc: errors.PtsepError) -> JSONResponse:
        for kind, status, code in _ERROR_STATUS:
            if isinstance(exc, kind):
                return JSONResponse(
                    status_code=status,
                    content={"code": code, "message": str(exc)},
                )
        return JSONResponse(
            status_code=400, content={"code": "invalid-input", "message": str(exc)}
        )

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/decide", response_model=DecideResponse)
    async def decide(request: PairRequest) -> DecideResponse:
        return api.decide(request)

    @app.post("/tower-length", response_model=TowerLengthResponse)
    async def tower_length(request: TowerLengthRequest) -> TowerLengthResponse:
        return api.tower_length(request)

    @app.post("/witness", response_model=WitnessResponse)
    async def witness(request: PairRequest) -> WitnessResponse:
        return api.witness(request)

    @app.post("/separator", response_model=SeparatorResponse)
    async def separator(request: PairRequest) -> SeparatorResponse:
        return api.separator(request)

    @app.post("/family", response_model=FamilyResponse)
    async def family(request: FamilyRequest) -> FamilyResponse:
        return api.family(request)

    @app.post("/audit", response_model=AuditResponse)
    async def audit(request: AuditRequest) -> AuditResponse:
        return api.audit(request)

    @app.post("/convert", response_model=ConvertResponse)
    async def convert(request: ConvertRequest) -> ConvertResponse:
        return api.convert(request)

    return app


app = create_app()
