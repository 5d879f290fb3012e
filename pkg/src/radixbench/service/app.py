"""HTTP front end over the handlers.

Bad request bodies map to 422 (pydantic), bad configurations that pass
schema validation map to 400, unknown table ids map to 404.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .handlers import (
    handle_compare,
    handle_cost,
    handle_counts,
    handle_health,
    handle_table,
    handle_verify,
)
from .schemas import (
    CompareRequest,
    CompareResponse,
    CostRequest,
    CostResponse,
    CountsRequest,
    CountsResponse,
    HealthResponse,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

__all__ = ["create_app", "app"]


def create_app() -> FastAPI:
    api = FastAPI(title="radixbench", version=handle_health().version)

    @api.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return handle_health()

    @api.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            return handle_verify(req)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @api.post("/counts", response_model=CountsResponse)
    def counts(req: CountsRequest) -> CountsResponse:
        try:
            return handle_counts(req)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @api.post("/cost", response_model=CostResponse)
    def cost(req: CostRequest) -> CostResponse:
        try:
            return handle_cost(req)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @api.post("/compare", response_model=CompareResponse)
    def compare(req: CompareRequest) -> CompareResponse:
        try:
            return handle_compare(req)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @api.get("/tables/{table_id}", response_model=TableResponse)
    def table(table_id: str) -> TableResponse:
        try:
            return handle_table(table_id)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc

    return api


app = create_app()
