"""HTTP service exposing the layout pipeline.

Stateless JSON API:

* ``GET  /api/health``  -> {"status": "ok"}
* ``POST /api/layout``  body {"dataset": ..., "config": ...?} -> layout document
* ``POST /api/split``   body {"document": ..., "config": ...?} -> split document

Malformed bodies give 400, infeasible configurations (crossing bound not
reachable, split budget beyond the exhaustive-search guard) give 422,
anything else 500.  Responses are produced by the same serialization as
the CLI, so identical inputs yield byte-identical documents.

If a built viewer is present (``frontend/dist`` next to the package
checkout, or ``$BISPLIT_STATIC``), it is served at the root path.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from bisplit.minimize import BudgetError, InfeasibleError
from bisplit.model import (
    DatasetError,
    OrderError,
    RunConfig,
    SplitError,
    dumps_document,
    load_dataset,
    parse_document,
)
from bisplit.pipeline import initial_layout, split_document


def _document_response(doc) -> Response:
    return Response(content=dumps_document(doc), media_type="application/json")


async def _body(request: Request) -> dict:
    try:
        body = await request.json()
    except json.JSONDecodeError as exc:
        raise DatasetError(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise DatasetError("request body must be a JSON object")
    return body


def create_app() -> FastAPI:
    app = FastAPI(title="bisplit", docs_url=None, redoc_url=None)

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse({"error": f"internal error: {exc}"}, status_code=500)

    @app.exception_handler(DatasetError)
    @app.exception_handler(OrderError)
    @app.exception_handler(SplitError)
    async def _bad_input(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.exception_handler(BudgetError)
    @app.exception_handler(InfeasibleError)
    async def _infeasible(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/layout")
    async def layout(request: Request) -> Response:
        body = await _body(request)
        if "dataset" not in body:
            raise DatasetError("body must contain a 'dataset'")
        graph = load_dataset(body["dataset"])
        config = RunConfig.from_json(body.get("config") or {})
        return _document_response(initial_layout(graph, config))

    @app.post("/api/split")
    async def split(request: Request) -> Response:
        body = await _body(request)
        if "document" not in body:
            raise DatasetError("body must contain a 'document'")
        doc = parse_document(body["document"])
        config = RunConfig.from_json(body["config"]) if body.get("config") else None
        return _document_response(split_document(doc, config))

    static_root = os.environ.get("BISPLIT_STATIC")
    candidates = (
        [Path(static_root)] if static_root
        else [Path(__file__).resolve().parents[2] / "frontend" / "dist"]
    )
    for candidate in candidates:
        if candidate.is_dir():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=candidate, html=True), name="viewer")
            break

    return app


app = create_app()


def serve(host: str = "127.0.0.1", port: int | None = None) -> None:
    """Run the service with uvicorn (blocking)."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("BISPLIT_PORT", "8000"))
    uvicorn.run(app, host=host, port=port)
