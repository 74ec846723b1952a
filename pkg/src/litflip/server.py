"""Stateless JSON API over the classifier and the witness oracle.

Every endpoint is a pure function of its request body; game state lives with
the client.  Status codes: 400 malformed request, 409 illegal move, 413
witness demanded past the oracle cap, 422 invalid graph.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .basis import build_delta, pi_system, weight_index_sets
from .classify import basis_for, classify, reachable
from .core import (
    CapExceededError,
    GraphValidationError,
    PuzzleError,
    apply_move,
    format_config,
    parse_config,
    validate_graph,
)
from .oracle import find_witness, oracle_cap


class GraphBody(BaseModel):
    n: int
    attach: list[int]


class ClassifyBody(BaseModel):
    graph: GraphBody
    config: str


class MoveBody(BaseModel):
    graph: GraphBody
    config: str
    vertex: int


class ReachBody(BaseModel):
    graph: GraphBody
    from_: str = Field(alias="from")
    to: str
    require_witness: bool = False

    model_config = {"populate_by_name": True}


def _status_for(exc: PuzzleError) -> int:
    if isinstance(exc, GraphValidationError):
        return 422
    if exc.code == "illegal_move":
        return 409
    if exc.code == "cap_exceeded":
        return 413
    return 400


def _graph_payload(g) -> dict:
    p = pi_system(g)
    b = build_delta(p)
    sets = weight_index_sets(p)
    return {
        "n": g.n,
        "attach": list(g.attach),
        "text": g.text,
        "pi": [format_config(v, g.n) for v in p.pi],
        "pi0": sorted(p.pi0),
        "pi1": sorted(p.pi1),
        "pi1_size": p.pi1_size,
        "delta_labels": list(b.labels),
        "delta": [format_config(v, g.n) for v in b.vectors],
        "I": sorted(sets.I),
        "J": sorted(sets.J) if sets.J is not None else None,
    }


def default_ui_dir() -> Path | None:
    env = os.environ.get("LITFLIP_UI_DIR")
    if env:
        return Path(env)
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_app(ui_dir: str | Path | None = None, cap: int | None = None) -> FastAPI:
    app = FastAPI(title="litflip", docs_url=None, redoc_url=None)
    witness_cap = oracle_cap() if cap is None else cap

    @app.exception_handler(PuzzleError)
    async def _puzzle_error(request: Request, exc: PuzzleError):
        return JSONResponse(
            status_code=_status_for(exc),
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def _malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "malformed_request", "message": str(exc.errors())}},
        )

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    @app.get("/api/graph")
    async def graph_info(n: int = Query(...), attach: str = Query(...)):
        try:
            points = [int(x) for x in attach.split(",") if x.strip() != ""]
        except ValueError:
            raise GraphValidationError("bad_graph_text", f"bad attach list: {attach!r}")
        g = validate_graph(n, points)
        return _graph_payload(g)

    @app.post("/api/classify")
    async def classify_config(body: ClassifyBody):
        g = validate_graph(body.graph.n, body.graph.attach)
        b = basis_for(g)
        u = parse_config(body.config, g.n)
        label = classify(b, u)
        return {
            "side": label.side,
            "weights": list(label.weights),
            "trivial": label.trivial,
            "sw": b.sw(u),
        }

    @app.post("/api/move")
    async def move(body: MoveBody):
        g = validate_graph(body.graph.n, body.graph.attach)
        u = parse_config(body.config, g.n)
        new = apply_move(g, u, body.vertex, strict=True)
        return {"config": format_config(new, g.n)}

    @app.post("/api/reach")
    async def reach(body: ReachBody):
        g = validate_graph(body.graph.n, body.graph.attach)
        u = parse_config(body.from_, g.n)
        v = parse_config(body.to, g.n)
        decision = reachable(g, u, v)
        out: dict = {"reachable": decision, "witness": None, "distance": None}
        if g.n > witness_cap:
            if body.require_witness:
                raise CapExceededError(
                    f"witness requires n <= {witness_cap}, got n={g.n}"
                )
            out["note"] = f"witness unavailable: n={g.n} exceeds the oracle cap {witness_cap}"
        elif decision:
            moves = find_witness(g, u, v, cap=witness_cap)
            out["witness"] = moves
            out["distance"] = len(moves)
        return out

    directory = Path(ui_dir) if ui_dir is not None else default_ui_dir()
    if directory is not None and directory.is_dir():
        app.mount("/", StaticFiles(directory=directory, html=True), name="ui")

    return app
