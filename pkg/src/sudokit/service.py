"""HTTP facade: solve sessions whose trace events stream back as JSON lines,
plus validation, generation, and the model board. Presentation pacing lives
here so the solver core stays synchronous."""

from __future__ import annotations

import asyncio
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import StreamingResponse
from pydantic import BaseModel, Field

from .grid import (
    GridError,
    format_grid,
    format_grid_inline,
    parse_grid,
    validate_grid,
)
from .model import model_board
from .oracle import Band, GenerationExhaustedError, generate_puzzle
from .solver import (
    SolverConfig,
    SolverState,
    Status,
    event_to_json,
    iter_events,
    new_session,
)

DEFAULT_SESSION_TTL_S = 900.0
# when unpaced, yield to the event loop every this many ticks
_UNPACED_YIELD_EVERY = 256


class SolveRequest(BaseModel):
    grid: str
    seed: int
    paceMs: int = Field(0, ge=0)
    stallFactor: int = Field(SolverConfig().stall_factor, gt=0)
    maxAttempts: int = Field(SolverConfig().attempts_cap, gt=0)


class ValidateRequest(BaseModel):
    grid: str


@dataclass
class Session:
    id: str
    state: SolverState
    pace_ms: int
    created_at: float
    streamed: bool = field(default=False)

    @property
    def terminal(self) -> bool:
        return self.state.status in (Status.SOLVED, Status.EXHAUSTED)


def _parse_or_400(text: str):
    try:
        return parse_grid(text)
    except GridError as exc:
        raise HTTPException(status_code=400, detail={
            "error": type(exc).__name__.removesuffix("Error"),
            "message": str(exc),
        })


def _grid_payload(g) -> dict:
    return {"grid": format_grid_inline(g), "rows": format_grid(g).splitlines()}


def create_app(*, ui_dir: str | Path | None = None,
               session_ttl_s: float = DEFAULT_SESSION_TTL_S) -> FastAPI:
    app = FastAPI(title="sudokit service")
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])
    sessions: dict[str, Session] = {}

    def prune(now: float) -> None:
        for sid in [s for s, sess in sessions.items()
                    if now - sess.created_at > session_ttl_s]:
            del sessions[sid]

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/solve")
    def solve(req: SolveRequest) -> dict:
        now = time.monotonic()
        prune(now)
        grid = _parse_or_400(req.grid)
        config = SolverConfig(seed=req.seed, attempts_cap=req.maxAttempts,
                              stall_factor=req.stallFactor)
        session = Session(uuid.uuid4().hex, new_session(grid, config), req.paceMs, now)
        sessions[session.id] = session
        return {"sessionId": session.id}

    @app.get("/api/sessions/{session_id}/events")
    def events(session_id: str) -> StreamingResponse:
        prune(time.monotonic())
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        if session.streamed or session.terminal:
            raise HTTPException(status_code=409, detail="session already terminal")
        session.streamed = True

        async def stream():
            ticks = 0
            for tick_events in iter_events(session.state):
                yield "".join(event_to_json(e) + "\n" for e in tick_events)
                ticks += 1
                if session.pace_ms:
                    await asyncio.sleep(session.pace_ms / 1000)
                elif ticks % _UNPACED_YIELD_EVERY == 0:
                    await asyncio.sleep(0)

        return StreamingResponse(stream(), media_type="application/x-ndjson")

    @app.post("/api/validate")
    def validate(req: ValidateRequest) -> dict:
        grid = _parse_or_400(req.grid)
        return {"conflicts": [{"formation": c.formation_index, "digit": c.digit}
                              for c in validate_grid(grid)]}

    @app.get("/api/model")
    def model() -> dict:
        return _grid_payload(model_board())

    @app.get("/api/generate")
    def generate(band: str, seed: int = 0) -> dict:
        try:
            parsed_band = Band(band)
        except ValueError:
            raise HTTPException(status_code=400, detail=f"unknown band {band!r}")
        if parsed_band is Band.OTHER:
            raise HTTPException(status_code=400, detail="cannot generate for band Other")
        try:
            puzzle = generate_puzzle(parsed_band, seed)
        except GenerationExhaustedError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        payload = _grid_payload(puzzle)
        payload.update(band=parsed_band.value,
                       givens=sum(1 for d in puzzle.digits if d))
        return payload

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
