"""JSON-over-HTTP solver service.

Stateless state inspection plus in-memory play sessions, versioned under
/api/v1.  All bodies and responses use lower_snake_case keys.  The built
web UI bundle (frontend/dist) is served under / when present, so one
process can host both; the API never requires it.

Listen address and port come from --addr/--port via :func:`serve` or the
environment variables ZIGGU_ADDR / ZIGGU_PORT.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import oracle, ranking, stepper
from .codes import count
from .state import (
    IllegalMoveError,
    InvalidStateError,
    Move,
    QuatString,
    apply_move,
    is_valid,
    is_ziggu,
    legal_moves,
)

__all__ = ["create_app", "serve"]

BFS_LIMIT = 12  # largest n for which geodesic hints/distances are computed
MAX_N = 64


@lru_cache(maxsize=8)
def _distances_to_solved(n: int) -> dict[str, int]:
    g = oracle.build_graph(n)
    return {str(q): d for q, d in oracle.bfs_distances(g, "3" * n).items()}


def _bfs_hint(q: QuatString) -> Move | None:
    """First move of a geodesic toward the solved state."""
    dist = _distances_to_solved(len(q))
    here = dist[str(q)]
    if here == 0:
        return None
    for move in sorted(legal_moves(q)):
        nxt = apply_move(q, move)
        if dist[str(nxt)] == here - 1:
            return move
    raise AssertionError("some neighbour must be closer to the solved state")


def build_report(n: int, digits: str) -> dict:
    """The full state report; fields are null where undefined."""
    try:
        q = QuatString(digits)
    except InvalidStateError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    if len(q) != n:
        raise HTTPException(
            status_code=400, detail=f"state {digits!r} has {len(q)} digits, expected {n}"
        )
    if not is_valid(q):
        raise HTTPException(
            status_code=404,
            detail=f"{digits!r} is not a reachable state: "
            "a digit other than 3 appears right of a 3 (validity rule)",
        )
    ziggu = is_ziggu(q)
    solved = str(q) == "3" * n
    moves = sorted(legal_moves(q), key=lambda m: (m.index, -m.delta))
    ranks = {
        "quat": ranking.rank("quat", q),
        "long": ranking.rank("long", q),
        "short": ranking.rank("short", q) if ziggu else None,
    }
    remaining = count("short", n) - 1 - ranks["short"] if ziggu else None

    hint_unavailable = False
    if solved:
        hint_shortest = None
    elif ziggu:
        step = stepper.next_state("short", q)
        hint_shortest = Move(step.index, step.delta)
    elif n <= BFS_LIMIT:
        hint_shortest = _bfs_hint(q)
    else:
        hint_shortest = None
        hint_unavailable = True

    if solved:
        hint_longest = None
    else:
        step = stepper.next_state("long", q)
        hint_longest = Move(step.index, step.delta)

    distance_bfs = None
    if n <= BFS_LIMIT:
        distance_bfs = _distances_to_solved(n)[str(q)]

    def move_json(m: Move | None):
        return None if m is None else {"index": m.index, "delta": m.delta}

    return {
        "state": str(q),
        "n": n,
        "valid": True,
        "ziggu": ziggu,
        "solved": solved,
        "ranks": ranks,
        "remaining_shortest": remaining,
        "legal_moves": [move_json(m) for m in moves],
        "hint_shortest": move_json(hint_shortest),
        "hint_longest": move_json(hint_longest),
        "hint_unavailable": hint_unavailable,
        "distance_bfs": distance_bfs,
    }


@dataclass
class Session:
    id: str
    n: int
    current: QuatString
    history: list[Move] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "current": str(self.current),
            "history": [{"index": m.index, "delta": m.delta} for m in self.history],
            "created": self.created,
            "updated": self.updated,
        }


class SessionStore:
    """In-memory sessions with an optional one-file-per-session snapshot."""

    def __init__(self, snapshot_dir: str | None = None) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._dir = Path(snapshot_dir) if snapshot_dir else None
        if self._dir:
            self._dir.mkdir(parents=True, exist_ok=True)

    def create(self, n: int) -> Session:
        session = Session(id=uuid.uuid4().hex, n=n, current=QuatString("0" * n))
        with self._lock:
            self._sessions[session.id] = session
        self.snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None and self._dir:
            session = self._load(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
        return session

    def snapshot(self, session: Session) -> None:
        if not self._dir:
            return
        path = self._dir / f"{session.id}.json"
        path.write_text(json.dumps(session.to_json()))

    def _load(self, session_id: str) -> Session | None:
        path = self._dir / f"{session_id}.json"
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        session = Session(
            id=data["id"],
            n=data["n"],
            current=QuatString(data["current"]),
            history=[Move(m["index"], m["delta"]) for m in data["history"]],
            created=data["created"],
            updated=data["updated"],
        )
        with self._lock:
            self._sessions.setdefault(session_id, session)
            return self._sessions[session_id]


class CreateSessionBody(BaseModel):
    n: int


class MoveBody(BaseModel):
    index: int
    delta: int


def create_app(session_dir: str | None = None, webui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ziggu solver service", version="1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(session_dir)
    app.state.store = store

    @app.exception_handler(HTTPException)
    async def _json_errors(request: Request, exc: HTTPException):
        return JSONResponse(status_code=exc.status_code, content={"error": exc.detail})

    def _check_n(n: int) -> None:
        if not 1 <= n <= MAX_N:
            raise HTTPException(status_code=400, detail=f"n must be 1..{MAX_N}, got {n}")

    @app.get("/api/v1/puzzle/{n}/state/{digits}")
    def state_report(n: int, digits: str) -> dict:
        _check_n(n)
        return build_report(n, digits)

    @app.post("/api/v1/session")
    def create_session(body: CreateSessionBody) -> dict:
        _check_n(body.n)
        return store.create(body.n).to_json()

    @app.get("/api/v1/session/{session_id}")
    def get_session(session_id: str) -> dict:
        return store.get(session_id).to_json()

    @app.post("/api/v1/session/{session_id}/move")
    def session_move(session_id: str, body: MoveBody) -> dict:
        session = store.get(session_id)
        with session.lock:
            move = Move(body.index, body.delta)
            try:
                session.current = apply_move(session.current, move)
            except IllegalMoveError as exc:
                raise HTTPException(
                    status_code=409,
                    detail=f"illegal move: {exc} ({exc.reason})",
                )
            session.history.append(move)
            session.updated = time.time()
            store.snapshot(session)
            return build_report(session.n, str(session.current))

    @app.post("/api/v1/session/{session_id}/undo")
    def session_undo(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            move = session.history.pop()
            session.current = apply_move(session.current, move.inverse())
            session.updated = time.time()
            store.snapshot(session)
            return build_report(session.n, str(session.current))

    webui = Path(
        webui_dir
        or os.environ.get("ZIGGU_WEBUI_DIR")
        or Path(__file__).resolve().parents[2] / "frontend" / "dist"
    )
    if webui.is_dir():
        app.mount("/", StaticFiles(directory=str(webui), html=True), name="webui")
    return app


def serve(
    addr: str | None = None,
    port: int | None = None,
    session_dir: str | None = None,
) -> None:
    """Run the service with uvicorn; flags fall back to ZIGGU_ADDR/ZIGGU_PORT."""
    import uvicorn

    addr = addr or os.environ.get("ZIGGU_ADDR", "127.0.0.1")
    port = port if port is not None else int(os.environ.get("ZIGGU_PORT", "8000"))
    uvicorn.run(create_app(session_dir=session_dir), host=addr, port=port)
