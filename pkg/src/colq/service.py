"""JSON-over-HTTP service exposing the core operations.

Stateless endpoints are pure functions of their payload and mirror the CLI
byte for byte; sessions add an undo stack for interactive exploration.
Requests for one session are serialized through a per-session lock.
"""

from __future__ import annotations

import threading
import time
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import jsonio
from .canon import canonical_form
from .classify import classify_D
from .errors import BadSizeError, ColqError, FormatError
from .gabriel import gabriel_report, zero_part
from .mutation import mutate
from .orbit import mutation_class
from .quiver import ColouredQuiver, from_json_dict, standard_d_quiver, to_json_dict

DEFAULT_SESSION_TTL = 3600.0
DEFAULT_ENUM_CAP = 10_000
MAX_UNDO_DEPTH = 200


class Session:
    def __init__(self, quiver: ColouredQuiver, ttl: float):
        self.quiver = quiver
        self.undo_stack: list[tuple[ColouredQuiver, int]] = []
        self.lock = threading.Lock()
        self.ttl = ttl
        self.expires = time.monotonic() + ttl

    def touch(self) -> None:
        self.expires = time.monotonic() + self.ttl


class SessionStore:
    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, quiver: ColouredQuiver) -> str:
        session_id = uuid.uuid4().hex
        with self._lock:
            self._evict()
            self._sessions[session_id] = Session(quiver, self.ttl)
        return session_id

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            self._evict()
            session = self._sessions.get(session_id)
            if session:
                session.touch()
            return session

    def _evict(self) -> None:
        now = time.monotonic()
        dead = [sid for sid, s in self._sessions.items() if s.expires < now]
        for sid in dead:
            del self._sessions[sid]


def _json_response(payload: object, status: int = 200) -> Response:
    return Response(
        content=jsonio.dumps(payload),
        status_code=status,
        media_type="application/json",
    )


def _error(status: int, code: str, detail: str) -> Response:
    return _json_response({"error": code, "detail": detail}, status)


def _error_code(exc: ColqError) -> str:
    name = type(exc).__name__
    return name[:-5] if name.endswith("Error") else name


async def _read_quiver(request: Request, key: str = "quiver") -> ColouredQuiver:
    body = await request.json()
    if not isinstance(body, dict) or key not in body:
        raise FormatError(f"request body must carry a {key!r} object")
    return from_json_dict(body[key])


def create_app(
    enumeration_cap: int = DEFAULT_ENUM_CAP,
    session_ttl: float = DEFAULT_SESSION_TTL,
    undo_depth: int = MAX_UNDO_DEPTH,
) -> FastAPI:
    app = FastAPI(title="colq", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions = SessionStore(session_ttl)

    @app.exception_handler(ColqError)
    async def _domain_error(_request: Request, exc: ColqError) -> Response:
        return _error(400, _error_code(exc), str(exc))

    @app.post("/quiver/validate")
    async def validate(request: Request) -> Response:
        q = await _read_quiver(request)
        return _json_response({"ok": True, "n": q.n, "m": q.m})

    @app.post("/quiver/mutate")
    async def mutate_endpoint(request: Request) -> Response:
        body = await request.json()
        q = from_json_dict(body.get("quiver"))
        vertex = body.get("vertex")
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            return _error(400, "Format", "vertex must be an integer")
        return _json_response(to_json_dict(mutate(q, vertex)))

    @app.post("/quiver/classify")
    async def classify_endpoint(request: Request) -> Response:
        q = await _read_quiver(request)
        return _json_response(jsonio.classification_dict(classify_D(q)))

    @app.post("/quiver/zero-part")
    async def zero_part_endpoint(request: Request) -> Response:
        body = await request.json()
        q = from_json_dict(body.get("quiver"))
        zp = zero_part(q)
        payload = jsonio.zero_part_dict(zp)
        if body.get("verify"):
            payload["report"] = jsonio.gabriel_report_dict(gabriel_report(zp))
        return _json_response(payload)

    @app.post("/orbit/enumerate")
    async def enumerate_endpoint(request: Request) -> Response:
        body = await request.json()
        q = from_json_dict(body.get("quiver"))
        cap = body.get("cap", enumeration_cap)
        if not isinstance(cap, int) or cap < 1:
            return _error(400, "Format", "cap must be a positive integer")
        cap = min(cap, enumeration_cap)
        report = mutation_class(q, cap=cap)
        if report.capped:
            return _error(409, "CapExceeded", f"orbit exceeds {cap} members")
        lines = []
        for key in sorted(report.members):
            lines.append(
                jsonio.dumps(
                    {"key": key.hex(), "quiver": to_json_dict(report.reps[key])}
                )
            )
        return Response(
            content="\n".join(lines) + "\n",
            media_type="application/x-ndjson",
        )

    @app.get("/standard/d/{n}/{m}")
    async def standard_endpoint(n: int, m: int) -> Response:
        try:
            q = standard_d_quiver(n, m)
        except BadSizeError as exc:
            return _error(400, "BadSize", str(exc))
        return _json_response(to_json_dict(q))

    @app.post("/session")
    async def create_session(request: Request) -> Response:
        q = await _read_quiver(request)
        session_id = sessions.create(q)
        return _json_response({"id": session_id, "quiver": to_json_dict(q)})

    @app.post("/session/{session_id}/mutate")
    async def session_mutate(session_id: str, request: Request) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", session_id)
        body = await request.json()
        vertex = body.get("vertex")
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            return _error(400, "Format", "vertex must be an integer")
        with session.lock:
            mutated = mutate(session.quiver, vertex)
            session.undo_stack.append((session.quiver, vertex))
            del session.undo_stack[:-undo_depth]
            session.quiver = mutated
            payload = {
                "quiver": to_json_dict(mutated),
                "classification": jsonio.classification_dict(classify_D(mutated)),
                "depth": len(session.undo_stack),
            }
        return _json_response(payload)

    @app.post("/session/{session_id}/undo")
    async def session_undo(session_id: str) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", session_id)
        with session.lock:
            if not session.undo_stack:
                return _error(409, "UndoEmpty", "nothing to undo")
            previous, _vertex = session.undo_stack.pop()
            session.quiver = previous
            payload = {
                "quiver": to_json_dict(previous),
                "classification": jsonio.classification_dict(classify_D(previous)),
                "depth": len(session.undo_stack),
            }
        return _json_response(payload)

    @app.get("/session/{session_id}")
    async def session_state(session_id: str) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", session_id)
        return _json_response(
            {
                "quiver": to_json_dict(session.quiver),
                "depth": len(session.undo_stack),
                "key": canonical_form(session.quiver).hex(),
            }
        )

    return app
