"""HTTP/JSON API for interactive play and grid inspection.

Endpoints (all JSON):

  POST /api/v1/sessions                create a session; the engine moves
                                       immediately unless humanFirst
  GET  /api/v1/sessions/{id}           session state + history
  POST /api/v1/sessions/{id}/moves     submit the human move; the engine
                                       replies in the same response
  GET  /api/v1/grid?maxWeight=W        verdict/family cells, weight <= W
  GET  /api/v1/classify?...            one-off verdict query

Anything outside /api/ serves the bundled web UI when a static
directory is configured.  Error bodies are {"code", "message"} plus a
"constraint" field when a move was rejected.  Sessions live in memory,
expire after a TTL, and each one serializes its own updates behind a
lock, so concurrent submissions cannot interleave.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
import time
from dataclasses import dataclass, field
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .closed_form import _classify_xy, classify_g1, classify_g2
from .kernel import (
    BoundFn,
    BoundSpecError,
    IllegalMoveError,
    MoveG1,
    MoveG2,
    RangeLimitError,
    TurnPosition,
    WeightedPosition,
    eval_bound,
    has_moves_g2,
    moves_g1,
    apply_g1,
    apply_g2,
)
from .strategist import NoMove, advise_g1, advise_g2

GRID_MAX_WEIGHT = 4096
SESSION_MAX_WEIGHT = 4096
SESSION_MAX_STONES = 10_000
SESSION_MAX_TURN = 10_000
DEFAULT_TTL_S = 3600.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, constraint: str | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.constraint = constraint

    def body(self) -> dict:
        payload = {"code": self.code, "message": self.message}
        if self.constraint is not None:
            payload["constraint"] = self.constraint
        return payload


@dataclass
class Session:
    id: str
    game: str
    f: BoundFn | None
    position: object
    human_first: bool
    status: str = "in-progress"
    to_move: str | None = "human"
    history: list = field(default_factory=list)
    expires_at: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)


def _position_json(game: str, pos) -> dict:
    if game == "g1":
        return {"u": pos.stones, "k": pos.turn}
    return {"x": pos.heavy, "y": pos.light}


def _require_count(payload: dict, key: str, *, optional=False) -> int | None:
    if key not in payload:
        if optional:
            return None
        raise ApiError(400, "bad_request", f"missing field {key!r}")
    value = payload[key]
    if type(value) is not int or value < 0:
        raise ApiError(400, "bad_request", f"field {key!r} must be a non-negative integer")
    return value


class SessionStore:
    """In-memory sessions with TTL eviction and per-session locking."""

    def __init__(self, ttl_s: float = DEFAULT_TTL_S, clock=time.monotonic):
        self._ttl = ttl_s
        self._clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}

    def _purge(self):
        now = self._clock()
        dead = [sid for sid, s in self._sessions.items() if s.expires_at <= now]
        for sid in dead:
            del self._sessions[sid]

    def create(self, payload: dict) -> Session:
        game = payload.get("game")
        if game not in ("g1", "g2"):
            raise ApiError(400, "bad_request", "field 'game' must be 'g1' or 'g2'")
        human_first = payload.get("humanFirst", True)
        if not isinstance(human_first, bool):
            raise ApiError(400, "bad_request", "field 'humanFirst' must be a boolean")
        if game == "g1":
            spec = payload.get("f")
            if not isinstance(spec, str):
                raise ApiError(400, "bad_request", "game 1 needs a bound function in field 'f'")
            try:
                f = BoundFn.parse(spec)
            except BoundSpecError as exc:
                raise ApiError(400, "bad_request", f"bad bound function: {exc}") from None
            u = _require_count(payload, "u")
            k = _require_count(payload, "k", optional=True)
            k = 1 if k is None else k
            if u > SESSION_MAX_STONES:
                raise ApiError(400, "out_of_range", f"u must be <= {SESSION_MAX_STONES}")
            if not 1 <= k <= SESSION_MAX_TURN:
                raise ApiError(400, "out_of_range", f"k must be in 1..{SESSION_MAX_TURN}")
            position = TurnPosition(u, k)
        else:
            f = None
            x = _require_count(payload, "x")
            y = _require_count(payload, "y")
            if 2 * x + y > SESSION_MAX_WEIGHT:
                raise ApiError(400, "out_of_range", f"total weight must be <= {SESSION_MAX_WEIGHT}")
            position = WeightedPosition(x, y)
        session = Session(
            id=secrets.token_hex(8),
            game=game,
            f=f,
            position=position,
            human_first=human_first,
            to_move="human" if human_first else "engine",
        )
        with self._lock:
            self._purge()
            session.expires_at = self._clock() + self._ttl
            self._sessions[session.id] = session
        with session.lock:
            self._advance(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "not_found", f"no session {session_id!r}")
            session.expires_at = self._clock() + self._ttl
            return session

    def submit_move(self, session_id: str, payload: dict) -> Session:
        session = self.get(session_id)
        with session.lock:
            if session.status != "in-progress":
                raise ApiError(409, "conflict", f"session is finished ({session.status})")
            if session.to_move != "human":
                raise ApiError(409, "conflict", "it is not the human's turn")
            move = self._parse_move(session.game, payload)
            try:
                if session.game == "g1":
                    nxt = apply_g1(session.position, session.f, move)
                else:
                    nxt = apply_g2(session.position, move)
            except IllegalMoveError as exc:
                raise ApiError(422, "illegal_move", str(exc), constraint=exc.constraint) from None
            self._record(session, "human", move, nxt)
            self._advance(session)
        return session

    def _parse_move(self, game: str, payload: dict):
        try:
            if game == "g1":
                take = _require_count(payload, "take")
                return MoveG1(take)
            th = _require_count(payload, "takeHeavy")
            tl = _require_count(payload, "takeLight")
            return MoveG2(th, tl)
        except (ValueError, RangeLimitError) as exc:
            raise ApiError(422, "illegal_move", str(exc), constraint=str(exc)) from None

    def _record(self, session: Session, actor: str, move, nxt):
        if session.game == "g1":
            move_payload = {"take": move.take}
        else:
            move_payload = {"takeHeavy": move.take_heavy, "takeLight": move.take_light}
        session.history.append(
            {"actor": actor, "move": move_payload, "position": _position_json(session.game, nxt)}
        )
        session.position = nxt
        session.to_move = "engine" if actor == "human" else "human"

    def _advance(self, session: Session):
        """Let the engine reply when due; settle the status when someone
        is stuck.  Caller holds the session lock."""
        while True:
            stuck = (
                session.position.stones == 0
                if session.game == "g1"
                else not has_moves_g2(session.position)
            )
            if stuck:
                session.status = "engine-won" if session.to_move == "human" else "human-won"
                session.to_move = None
                return
            if session.to_move != "engine":
                return
            advice = (
                advise_g1(session.position, session.f)
                if session.game == "g1"
                else advise_g2(session.position)
            )
            assert not isinstance(advice, NoMove)
            if session.game == "g1":
                nxt = apply_g1(session.position, session.f, advice.move)
            else:
                nxt = apply_g2(session.position, advice.move)
            self._record(session, "engine", advice.move, nxt)


def session_payload(session: Session) -> dict:
    payload = {
        "id": session.id,
        "game": session.game,
        "state": _position_json(session.game, session.position),
        "status": session.status,
        "toMove": session.to_move,
        "humanFirst": session.human_first,
        "history": session.history,
    }
    if session.game == "g1":
        payload["f"] = session.f.spec()
        k = session.position.turn
        payload["upcomingBounds"] = [eval_bound(session.f, k + d) for d in range(3)]
        if session.status == "in-progress":
            payload["legalTakes"] = len(moves_g1(session.position, session.f))
    return payload


def _grid_payload(max_weight: int) -> list[dict]:
    # same rows and field names as the table dump, built directly
    out = []
    for w in range(0, max_weight + 1):
        for x in range(0, w // 2 + 1):
            y = w - 2 * x
            verdict, tag = _classify_xy(x, y)
            out.append(
                {"x": x, "y": y, "verdict": verdict.value,
                 "family": tag.label() if tag else None}
            )
    return out


def _classify_query(params: dict) -> dict:
    game = (params.get("game") or [""])[0]
    def _int_param(name):
        raw = (params.get(name) or [None])[0]
        if raw is None:
            raise ApiError(400, "bad_request", f"missing query parameter {name!r}")
        try:
            value = int(raw)
        except ValueError:
            raise ApiError(400, "bad_request", f"parameter {name!r} must be an integer") from None
        if value < 0:
            raise ApiError(400, "bad_request", f"parameter {name!r} must be non-negative")
        return value

    if game == "g1":
        spec = (params.get("f") or [None])[0]
        if spec is None:
            raise ApiError(400, "bad_request", "missing query parameter 'f'")
        try:
            f = BoundFn.parse(spec)
        except BoundSpecError as exc:
            raise ApiError(400, "bad_request", f"bad bound function: {exc}") from None
        u = _int_param("u")
        k = _int_param("k")
        if k < 1:
            raise ApiError(400, "bad_request", "parameter 'k' must be >= 1")
        verdict, block = classify_g1(TurnPosition(u, k), f)
        return {"game": "g1", "f": f.spec(), "u": u, "k": k,
                "verdict": verdict.value, "block": block}
    if game == "g2":
        x = _int_param("x")
        y = _int_param("y")
        verdict, tag = classify_g2(WeightedPosition(x, y))
        return {"game": "g2", "x": x, "y": y, "verdict": verdict.value,
                "family": tag.label() if tag else None}
    raise ApiError(400, "bad_request", "parameter 'game' must be 'g1' or 'g2'")


_SESSION_PATH = re.compile(r"^/api/v1/sessions/([0-9a-f]+)$")
_MOVES_PATH = re.compile(r"^/api/v1/sessions/([0-9a-f]+)/moves$")


def make_handler(store: SessionStore, static_dir: str | None):
    class Handler(SimpleHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def __init__(self, *args, **kwargs):
            if static_dir is not None:
                kwargs["directory"] = static_dir
            super().__init__(*args, **kwargs)

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _write_json(self, payload, status=200, cache: str = "no-store"):
            body = json.dumps(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Cache-Control", cache)
            self.end_headers()
            self.wfile.write(body)

        def _read_json(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                raise ApiError(400, "bad_request", "empty request body")
            try:
                payload = json.loads(raw)
            except json.JSONDecodeError:
                raise ApiError(400, "bad_request", "request body is not valid JSON") from None
            if not isinstance(payload, dict):
                raise ApiError(400, "bad_request", "request body must be a JSON object")
            return payload

        def do_POST(self):
            url = urlparse(self.path)
            try:
                if url.path == "/api/v1/sessions":
                    session = store.create(self._read_json())
                    with session.lock:
                        self._write_json(session_payload(session), status=201)
                    return
                match = _MOVES_PATH.match(url.path)
                if match:
                    session = store.submit_move(match.group(1), self._read_json())
                    with session.lock:
                        self._write_json(session_payload(session))
                    return
                raise ApiError(404, "not_found", f"no such endpoint {url.path!r}")
            except ApiError as exc:
                self._write_json(exc.body(), status=exc.status)

        def do_GET(self):
            url = urlparse(self.path)
            if not url.path.startswith("/api/"):
                if static_dir is None:
                    self._write_json(
                        {"code": "not_found", "message": "no static UI configured"}, status=404
                    )
                    return
                super().do_GET()
                return
            try:
                match = _SESSION_PATH.match(url.path)
                if match:
                    session = store.get(match.group(1))
                    with session.lock:
                        self._write_json(session_payload(session))
                    return
                if url.path == "/api/v1/grid":
                    params = parse_qs(url.query)
                    raw = (params.get("maxWeight") or ["127"])[0]
                    try:
                        max_weight = int(raw)
                    except ValueError:
                        raise ApiError(400, "bad_request", "maxWeight must be an integer") from None
                    if not 0 <= max_weight <= GRID_MAX_WEIGHT:
                        raise ApiError(
                            400, "out_of_range",
                            f"maxWeight must be in 0..{GRID_MAX_WEIGHT}",
                        )
                    self._write_json(
                        _grid_payload(max_weight), cache="public, max-age=3600"
                    )
                    return
                if url.path == "/api/v1/classify":
                    self._write_json(
                        _classify_query(parse_qs(url.query)), cache="public, max-age=3600"
                    )
                    return
                raise ApiError(404, "not_found", f"no such endpoint {url.path!r}")
            except ApiError as exc:
                self._write_json(exc.body(), status=exc.status)

    return Handler


def create_server(
    host: str = "127.0.0.1",
    port: int = 0,
    store: SessionStore | None = None,
    static_dir: str | None = None,
) -> ThreadingHTTPServer:
    if store is None:
        store = SessionStore()
    server = ThreadingHTTPServer((host, port), make_handler(store, static_dir))
    server.daemon_threads = True
    return server


def _default_static_dir() -> str | None:
    import pathlib

    here = pathlib.Path(__file__).resolve()
    if len(here.parents) < 3:
        return None
    candidate = here.parents[2] / "frontend" / "dist"
    if (candidate / "index.html").is_file():
        return str(candidate)
    return None


def run(host: str = "127.0.0.1", port: int = 8080) -> int:
    server = create_server(host=host, port=port, static_dir=_default_static_dir())
    actual_port = server.server_address[1]
    print(f"serving on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
