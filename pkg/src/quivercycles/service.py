"""Local HTTP API for interactive mutation sessions.

Sessions live in memory; state-changing requests on one session are
serialized under its lock in arrival order, while analysis reads work
on immutable quiver snapshots.  All weights cross the wire as decimal
strings.  Optionally the session log is mirrored to a JSON snapshot
file and replayed on startup.
"""

from __future__ import annotations

import json
import re
import threading
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional

from . import io as qio
from .errors import QuiverError, UsageError
from .factory import (
    GALLERY,
    CycleParams,
    build_gallery,
    build_theorem1,
    gallery_names,
    theorem_sequence,
)
from .quiver import Quiver, mutate
from .structure import analyze


class Session:
    """One mutation walk: initial quiver, history, and a seen-set of states."""

    def __init__(self, session_id: str, initial: Quiver):
        self.id = session_id
        self.initial = initial
        self.current = initial
        self.moves: list = []  # mutated vertices, application order
        self.states: list = [initial]  # states[j] = quiver after j moves
        self.seen = {initial}
        self.lock = threading.Lock()
        self._analysis_cache: dict = {}

    def mutate(self, vertex: int, override: bool = False) -> None:
        self.current._check_vertex(vertex)
        if self.current.is_isolated(vertex):
            raise UsageError("mutation at isolated vertex %d" % vertex)
        if self.moves and self.moves[-1] == vertex and not override:
            raise AdjacentRepeat(vertex)
        self.current = mutate(self.current, vertex)
        self.moves.append(vertex)
        self.states.append(self.current)
        self.seen.add(self.current)

    def undo(self) -> None:
        if not self.moves:
            raise UsageError("nothing to undo")
        self.moves.pop()
        self.states.pop()
        self.current = self.states[-1]
        self.seen = set(self.states)

    def adjacent_distinct(self) -> bool:
        return all(a != b for a, b in zip(self.moves, self.moves[1:]))

    def cycle_status(self) -> dict:
        closed_at = None
        revisit = None
        if self.moves and self.current == self.initial and self.adjacent_distinct():
            closed_at = len(self.moves)
        if self.moves:
            for j in range(len(self.states) - 1):
                if self.states[j] == self.current:
                    revisit = j
                    break
        return {"closed_at": closed_at, "revisit": revisit}

    def analysis_doc(self) -> dict:
        q = self.current
        cached = self._analysis_cache.get(q)
        if cached is None:
            cached = analyze(q).to_doc()
            self._analysis_cache[q] = cached
        return cached

    def state_doc(self) -> dict:
        return {
            "id": self.id,
            "n": self.current.n,
            "quiver": qio.quiver_to_doc(self.current),
            "moves": list(self.moves),
            "steps": len(self.moves),
            "cycle": self.cycle_status(),
        }

    def history_doc(self) -> dict:
        return {
            "id": self.id,
            "initial": qio.quiver_to_doc(self.initial),
            "entries": [
                {"vertex": v, "quiver": qio.quiver_to_doc(self.states[j + 1])}
                for j, v in enumerate(self.moves)
            ],
        }


class AdjacentRepeat(QuiverError):
    def __init__(self, vertex: int):
        super().__init__("mutation at %d repeats the previous step" % vertex)
        self.vertex = vertex


class SessionStore:
    def __init__(self, snapshot_path: Optional[str] = None):
        self.lock = threading.Lock()
        self.sessions: dict = {}
        self._counter = 0
        self.snapshot_path = Path(snapshot_path) if snapshot_path else None
        if self.snapshot_path and self.snapshot_path.exists():
            self._load_snapshot()

    def create(self, initial: Quiver) -> Session:
        with self.lock:
            self._counter += 1
            session = Session("s%d" % self._counter, initial)
            self.sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self.lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        return session

    def save_snapshot(self) -> None:
        if not self.snapshot_path:
            return
        with self.lock:
            doc = {
                "counter": self._counter,
                "sessions": [
                    {
                        "id": s.id,
                        "initial": qio.quiver_to_doc(s.initial),
                        "moves": list(s.moves),
                    }
                    for s in self.sessions.values()
                ],
            }
        self.snapshot_path.write_text(json.dumps(doc), encoding="utf-8")

    def _load_snapshot(self) -> None:
        doc = json.loads(self.snapshot_path.read_text(encoding="utf-8"))
        self._counter = int(doc.get("counter", 0))
        for entry in doc.get("sessions", []):
            session = Session(entry["id"], qio.quiver_from_doc(entry["initial"]))
            for v in entry.get("moves", []):
                session.mutate(int(v), override=True)
            self.sessions[session.id] = session


def _constructor_quiver(doc: dict) -> Quiver:
    family = doc.get("family", "theorem1")
    if family == "theorem1":
        n, k = int(doc.get("n", 4)), int(doc.get("k", 1))
        if "uniform" in doc:
            params = CycleParams.uniform(n, k, int(doc["uniform"]))
        else:
            q = {}
            for key, value in doc.get("q", {}).items():
                i, j = (int(t) for t in str(key).split(","))
                q[(i, j)] = int(value)
            params = CycleParams(n, k, q)
        return build_theorem1(params).base
    if family in GALLERY:
        return build_gallery(family, doc.get("params")).base
    raise UsageError("unknown constructor family %r" % family)


def gallery_doc() -> dict:
    fixtures = [
        {
            "name": "cycle8",
            "description": "4-vertex cycle of length 8, uniform weight 2",
            "builder": {"family": "theorem1", "n": 4, "k": 1, "uniform": 2},
            "length": 8,
            "sequence": list(theorem_sequence(4, 1)),
        }
    ]
    for name in gallery_names():
        fam = GALLERY[name]
        fixtures.append(
            {
                "name": fam.name,
                "description": "fixture %s on %d vertices, cycle length %d"
                % (fam.name, fam.n, fam.length),
                "builder": {"family": fam.name, "params": dict(fam.defaults)},
                "length": fam.length,
                "sequence": list(fam.steps),
            }
        )
    return {"fixtures": fixtures}


class ApiHandler(BaseHTTPRequestHandler):
    store: SessionStore = None  # set by run_server
    static_dir: Optional[Path] = None
    protocol_version = "HTTP/1.1"

    # -- plumbing ------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, status: int, doc) -> None:
        payload = json.dumps(doc).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            doc = json.loads(raw.decode("utf-8") or "{}")
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise UsageError("malformed JSON body")
        if not isinstance(doc, dict):
            raise UsageError("body must be a JSON object")
        return doc

    def _session(self, session_id: str) -> Session:
        try:
            return self.store.get(session_id)
        except KeyError:
            raise _HttpError(HTTPStatus.NOT_FOUND, "unknown session %r" % session_id)

    # -- routing ---------------------------------------------------------

    def do_GET(self):
        try:
            self._route("GET")
        except _HttpError as exc:
            self._send_json(exc.status, {"error": exc.message})
        except QuiverError as exc:
            self._send_json(HTTPStatus.UNPROCESSABLE_ENTITY, {"error": str(exc)})

    def do_POST(self):
        try:
            self._route("POST")
        except _HttpError as exc:
            self._send_json(exc.status, {"error": exc.message})
        except QuiverError as exc:
            self._send_json(HTTPStatus.UNPROCESSABLE_ENTITY, {"error": str(exc)})

    def _route(self, method: str) -> None:
        path = self.path.split("?", 1)[0]
        if method == "GET" and path == "/api/gallery":
            self._send_json(HTTPStatus.OK, gallery_doc())
            return
        if method == "POST" and path == "/api/session":
            body = self._read_json()
            if "quiver" in body:
                initial = qio.quiver_from_doc(body["quiver"])
            elif "builder" in body or "constructor" in body:
                initial = _constructor_quiver(
                    body.get("builder", body.get("constructor"))
                )
            else:
                raise UsageError('need "quiver" or "builder"')
            session = self.store.create(initial)
            self.store.save_snapshot()
            self._send_json(HTTPStatus.CREATED, session.state_doc())
            return
        match = re.fullmatch(r"/api/session/([^/]+)(/(mutate|undo|history|analysis|cycle))?", path)
        if match:
            session = self._session(match.group(1))
            action = match.group(3)
            if method == "POST" and action == "mutate":
                body = self._read_json()
                if "vertex" not in body:
                    raise UsageError('need a "vertex" field')
                with session.lock:
                    try:
                        session.mutate(int(body["vertex"]), bool(body.get("override", False)))
                    except AdjacentRepeat as exc:
                        raise _HttpError(HTTPStatus.CONFLICT, str(exc))
                    doc = session.state_doc()
                self.store.save_snapshot()
                self._send_json(HTTPStatus.OK, doc)
                return
            if method == "POST" and action == "undo":
                self._read_json()  # drain the body so keep-alive stays in sync
                with session.lock:
                    try:
                        session.undo()
                    except UsageError as exc:
                        raise _HttpError(HTTPStatus.CONFLICT, str(exc))
                    doc = session.state_doc()
                self.store.save_snapshot()
                self._send_json(HTTPStatus.OK, doc)
                return
            if method == "GET" and action == "history":
                with session.lock:
                    doc = session.history_doc()
                self._send_json(HTTPStatus.OK, doc)
                return
            if method == "GET" and action == "analysis":
                with session.lock:
                    doc = session.analysis_doc()
                self._send_json(HTTPStatus.OK, doc)
                return
            if method == "GET" and action == "cycle":
                with session.lock:
                    doc = session.cycle_status()
                self._send_json(HTTPStatus.OK, doc)
                return
            if method == "GET" and action is None:
                with session.lock:
                    doc = session.state_doc()
                self._send_json(HTTPStatus.OK, doc)
                return
        if method == "GET" and self.static_dir:
            self._serve_static(path)
            return
        raise _HttpError(HTTPStatus.NOT_FOUND, "no route for %s %s" % (method, path))

    def _serve_static(self, path: str) -> None:
        rel = path.lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        if not str(target).startswith(str(self.static_dir.resolve())) or not target.is_file():
            raise _HttpError(HTTPStatus.NOT_FOUND, "no such file %s" % path)
        payload = target.read_bytes()
        ctype = {
            ".html": "text/html",
            ".js": "text/javascript",
            ".css": "text/css",
            ".json": "application/json",
            ".svg": "image/svg+xml",
        }.get(target.suffix, "application/octet-stream")
        self.send_response(HTTPStatus.OK)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)


class _HttpError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def make_server(
    bind: str = "127.0.0.1",
    port: int = 8077,
    static_dir: Optional[str] = None,
    snapshot_path: Optional[str] = None,
) -> ThreadingHTTPServer:
    handler = type(
        "BoundApiHandler",
        (ApiHandler,),
        {
            "store": SessionStore(snapshot_path),
            "static_dir": Path(static_dir) if static_dir else None,
        },
    )
    return ThreadingHTTPServer((bind, port), handler)


def run_server(
    bind: str = "127.0.0.1",
    port: int = 8077,
    static_dir: Optional[str] = None,
    snapshot_path: Optional[str] = None,
) -> None:
    server = make_server(bind, port, static_dir, snapshot_path)
    print(
        json.dumps({"serving": "http://%s:%d" % (bind, server.server_address[1])}),
        flush=True,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
