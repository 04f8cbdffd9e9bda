"""HTTP annotation service.

A small JSON API over one corpus file so the browser UI can load
dialogues, add and remove edges, and save. Endpoints:

  GET    /api/taxonomy                 tag vocabulary dump
  GET    /api/dialogues                listing: id, unit count, revision
  GET    /api/dialogues/{id}           full dialogue + threads + diagnostics
  POST   /api/dialogues/{id}/edges     body {source, target, labels, expected_revision}
  DELETE /api/dialogues/{id}/edges     body {source, target, label?, expected_revision}
  POST   /api/dialogues/{id}/save      persist the whole corpus atomically
  GET    /api/dialogues/{id}/stats     analytics report for one dialogue

Mutations use optimistic concurrency: the client sends the revision it
last saw, and a mismatch gets 409 with the current revision so the UI
can reload instead of clobbering. Domain rejections (forward edge,
unknown tag, missing edge) come back as 422 with the error code; 404
covers unknown dialogues and routes. Mutations on one dialogue are
serialized behind a per-dialogue lock; reads see consistent snapshots
because dialogues are immutable values.

Saving rewrites the corpus file through a temp-file-plus-rename so a
failed write never leaves a truncated corpus behind. No authentication;
binds to loopback by default.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import DdaError, RevisionConflict, SchemaViolation
from .formats import Corpus, dialogue_to_obj, load_corpus, serialize_corpus
from .formats import _parse_label as _parse_label_obj
from .graph import Dialogue, add_edge, remove_edge, validate
from .ops import Thread, UnionFind, dialogue_report
from .taxonomy import parse_tag, taxonomy_dump

DEFAULT_PORT = 7878


def _write_atomic(path: str, data: bytes) -> None:
    """Write the file so that readers see either the old or the new bytes."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".dda-save-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def _parse_labels(raw) -> tuple:
    """Accept labels as tag-name strings or corpus-schema label objects."""
    if not isinstance(raw, list):
        raise SchemaViolation("labels", "expected a list")
    labels = []
    for i, item in enumerate(raw):
        if isinstance(item, str):
            labels.append(parse_tag(item))
        else:
            labels.append(_parse_label_obj(item, f"labels[{i}]"))
    return tuple(labels)


class _DialogueState:
    """One dialogue's working copy plus its revision and thread index."""

    def __init__(self, dialogue: Dialogue):
        self.dialogue = dialogue
        self.revision = 0
        self.lock = threading.Lock()
        self._rebuild_components()

    def _rebuild_components(self) -> None:
        self._uf = UnionFind(u.id for u in self.dialogue.units)
        ids = self.dialogue.unit_ids()
        for e in self.dialogue.edges:
            if not e.is_self and e.source in ids and e.target in ids:
                self._uf.union(e.source, e.target)

    def threads(self) -> tuple[Thread, ...]:
        components = sorted((sorted(g) for g in self._uf.groups()), key=lambda g: g[0])
        return tuple(Thread(i, g[0], tuple(g)) for i, g in enumerate(components))

    def apply_add(self, source: int, target: int, labels: tuple) -> None:
        self.dialogue = add_edge(self.dialogue, source, target, labels)
        if source != target:
            # incremental: a new backward edge can only merge components
            self._uf.union(source, target)
        self.revision += 1

    def apply_remove(self, source: int, target: int, label) -> None:
        self.dialogue = remove_edge(self.dialogue, source, target, label)
        # removal can split a component; recompute from scratch
        self._rebuild_components()
        self.revision += 1


class Session:
    """The served corpus: per-dialogue working copies, revisions, and locks."""

    def __init__(self, corpus_path: str):
        self.corpus_path = str(corpus_path)
        corpus = load_corpus(self.corpus_path)
        self.version = corpus.version
        self.metadata = dict(corpus.metadata)
        self._order = [d.id for d in corpus.dialogues]
        self._states = {d.id: _DialogueState(d) for d in corpus.dialogues}
        self._save_lock = threading.Lock()

    def ids(self) -> list[str]:
        return list(self._order)

    def state(self, dialogue_id: str) -> _DialogueState | None:
        return self._states.get(dialogue_id)

    def snapshot_corpus(self) -> Corpus:
        return Corpus(
            self.version,
            dict(self.metadata),
            tuple(self._states[i].dialogue for i in self._order),
        )

    def save(self) -> None:
        # hold the save lock so concurrent saves serialize; per-dialogue
        # snapshots are immutable values, so reading them is safe
        with self._save_lock:
            data = serialize_corpus(self.snapshot_corpus())
            _write_atomic(self.corpus_path, data)


def _dialogue_body(state: _DialogueState) -> dict:
    d = state.dialogue
    body = dialogue_to_obj(d)
    body["revision"] = state.revision
    body["threads"] = [
        {"id": t.id, "root": t.root, "unit_ids": list(t.unit_ids)}
        for t in state.threads()
    ]
    body["diagnostics"] = [
        {
            "severity": diag.severity,
            "code": diag.code,
            "dialogue_id": diag.dialogue_id,
            "unit_id": diag.unit_id,
            "message": diag.message,
        }
        for diag in validate(d, completeness=True)
    ]
    return body


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    session: Session  # set by create_server on the subclass

    # quiet: request logging would interleave with test and CLI output
    def log_message(self, format, *args):
        pass

    def _send_json(self, status: int, payload) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _error(self, status: int, code: str, detail: str, **extra) -> None:
        self._send_json(status, {"error": code, "detail": detail, **extra})

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            return None
        return body if isinstance(body, dict) else None

    def _route(self):
        path = self.path.split("?", 1)[0].rstrip("/")
        parts = [p for p in path.split("/") if p]
        if not parts or parts[0] != "api":
            return None
        return parts[1:]

    def do_OPTIONS(self):
        self.send_response(204)
        self._send_cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        route = self._route()
        if route == ["taxonomy"]:
            return self._send_json(200, taxonomy_dump())
        if route == ["dialogues"]:
            listing = []
            for did in self.session.ids():
                state = self.session.state(did)
                with state.lock:
                    listing.append(
                        {
                            "id": did,
                            "n_units": len(state.dialogue.units),
                            "revision": state.revision,
                        }
                    )
            return self._send_json(200, {"dialogues": listing})
        if route and route[0] == "dialogues" and len(route) == 2:
            state = self.session.state(route[1])
            if state is None:
                return self._error(404, "NoSuchDialogue", f"no dialogue {route[1]!r}")
            with state.lock:
                return self._send_json(200, _dialogue_body(state))
        if route and route[0] == "dialogues" and len(route) == 3 and route[2] == "stats":
            state = self.session.state(route[1])
            if state is None:
                return self._error(404, "NoSuchDialogue", f"no dialogue {route[1]!r}")
            with state.lock:
                return self._send_json(200, dialogue_report(state.dialogue))
        return self._error(404, "NotFound", f"no route {self.path!r}")

    def _mutation_target(self):
        route = self._route()
        if not (route and route[0] == "dialogues" and len(route) == 3):
            self._error(404, "NotFound", f"no route {self.path!r}")
            return None, None
        state = self.session.state(route[1])
        if state is None:
            self._error(404, "NoSuchDialogue", f"no dialogue {route[1]!r}")
            return None, None
        return state, route[2]

    def _check_revision(self, state: _DialogueState, body: dict) -> bool:
        expected = body.get("expected_revision")
        if not isinstance(expected, int) or isinstance(expected, bool):
            self._error(422, "SchemaViolation", "expected_revision must be an integer")
            return False
        if expected != state.revision:
            self._error(
                409,
                RevisionConflict(expected, state.revision).code,
                f"revision is {state.revision}, not {expected}",
                current_revision=state.revision,
            )
            return False
        return True

    def do_POST(self):
        state, action = self._mutation_target()
        if state is None:
            return
        body = self._read_body()
        if body is None:
            return self._error(400, "MalformedInput", "body must be a JSON object")

        if action == "save":
            with state.lock:
                pass  # barrier: no mutation of this dialogue is mid-flight
            for did in self.session.ids():
                other = self.session.state(did)
                bad = [x for x in validate(other.dialogue) if x.severity == "error"]
                if bad:
                    return self._error(
                        422, "ValidationFailed", f"dialogue {did!r}: {bad[0].message}"
                    )
            try:
                self.session.save()
            except OSError as exc:
                return self._error(500, "SaveFailed", str(exc))
            return self._send_json(
                200, {"saved": True, "path": self.session.corpus_path}
            )

        if action != "edges":
            return self._error(404, "NotFound", f"no route {self.path!r}")
        with state.lock:
            if not self._check_revision(state, body):
                return
            try:
                source = body["source"]
                target = body["target"]
                labels = _parse_labels(body.get("labels", []))
                for value in (source, target):
                    if not isinstance(value, int) or isinstance(value, bool):
                        raise SchemaViolation("source", "source and target must be integers")
                state.apply_add(source, target, labels)
            except KeyError as exc:
                return self._error(422, "SchemaViolation", f"missing field {exc}")
            except DdaError as exc:
                return self._error(422, exc.code, str(exc))
            except ValueError as exc:
                return self._error(422, "SchemaViolation", str(exc))
            return self._send_json(200, _dialogue_body(state))

    def do_DELETE(self):
        state, action = self._mutation_target()
        if state is None:
            return
        if action != "edges":
            return self._error(404, "NotFound", f"no route {self.path!r}")
        body = self._read_body()
        if body is None:
            return self._error(400, "MalformedInput", "body must be a JSON object")
        with state.lock:
            if not self._check_revision(state, body):
                return
            try:
                source = body["source"]
                target = body["target"]
                label = None
                if body.get("label") is not None:
                    (label,) = _parse_labels([body["label"]])
                for value in (source, target):
                    if not isinstance(value, int) or isinstance(value, bool):
                        raise SchemaViolation("source", "source and target must be integers")
                state.apply_remove(source, target, label)
            except KeyError as exc:
                return self._error(422, "SchemaViolation", f"missing field {exc}")
            except DdaError as exc:
                return self._error(422, exc.code, str(exc))
            except ValueError as exc:
                return self._error(422, "SchemaViolation", str(exc))
            return self._send_json(200, _dialogue_body(state))


def create_server(
    corpus_path: str, host: str = "127.0.0.1", port: int = DEFAULT_PORT
) -> ThreadingHTTPServer:
    """Build the HTTP server (without starting it) for the given corpus file."""
    session = Session(corpus_path)
    handler = type("BoundHandler", (_Handler,), {"session": session})
    server = ThreadingHTTPServer((host, port), handler)
    server.session = session  # exposed for tests and callers
    return server
