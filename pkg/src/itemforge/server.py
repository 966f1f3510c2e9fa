"""HTTP service exposing evaluation sessions to the rater web interface.

Round-1 blindness is enforced at the API boundary: a rater's requests only
ever return that rater's own ratings. Round-2 queue entries carry the
anonymous consensus value ("the other two raters agree on X"), never rater
identities. All mutating requests for a session are serialized through a
per-session lock and persisted atomically before the response is sent.
"""

from __future__ import annotations

import fcntl
import json
import threading
from dataclasses import dataclass
from pathlib import Path

from fastapi import Depends, FastAPI, Header, HTTPException, Query, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import agreestats, evalflow, gateway, taxonomy
from .corpus import ItemBank, load_bank
from .evalflow import Criterion, EvaluationSession, RatingRecord, SessionState
from .taxonomy import AnnotationLabel

SCHEMA_VERSION = 1
ITEMS_PAGE_SIZE = 20


class ServerStartupError(Exception):
    pass


@dataclass(frozen=True)
class RaterIdentity:
    rater_id: str
    admin: bool = False


class SessionStore:
    """File-backed session store with per-session write serialization.

    Holds an exclusive advisory lock on every session directory it serves,
    so a concurrently running CLI cannot race the server's writes.
    """

    def __init__(self, session_dir: Path):
        self.session_dir = Path(session_dir)
        self._sessions: dict[str, EvaluationSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._file_locks: dict[str, object] = {}
        if not self.session_dir.is_dir():
            raise ServerStartupError(f"session directory not found: {self.session_dir}")
        for session_file in sorted(self.session_dir.glob("*/session.json")):
            try:
                session = evalflow.load_session(session_file)
            except evalflow.EvalError as exc:
                raise ServerStartupError(f"refusing to serve: {exc}") from exc
            self._register(session)

    def _register(self, session: EvaluationSession) -> None:
        self._sessions[session.session_id] = session
        self._locks[session.session_id] = threading.Lock()
        lock_path = self.session_dir / session.session_id / ".lock"
        handle = open(lock_path, "w")
        try:
            fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except BlockingIOError as exc:
            raise ServerStartupError(f"session {session.session_id!r} is locked by another process") from exc
        self._file_locks[session.session_id] = handle

    def close(self) -> None:
        for handle in self._file_locks.values():
            try:
                fcntl.flock(handle, fcntl.LOCK_UN)
                handle.close()
            except OSError:
                pass
        self._file_locks.clear()

    def ids(self) -> list[str]:
        return sorted(self._sessions)

    def get(self, session_id: str) -> EvaluationSession:
        if session_id not in self._sessions:
            raise HTTPException(status_code=404, detail=f"no session {session_id!r}")
        return self._sessions[session_id]

    def lock(self, session_id: str) -> threading.Lock:
        return self._locks[session_id]

    def persist(self, session: EvaluationSession) -> None:
        evalflow.save_session(session, self.session_dir, lock=False)


def load_tokens(tokens_file: Path) -> dict[str, RaterIdentity]:
    if not Path(tokens_file).is_file():
        raise ServerStartupError(f"tokens file not found: {tokens_file}")
    try:
        doc = json.loads(Path(tokens_file).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ServerStartupError(f"tokens file {tokens_file} is not valid JSON: {exc}") from exc
    tokens = {}
    for token, entry in doc.items():
        tokens[token] = RaterIdentity(rater_id=entry["rater_id"], admin=bool(entry.get("admin", False)))
    return tokens


def _error_status(exc: evalflow.EvalError) -> int:
    if isinstance(
        exc,
        (evalflow.ClosedRoundError, evalflow.NotQueuedError, evalflow.RoundNotReadyError, evalflow.IncompleteQueueError),
    ):
        return 409
    return 422


def create_app(
    session_dir: Path,
    tokens_file: Path,
    bank_path: Path | None = None,
    runs_dir: Path | None = None,
    static_dir: Path | None = None,
) -> FastAPI:
    store = SessionStore(Path(session_dir))
    tokens = load_tokens(Path(tokens_file))
    bank: ItemBank | None = load_bank(bank_path) if bank_path else None
    runs = gateway.load_runs(runs_dir) if runs_dir else None

    app = FastAPI(title="itemforge rating service")
    app.state.store = store

    def authenticate(authorization: str = Header(default="")) -> RaterIdentity:
        if not authorization.startswith("Bearer "):
            raise HTTPException(status_code=401, detail="missing bearer token")
        token = authorization.removeprefix("Bearer ").strip()
        if token not in tokens:
            raise HTTPException(status_code=401, detail="unknown token")
        return tokens[token]

    @app.exception_handler(evalflow.EvalError)
    async def eval_error_handler(request: Request, exc: evalflow.EvalError) -> JSONResponse:
        return JSONResponse(
            status_code=_error_status(exc),
            content={"schema_version": SCHEMA_VERSION, "error": str(exc)},
        )

    @app.get("/api/sessions")
    def list_sessions(identity: RaterIdentity = Depends(authenticate)) -> dict:
        return {"schema_version": SCHEMA_VERSION, "sessions": store.ids()}

    @app.get("/api/handbook")
    def handbook(identity: RaterIdentity = Depends(authenticate)) -> dict:
        labels = {}
        for label in AnnotationLabel:
            descriptor = taxonomy.type_definition(label)
            labels[label.value] = {
                "name": descriptor.name,
                "definition": descriptor.definition,
                "example": descriptor.example,
            }
        return {
            "schema_version": SCHEMA_VERSION,
            "rubric_markdown": taxonomy.rubric_text(),
            "labels": labels,
            "evaluation_labels": [l.value for l in evalflow.EVALUATION_LABELS],
        }

    def own_ratings(session: EvaluationSession, rater_id: str) -> dict:
        return {
            "round1": [r.to_json() for r in session.round1.values() if r.rater_id == rater_id],
            "round2": [r.to_json() for r in session.round2.values() if r.rater_id == rater_id],
        }

    def progress_for(session: EvaluationSession, rater_id: str) -> dict:
        progress: dict[str, dict[str, int]] = {}
        for criterion in Criterion:
            applicable = [s for s in session.items if criterion in session.applicable_criteria(s)]
            done = sum(
                1 for s in applicable if (s.item_id, rater_id, criterion.value) in session.round1
            )
            progress[criterion.value] = {"done": done, "total": len(applicable)}
        return progress

    @app.get("/api/session/{session_id}")
    def session_view(session_id: str, identity: RaterIdentity = Depends(authenticate)) -> dict:
        session = store.get(session_id)
        if identity.rater_id not in session.rater_ids and not identity.admin:
            raise HTTPException(status_code=403, detail=f"rater {identity.rater_id!r} is not part of this session")
        queue_size = 0
        if session.state is not SessionState.ROUND1_OPEN:
            queue_size = len(session.queues.get(identity.rater_id, []))
        return {
            "schema_version": SCHEMA_VERSION,
            "session_id": session.session_id,
            "state": session.state.value,
            "rater_id": identity.rater_id,
            "raters": list(session.rater_ids),
            "items_total": len(session.items),
            "progress": progress_for(session, identity.rater_id),
            "own_ratings": own_ratings(session, identity.rater_id),
            "queue_size": queue_size,
            "finalized": session.state is SessionState.FINALIZED,
        }

    @app.get("/api/session/{session_id}/items")
    def session_items(
        session_id: str,
        cursor: int = Query(default=0, ge=0),
        identity: RaterIdentity = Depends(authenticate),
    ) -> dict:
        session = store.get(session_id)
        page = session.items[cursor : cursor + ITEMS_PAGE_SIZE]
        payload = []
        for snapshot in page:
            entry: dict = {
                "item_id": snapshot.item_id,
                "passage_id": snapshot.passage_id,
                "target_type": snapshot.target_type.value,
                "reasoning_applicable": snapshot.reasoning_applicable,
            }
            if bank is not None:
                item = next((i for i in bank.items if i.id == snapshot.item_id), None)
                if item is not None:
                    entry.update(
                        {
                            "stem": item.stem,
                            "options": list(item.options),
                            "key": item.key,
                            "text_hint": item.text_hint,
                            "reasoning": item.reasoning,
                        }
                    )
                    passage = bank.passage(item.passage_id)
                    entry["passage"] = {"id": passage.id, "title": passage.title, "body": passage.body}
            payload.append(entry)
        next_cursor = cursor + ITEMS_PAGE_SIZE if cursor + ITEMS_PAGE_SIZE < len(session.items) else None
        return {
            "schema_version": SCHEMA_VERSION,
            "items": payload,
            "cursor": cursor,
            "next_cursor": next_cursor,
            "items_total": len(session.items),
        }

    @app.post("/api/session/{session_id}/ratings")
    def submit_rating(session_id: str, body: dict, identity: RaterIdentity = Depends(authenticate)) -> dict:
        session = store.get(session_id)
        if body.get("rater_id") not in (None, identity.rater_id):
            raise HTTPException(status_code=403, detail="cannot submit ratings for another rater")
        default_round = 1 if session.state is SessionState.ROUND1_OPEN else 2
        try:
            record = RatingRecord(
                item_id=body["item_id"],
                rater_id=identity.rater_id,
                criterion=Criterion(body["criterion"]),
                verdict=int(body["verdict"]),
                observed_type=AnnotationLabel(body["observed_type"]) if body.get("observed_type") else None,
                note=body.get("note"),
                round=int(body.get("round", default_round)),
            )
        except (KeyError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=f"invalid rating payload: {exc}") from exc
        with store.lock(session_id):
            evalflow.submit_rating(session, record)
            store.persist(session)
        return {"schema_version": SCHEMA_VERSION, "stored": record.to_json()}

    @app.get("/api/session/{session_id}/queue")
    def queue(session_id: str, identity: RaterIdentity = Depends(authenticate)) -> dict:
        session = store.get(session_id)
        if session.state is SessionState.ROUND1_OPEN:
            return {"schema_version": SCHEMA_VERSION, "state": session.state.value, "entries": []}
        entries = session.queues.get(identity.rater_id, [])
        done = {
            (entry.item_id, entry.criterion.value): (entry.item_id, identity.rater_id, entry.criterion.value)
            in session.round2
            for entry in entries
        }
        return {
            "schema_version": SCHEMA_VERSION,
            "state": session.state.value,
            "entries": [
                {**entry.to_json(), "resolved": done[(entry.item_id, entry.criterion.value)]} for entry in entries
            ],
        }

    @app.post("/api/session/{session_id}/advance")
    def advance(session_id: str, body: dict, identity: RaterIdentity = Depends(authenticate)) -> dict:
        if not identity.admin:
            raise HTTPException(status_code=403, detail="advancing the session requires an admin token")
        session = store.get(session_id)
        action = body.get("action")
        with store.lock(session_id):
            if action == "open_round2":
                queues = evalflow.open_round2(session)
                store.persist(session)
                return {
                    "schema_version": SCHEMA_VERSION,
                    "state": session.state.value,
                    "queue_sizes": {rater: len(entries) for rater, entries in queues.items()},
                }
            if action == "finalize":
                evalflow.finalize(session)
                store.persist(session)
                return {"schema_version": SCHEMA_VERSION, "state": session.state.value}
        raise HTTPException(status_code=422, detail=f"unknown action {action!r}; use open_round2 or finalize")

    @app.get("/api/reports/{session_id}")
    def report(session_id: str, identity: RaterIdentity = Depends(authenticate)) -> dict:
        session = store.get(session_id)
        if session.state is not SessionState.FINALIZED or session.verdicts is None:
            raise HTTPException(status_code=409, detail=f"session {session_id!r} is not finalized")
        from .cli import build_criterion_matrix

        agreement = {}
        for criterion in Criterion:
            matrix = build_criterion_matrix(session, criterion, "effective")
            if matrix is not None:
                agreement[criterion.value] = agreestats.agreement_report(matrix)
        results = confusion_dist = None
        if runs:
            results = agreestats.condition_results(session.verdicts, runs)
            confusion_dist = agreestats.confusion(session.verdicts, runs)
        doc = agreestats.report_json(agreement, results, confusion_dist, None)
        doc["verdicts"] = session.verdicts.to_json()
        return doc

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
