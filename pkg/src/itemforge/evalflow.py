"""Two-round, three-rater rubric evaluation workflow.

Round 1: every rater scores every item on every applicable criterion,
independently. Round 2: each rater reviews only the entries where their own
round-1 rating differed from the other two agreeing raters (the lone
dissenter), and either keeps or changes their score. Final verdicts are
majority votes over effective ratings (round 2 where present, else round 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from enum import Enum
from pathlib import Path
from typing import Iterable

from .corpus import Item, validate_item
from .taxonomy import EVALUATION_LABELS, AnnotationLabel, InferenceType

RATER_COUNT = 3
MAJORITY = 2


class Criterion(str, Enum):
    GENERAL_ITEM_QUALITY = "general_item_quality"
    INFERENCE_TYPE_ACCURACY = "inference_type_accuracy"
    REASONING_QUALITY = "reasoning_quality"


BINARY_CRITERIA = (Criterion.GENERAL_ITEM_QUALITY, Criterion.REASONING_QUALITY)


class SessionState(str, Enum):
    ROUND1_OPEN = "round1_open"
    ROUND2_OPEN = "round2_open"
    FINALIZED = "finalized"


class EvalError(Exception):
    pass


class RatingInvalidError(EvalError):
    pass


class UnknownRaterError(EvalError):
    pass


class UnknownItemError(EvalError):
    pass


class InapplicableCriterionError(EvalError):
    pass


class ClosedRoundError(EvalError):
    pass


class NotQueuedError(EvalError):
    pass


class RoundNotReadyError(EvalError):
    def __init__(self, missing: list[tuple[str, str, str]]):
        preview = ", ".join("/".join(t) for t in missing[:5])
        more = f" (+{len(missing) - 5} more)" if len(missing) > 5 else ""
        super().__init__(f"round 1 incomplete; missing {len(missing)} ratings: {preview}{more}")
        self.missing = missing


class IncompleteQueueError(EvalError):
    def __init__(self, missing: list[tuple[str, str, str]]):
        preview = ", ".join("/".join(t) for t in missing[:5])
        more = f" (+{len(missing) - 5} more)" if len(missing) > 5 else ""
        super().__init__(f"adjudication incomplete; {len(missing)} queue entries unresolved: {preview}{more}")
        self.missing = missing


@dataclass(frozen=True)
class RatingRecord:
    """One rater's verdict on one item for one criterion in one round."""

    item_id: str
    rater_id: str
    criterion: Criterion
    verdict: int
    observed_type: AnnotationLabel | None = None
    note: str | None = None
    round: int = 1

    def to_json(self) -> dict:
        obj = {
            "criterion": self.criterion.value,
            "item_id": self.item_id,
            "rater_id": self.rater_id,
            "round": self.round,
            "verdict": self.verdict,
        }
        if self.observed_type is not None:
            obj["observed_type"] = self.observed_type.value
        if self.note is not None:
            obj["note"] = self.note
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "RatingRecord":
        return cls(
            item_id=obj["item_id"],
            rater_id=obj["rater_id"],
            criterion=Criterion(obj["criterion"]),
            verdict=int(obj["verdict"]),
            observed_type=AnnotationLabel(obj["observed_type"]) if obj.get("observed_type") else None,
            note=obj.get("note"),
            round=int(obj.get("round", 1)),
        )


def validate_rating(record: RatingRecord) -> None:
    """Enforce the rubric's record-level rules."""
    if record.verdict not in (0, 1):
        raise RatingInvalidError(f"verdict must be 0 or 1, got {record.verdict}")
    if record.round not in (1, 2):
        raise RatingInvalidError(f"round must be 1 or 2, got {record.round}")
    if record.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
        if record.observed_type is None:
            raise RatingInvalidError("inference_type_accuracy ratings must name the observed type")
        if record.observed_type not in EVALUATION_LABELS:
            raise RatingInvalidError(
                f"observed type must be one of {[l.value for l in EVALUATION_LABELS]}, got {record.observed_type.value}"
            )
    elif record.observed_type is not None:
        raise RatingInvalidError(f"{record.criterion.value} ratings must not carry an observed type")
    if record.criterion is Criterion.GENERAL_ITEM_QUALITY:
        if record.verdict == 0 and not (record.note and record.note.strip()):
            raise RatingInvalidError("a quality verdict of 0 requires an explanation in the note field")
        if record.verdict == 1 and record.note and record.note.strip():
            raise RatingInvalidError("a quality verdict of 1 must not carry a deficiency note")


@dataclass(frozen=True)
class ItemSnapshot:
    """What the session needs to know about an item under evaluation."""

    item_id: str
    passage_id: str
    target_type: InferenceType
    reasoning_applicable: bool

    def to_json(self) -> dict:
        return {
            "item_id": self.item_id,
            "passage_id": self.passage_id,
            "reasoning_applicable": self.reasoning_applicable,
            "target_type": self.target_type.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ItemSnapshot":
        return cls(
            item_id=obj["item_id"],
            passage_id=obj["passage_id"],
            target_type=InferenceType(obj["target_type"]),
            reasoning_applicable=bool(obj["reasoning_applicable"]),
        )


@dataclass(frozen=True)
class QueueEntry:
    """One round-2 review task for one rater."""

    item_id: str
    criterion: Criterion
    own_rating: str
    others_agree_on: str | None  # None when all three observed types differ

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion.value,
            "item_id": self.item_id,
            "others_agree_on": self.others_agree_on,
            "own_rating": self.own_rating,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QueueEntry":
        return cls(
            item_id=obj["item_id"],
            criterion=Criterion(obj["criterion"]),
            own_rating=obj["own_rating"],
            others_agree_on=obj.get("others_agree_on"),
        )


@dataclass(frozen=True)
class ItemVerdict:
    accepted_quality: int
    matched_type: int
    final_observed_type: AnnotationLabel | None  # None = unresolved
    reasoning_ok: int | None  # None = not applicable

    def to_json(self) -> dict:
        return {
            "accepted_quality": self.accepted_quality,
            "final_observed_type": self.final_observed_type.value if self.final_observed_type else None,
            "matched_type": self.matched_type,
            "reasoning_ok": self.reasoning_ok,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ItemVerdict":
        return cls(
            accepted_quality=int(obj["accepted_quality"]),
            matched_type=int(obj["matched_type"]),
            final_observed_type=AnnotationLabel(obj["final_observed_type"]) if obj.get("final_observed_type") else None,
            reasoning_ok=obj["reasoning_ok"] if obj.get("reasoning_ok") is None else int(obj["reasoning_ok"]),
        )


@dataclass(frozen=True)
class FinalVerdicts:
    per_item: dict[str, ItemVerdict]

    def to_json(self) -> dict:
        return {item_id: v.to_json() for item_id, v in sorted(self.per_item.items())}

    @classmethod
    def from_json(cls, obj: dict) -> "FinalVerdicts":
        return cls(per_item={item_id: ItemVerdict.from_json(v) for item_id, v in obj.items()})


Key = tuple[str, str, str]  # (item_id, rater_id, criterion value)


@dataclass
class EvaluationSession:
    session_id: str
    items: list[ItemSnapshot]
    rater_ids: tuple[str, ...]
    state: SessionState = SessionState.ROUND1_OPEN
    round1: dict[Key, RatingRecord] = field(default_factory=dict)
    round2: dict[Key, RatingRecord] = field(default_factory=dict)
    queues: dict[str, list[QueueEntry]] = field(default_factory=dict)
    audit_log: list[dict] = field(default_factory=list)
    verdicts: FinalVerdicts | None = None

    def item(self, item_id: str) -> ItemSnapshot:
        for snapshot in self.items:
            if snapshot.item_id == item_id:
                return snapshot
        raise UnknownItemError(f"item {item_id!r} is not part of session {self.session_id!r}")

    def applicable_criteria(self, snapshot: ItemSnapshot) -> list[Criterion]:
        criteria = [Criterion.GENERAL_ITEM_QUALITY, Criterion.INFERENCE_TYPE_ACCURACY]
        if snapshot.reasoning_applicable:
            criteria.append(Criterion.REASONING_QUALITY)
        return criteria

    def _audit(self, event: str, detail: str = "") -> None:
        self.audit_log.append({"seq": len(self.audit_log), "event": event, "detail": detail})


def open_session(items: Iterable[Item], raters: Iterable[str], session_id: str = "session") -> EvaluationSession:
    """Start a round-1 session where all three raters see every item."""
    rater_ids = tuple(raters)
    if len(rater_ids) != RATER_COUNT:
        raise EvalError(f"sessions take exactly {RATER_COUNT} raters, got {len(rater_ids)}")
    if len(set(rater_ids)) != RATER_COUNT:
        raise EvalError("rater ids must be distinct")
    snapshots = []
    for item in items:
        violations = validate_item(item)
        if violations:
            raise EvalError(f"item {item.id!r} failed validation: {violations[0]}")
        snapshots.append(
            ItemSnapshot(
                item_id=item.id,
                passage_id=item.passage_id,
                target_type=item.target_type,
                reasoning_applicable=bool(item.text_hint and item.reasoning),
            )
        )
    session = EvaluationSession(session_id=session_id, items=snapshots, rater_ids=rater_ids)
    session._audit("session_opened", f"{len(snapshots)} items, raters {', '.join(rater_ids)}")
    return session


def submit_rating(session: EvaluationSession, record: RatingRecord) -> EvaluationSession:
    """Store one rating; resubmission within the open round overwrites."""
    validate_rating(record)
    if record.rater_id not in session.rater_ids:
        raise UnknownRaterError(f"rater {record.rater_id!r} is not part of session {session.session_id!r}")
    snapshot = session.item(record.item_id)
    if record.criterion not in session.applicable_criteria(snapshot):
        raise InapplicableCriterionError(
            f"criterion {record.criterion.value} does not apply to item {record.item_id!r}"
        )
    key: Key = (record.item_id, record.rater_id, record.criterion.value)
    if record.round == 1:
        if session.state is not SessionState.ROUND1_OPEN:
            raise ClosedRoundError(f"round 1 is closed (session state: {session.state.value})")
        session.round1[key] = record
    else:
        if session.state is not SessionState.ROUND2_OPEN:
            raise ClosedRoundError(f"round 2 is not open (session state: {session.state.value})")
        queued = any(
            entry.item_id == record.item_id and entry.criterion is record.criterion
            for entry in session.queues.get(record.rater_id, [])
        )
        if not queued:
            raise NotQueuedError(
                f"({record.item_id}, {record.criterion.value}) is not in rater {record.rater_id!r}'s adjudication queue"
            )
        session.round2[key] = record
    return session


def missing_round1(session: EvaluationSession) -> list[Key]:
    missing = []
    for snapshot in session.items:
        for criterion in session.applicable_criteria(snapshot):
            for rater_id in session.rater_ids:
                key: Key = (snapshot.item_id, rater_id, criterion.value)
                if key not in session.round1:
                    missing.append(key)
    return missing


def _rating_repr(record: RatingRecord) -> str:
    if record.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
        return record.observed_type.value  # validated non-None
    return str(record.verdict)


def compute_queues(session: EvaluationSession) -> dict[str, list[QueueEntry]]:
    """Lone-dissenter queues over the round-1 snapshot.

    Binary criteria: a rater is queued when their verdict differs from the
    other two raters' shared verdict. Observed types: a rater is queued when
    the other two agree on a different label; when all three labels differ,
    all three raters are queued.
    """
    queues: dict[str, list[QueueEntry]] = {rater_id: [] for rater_id in session.rater_ids}
    for snapshot in session.items:
        for criterion in session.applicable_criteria(snapshot):
            records = {
                rater_id: session.round1[(snapshot.item_id, rater_id, criterion.value)]
                for rater_id in session.rater_ids
            }
            values = {rater_id: _rating_repr(record) for rater_id, record in records.items()}
            for rater_id in session.rater_ids:
                others = [values[other] for other in session.rater_ids if other != rater_id]
                own = values[rater_id]
                if criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                    if others[0] == others[1] and own != others[0]:
                        queues[rater_id].append(QueueEntry(snapshot.item_id, criterion, own, others[0]))
                    elif len({own, *others}) == 3:
                        queues[rater_id].append(QueueEntry(snapshot.item_id, criterion, own, None))
                else:
                    if others[0] == others[1] and own != others[0]:
                        queues[rater_id].append(QueueEntry(snapshot.item_id, criterion, own, others[0]))
    return queues


def open_round2(session: EvaluationSession) -> dict[str, list[QueueEntry]]:
    """Close round 1 and compute the adjudication queues."""
    if session.state is not SessionState.ROUND1_OPEN:
        raise ClosedRoundError(f"cannot open round 2 from state {session.state.value}")
    missing = missing_round1(session)
    if missing:
        raise RoundNotReadyError(missing)
    session.queues = compute_queues(session)
    session.state = SessionState.ROUND2_OPEN
    sizes = ", ".join(f"{rater}:{len(entries)}" for rater, entries in session.queues.items())
    session._audit("round2_opened", f"queue sizes {sizes}")
    return session.queues


def adjudication_queue(session: EvaluationSession, rater_id: str) -> list[QueueEntry]:
    if rater_id not in session.rater_ids:
        raise UnknownRaterError(f"rater {rater_id!r} is not part of session {session.session_id!r}")
    if session.state is SessionState.ROUND1_OPEN:
        raise RoundNotReadyError(missing_round1(session))
    return list(session.queues.get(rater_id, []))


def missing_round2(session: EvaluationSession) -> list[Key]:
    missing = []
    for rater_id, entries in session.queues.items():
        for entry in entries:
            key: Key = (entry.item_id, rater_id, entry.criterion.value)
            if key not in session.round2:
                missing.append(key)
    return missing


def effective_rating(session: EvaluationSession, item_id: str, rater_id: str, criterion: Criterion) -> RatingRecord:
    """Round-2 rating where one exists, otherwise the round-1 rating."""
    key: Key = (item_id, rater_id, criterion.value)
    return session.round2.get(key) or session.round1[key]


def _majority_verdict(verdicts: list[int]) -> int:
    return 1 if sum(verdicts) >= MAJORITY else 0


def _majority_label(labels: list[AnnotationLabel]) -> AnnotationLabel | None:
    for label in labels:
        if labels.count(label) >= MAJORITY:
            return label
    return None


def finalize(session: EvaluationSession) -> FinalVerdicts:
    """Majority-vote verdicts over effective ratings; idempotent once done."""
    if session.state is SessionState.FINALIZED:
        assert session.verdicts is not None
        return session.verdicts
    if session.state is not SessionState.ROUND2_OPEN:
        raise ClosedRoundError(f"cannot finalize from state {session.state.value}; open round 2 first")
    missing = missing_round2(session)
    if missing:
        raise IncompleteQueueError(missing)

    per_item: dict[str, ItemVerdict] = {}
    for snapshot in session.items:
        quality = [
            effective_rating(session, snapshot.item_id, rater_id, Criterion.GENERAL_ITEM_QUALITY).verdict
            for rater_id in session.rater_ids
        ]
        type_records = [
            effective_rating(session, snapshot.item_id, rater_id, Criterion.INFERENCE_TYPE_ACCURACY)
            for rater_id in session.rater_ids
        ]
        reasoning: int | None = None
        if snapshot.reasoning_applicable:
            reasoning = _majority_verdict(
                [
                    effective_rating(session, snapshot.item_id, rater_id, Criterion.REASONING_QUALITY).verdict
                    for rater_id in session.rater_ids
                ]
            )
        per_item[snapshot.item_id] = ItemVerdict(
            accepted_quality=_majority_verdict(quality),
            matched_type=_majority_verdict([r.verdict for r in type_records]),
            final_observed_type=_majority_label([r.observed_type for r in type_records]),
            reasoning_ok=reasoning,
        )
    session.verdicts = FinalVerdicts(per_item=per_item)
    session.state = SessionState.FINALIZED
    session._audit("finalized", f"{len(per_item)} verdicts")
    return session.verdicts


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def session_to_json(session: EvaluationSession) -> dict:
    return {
        "audit_log": session.audit_log,
        "items": [s.to_json() for s in session.items],
        "queues": {rater: [e.to_json() for e in entries] for rater, entries in session.queues.items()},
        "rater_ids": list(session.rater_ids),
        "round1": [r.to_json() for r in session.round1.values()],
        "round2": [r.to_json() for r in session.round2.values()],
        "session_id": session.session_id,
        "state": session.state.value,
        "verdicts": session.verdicts.to_json() if session.verdicts else None,
    }


def session_from_json(doc: dict) -> EvaluationSession:
    session = EvaluationSession(
        session_id=doc["session_id"],
        items=[ItemSnapshot.from_json(o) for o in doc["items"]],
        rater_ids=tuple(doc["rater_ids"]),
        state=SessionState(doc["state"]),
        audit_log=list(doc.get("audit_log", [])),
    )
    for obj in doc.get("round1", []):
        record = RatingRecord.from_json(obj)
        session.round1[(record.item_id, record.rater_id, record.criterion.value)] = record
    for obj in doc.get("round2", []):
        record = RatingRecord.from_json(obj)
        session.round2[(record.item_id, record.rater_id, record.criterion.value)] = record
    session.queues = {
        rater: [QueueEntry.from_json(e) for e in entries] for rater, entries in doc.get("queues", {}).items()
    }
    if doc.get("verdicts"):
        session.verdicts = FinalVerdicts.from_json(doc["verdicts"])
    return session


def save_session(session: EvaluationSession, sessions_dir: str | Path, lock: bool = True) -> Path:
    """Atomically persist a session.

    With `lock` (the default), takes the session's advisory file lock for
    the duration of the write and fails if another process, such as a
    running server, holds it. The server passes lock=False because it
    already owns the lock for the sessions it serves.
    """
    import fcntl

    session_dir = Path(sessions_dir) / session.session_id
    session_dir.mkdir(parents=True, exist_ok=True)
    path = session_dir / "session.json"

    def write() -> None:
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(
            json.dumps(session_to_json(session), sort_keys=True, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        tmp.replace(path)

    if not lock:
        write()
        return path
    with open(session_dir / ".lock", "w") as lock_file:
        try:
            fcntl.flock(lock_file, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except BlockingIOError as exc:
            raise EvalError(
                f"session {session.session_id!r} is locked by another process (a running server?)"
            ) from exc
        try:
            write()
        finally:
            fcntl.flock(lock_file, fcntl.LOCK_UN)
    return path


def load_session(path: str | Path) -> EvaluationSession:
    p = Path(path)
    if p.is_dir():
        p = p / "session.json"
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise EvalError(f"session file {p} is corrupted: {exc}") from exc
    return session_from_json(doc)


def export_ratings(session: EvaluationSession, path: str | Path, rounds: tuple[int, ...] = (1, 2)) -> int:
    """Write session ratings as one record per line; returns the count."""
    records = []
    if 1 in rounds:
        records.extend(session.round1.values())
    if 2 in rounds:
        records.extend(session.round2.values())
    records.sort(key=lambda r: (r.round, r.item_id, r.rater_id, r.criterion.value))
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record.to_json(), sort_keys=True, ensure_ascii=False) + "\n")
    return len(records)


def import_ratings(session: EvaluationSession, path: str | Path) -> int:
    """Submit every record from a ratings.jsonl file; returns the count."""
    count = 0
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = RatingRecord.from_json(json.loads(line))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise EvalError(f"{path}:{line_no}: bad rating record: {exc}") from exc
            try:
                submit_rating(session, record)
            except EvalError as exc:
                raise EvalError(f"{path}:{line_no}: {exc}") from exc
            count += 1
    return count
