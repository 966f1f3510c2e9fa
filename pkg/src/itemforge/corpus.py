"""Passage and item-bank schemas, validation, and JSONL persistence.

A bank is a directory holding `passages.jsonl`, `items.jsonl`, and a
`manifest.json` with counts and a content hash. Serialization is canonical
(sorted keys, one record per line) so identical banks are byte-identical
on disk.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable

from .taxonomy import InferenceType

OPTION_LABELS = ("A", "B", "C", "D")


class GradeBand(str, Enum):
    G3_5 = "g3_5"
    G6_8 = "g6_8"
    G9_12 = "g9_12"
    UNSPECIFIED = "unspecified"


class PassageRole(str, Enum):
    TRAINING_EXAMPLE = "training_example"
    GENERATION_TARGET = "generation_target"


class Provenance(str, Enum):
    HUMAN_WRITTEN = "human_written"
    LLM_GENERATED = "llm_generated"


@dataclass(frozen=True)
class Violation:
    """One failed validation rule, naming the field and the rule."""

    field: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}/{self.rule}: {self.message}"


@dataclass(frozen=True)
class Passage:
    id: str
    title: str
    body: str
    word_count: int
    grade_band: GradeBand = GradeBand.UNSPECIFIED
    source: str = ""
    role: PassageRole = PassageRole.TRAINING_EXAMPLE


@dataclass(frozen=True)
class Item:
    id: str
    passage_id: str
    stem: str
    options: tuple[str, str, str, str]
    key: str
    target_type: InferenceType
    text_hint: str | None = None
    reasoning: str | None = None
    provenance: Provenance = Provenance.HUMAN_WRITTEN

    @property
    def key_text(self) -> str:
        return self.options[OPTION_LABELS.index(self.key)]


@dataclass(frozen=True)
class ItemBank:
    id: str
    label: str
    passages: tuple[Passage, ...]
    items: tuple[Item, ...]
    _passage_index: dict[str, Passage] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_passage_index", {p.id: p for p in self.passages})

    def passage(self, passage_id: str) -> Passage:
        return self._passage_index[passage_id]

    def items_for(self, passage_id: str, target_type: InferenceType | None = None) -> list[Item]:
        """Items of a passage, in bank order, optionally filtered by type."""
        return [
            i
            for i in self.items
            if i.passage_id == passage_id and (target_type is None or i.target_type == target_type)
        ]


class BankError(Exception):
    """Base class for bank loading and saving failures."""


class BankParseError(BankError):
    def __init__(self, path: Path, line_no: int, reason: str):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no
        self.reason = reason


class BankIntegrityError(BankError):
    """Dangling references, duplicate ids, or invariant violations."""

    def __init__(self, message: str, record: object = None):
        if record is not None:
            message = f"{message} (record: {json.dumps(record, sort_keys=True, ensure_ascii=False, default=str)})"
        super().__init__(message)
        self.record = record


class BankValidationError(BankError):
    def __init__(self, violations: list[tuple[str, Violation]]):
        lines = [f"{owner}: {v}" for owner, v in violations]
        super().__init__("bank failed validation:\n" + "\n".join(lines))
        self.violations = violations


def count_words(text: str) -> int:
    """Whitespace-token count; hyphenated words count once."""
    return len(text.split())


def normalize_option(text: str) -> str:
    """Trim and collapse internal whitespace runs; case is preserved."""
    return " ".join(text.split())


def validate_passage(passage: Passage) -> list[Violation]:
    violations = []
    if not passage.body.strip():
        violations.append(Violation("body", "non-empty", f"passage {passage.id!r} has an empty body"))
    expected = count_words(passage.body)
    if passage.word_count != expected:
        violations.append(
            Violation(
                "word_count",
                "matches-body",
                f"passage {passage.id!r} stores word_count={passage.word_count} but body has {expected} tokens",
            )
        )
    return violations


def validate_item(item: Item, require_cot_fields: bool = False) -> list[Violation]:
    """Check item invariants; an empty list means the item is well-formed.

    `require_cot_fields` additionally demands text_hint and reasoning, for
    items produced under a chain-of-thought condition.
    """
    violations = []
    if len(item.options) != 4:
        violations.append(
            Violation("options", "option-count", f"item {item.id!r} has {len(item.options)} options, expected 4")
        )
    normalized = [normalize_option(o) for o in item.options]
    for i in range(len(normalized)):
        for j in range(i + 1, len(normalized)):
            if normalized[i] == normalized[j]:
                violations.append(
                    Violation(
                        "options",
                        "duplicate-options",
                        f"item {item.id!r} options {OPTION_LABELS[i]} and {OPTION_LABELS[j]} are identical after whitespace normalization",
                    )
                )
    if item.key not in OPTION_LABELS[: len(item.options)] or item.key not in OPTION_LABELS:
        violations.append(Violation("key", "key-designates-option", f"item {item.id!r} key {item.key!r} is not one of A-D"))
    if not item.stem.strip():
        violations.append(Violation("stem", "non-empty", f"item {item.id!r} has an empty stem"))
    if require_cot_fields:
        if not item.text_hint:
            violations.append(Violation("text_hint", "cot-fields-present", f"item {item.id!r} is missing its text hint"))
        if not item.reasoning:
            violations.append(Violation("reasoning", "cot-fields-present", f"item {item.id!r} is missing its reasoning"))
    return violations


def validate_bank(bank: ItemBank) -> list[tuple[str, Violation]]:
    """All violations across the bank, tagged with the owning record id."""
    violations: list[tuple[str, Violation]] = []
    seen_passages: set[str] = set()
    for p in bank.passages:
        if p.id in seen_passages:
            violations.append((f"passage {p.id}", Violation("id", "unique-id", f"duplicate passage id {p.id!r}")))
        seen_passages.add(p.id)
        for v in validate_passage(p):
            violations.append((f"passage {p.id}", v))
    seen_items: set[str] = set()
    for item in bank.items:
        if item.id in seen_items:
            violations.append((f"item {item.id}", Violation("id", "unique-id", f"duplicate item id {item.id!r}")))
        seen_items.add(item.id)
        if item.passage_id not in seen_passages:
            violations.append(
                (f"item {item.id}", Violation("passage_id", "dangling-reference", f"item {item.id!r} references missing passage {item.passage_id!r}"))
            )
        for v in validate_item(item):
            violations.append((f"item {item.id}", v))
    return violations


def _passage_to_json(p: Passage) -> dict:
    return {
        "body": p.body,
        "grade_band": p.grade_band.value,
        "id": p.id,
        "role": p.role.value,
        "source": p.source,
        "title": p.title,
        "word_count": p.word_count,
    }


def _passage_from_json(obj: dict) -> Passage:
    return Passage(
        id=obj["id"],
        title=obj["title"],
        body=obj["body"],
        word_count=int(obj["word_count"]),
        grade_band=GradeBand(obj.get("grade_band", "unspecified")),
        source=obj.get("source", ""),
        role=PassageRole(obj.get("role", "training_example")),
    )


def _item_to_json(item: Item) -> dict:
    obj = {
        "id": item.id,
        "key": item.key,
        "options": list(item.options),
        "passage_id": item.passage_id,
        "provenance": item.provenance.value,
        "stem": item.stem,
        "target_type": item.target_type.value,
    }
    if item.text_hint is not None:
        obj["text_hint"] = item.text_hint
    if item.reasoning is not None:
        obj["reasoning"] = item.reasoning
    return obj


def _item_from_json(obj: dict) -> Item:
    options = obj["options"]
    if not isinstance(options, list) or len(options) != 4:
        raise ValueError(f"item {obj.get('id')!r} must carry exactly 4 options")
    return Item(
        id=obj["id"],
        passage_id=obj["passage_id"],
        stem=obj["stem"],
        options=tuple(options),
        key=obj["key"],
        target_type=InferenceType(obj["target_type"]),
        text_hint=obj.get("text_hint"),
        reasoning=obj.get("reasoning"),
        provenance=Provenance(obj.get("provenance", "human_written")),
    )


def _dump_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def _read_jsonl(path: Path) -> list[tuple[int, dict]]:
    records = []
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                records.append((line_no, json.loads(line)))
            except json.JSONDecodeError as exc:
                raise BankParseError(path, line_no, f"invalid JSON: {exc.msg}") from exc
    return records


def bank_content_hash(passages: Iterable[Passage], items: Iterable[Item]) -> str:
    h = hashlib.sha256()
    for p in passages:
        h.update(_dump_line(_passage_to_json(p)).encode("utf-8"))
    for item in items:
        h.update(_dump_line(_item_to_json(item)).encode("utf-8"))
    return h.hexdigest()


def load_bank(path: str | Path) -> ItemBank:
    """Load and fully validate a bank directory.

    Raises :class:`BankParseError` with the file and line number on
    malformed JSON, and :class:`BankIntegrityError` on duplicate ids,
    dangling passage references, or invariant violations.
    """
    bank_dir = Path(path)
    passages_path = bank_dir / "passages.jsonl"
    items_path = bank_dir / "items.jsonl"
    if not bank_dir.is_dir():
        raise FileNotFoundError(f"bank directory not found: {bank_dir}")
    for required in (passages_path, items_path):
        if not required.is_file():
            raise FileNotFoundError(f"bank file not found: {required}")

    passages: list[Passage] = []
    for line_no, obj in _read_jsonl(passages_path):
        try:
            passages.append(_passage_from_json(obj))
        except (KeyError, ValueError) as exc:
            raise BankParseError(passages_path, line_no, f"bad passage record: {exc}") from exc
    items: list[Item] = []
    for line_no, obj in _read_jsonl(items_path):
        try:
            items.append(_item_from_json(obj))
        except (KeyError, ValueError) as exc:
            raise BankParseError(items_path, line_no, f"bad item record: {exc}") from exc

    manifest_path = bank_dir / "manifest.json"
    bank_id, label = bank_dir.name, bank_dir.name
    if manifest_path.is_file():
        try:
            manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise BankParseError(manifest_path, exc.lineno, f"invalid JSON: {exc.msg}") from exc
        bank_id = manifest.get("id", bank_id)
        label = manifest.get("label", bank_id)
        expected_hash = manifest.get("content_hash")
        actual_hash = bank_content_hash(passages, items)
        if expected_hash is not None and expected_hash != actual_hash:
            raise BankIntegrityError(
                f"bank {bank_id!r} content hash mismatch: manifest says {expected_hash}, files hash to {actual_hash}"
            )

    bank = ItemBank(id=bank_id, label=label, passages=tuple(passages), items=tuple(items))
    _check_integrity(bank)
    return bank


def _check_integrity(bank: ItemBank) -> None:
    seen_passages: set[str] = set()
    for p in bank.passages:
        if p.id in seen_passages:
            raise BankIntegrityError(f"duplicate passage id {p.id!r}", record=_passage_to_json(p))
        seen_passages.add(p.id)
    seen_items: set[str] = set()
    for item in bank.items:
        if item.id in seen_items:
            raise BankIntegrityError(f"duplicate item id {item.id!r}", record=_item_to_json(item))
        seen_items.add(item.id)
        if item.passage_id not in seen_passages:
            raise BankIntegrityError(
                f"item {item.id!r} references passage {item.passage_id!r} which is not in the bank",
                record=_item_to_json(item),
            )
    violations = validate_bank(bank)
    if violations:
        raise BankValidationError(violations)


def save_bank(bank: ItemBank, path: str | Path) -> None:
    """Persist a bank canonically; refuses to write an invalid bank.

    Takes an exclusive advisory lock on the bank directory for the
    duration of the write, and writes each file atomically.
    """
    violations = validate_bank(bank)
    if violations:
        raise BankValidationError(violations)

    bank_dir = Path(path)
    bank_dir.mkdir(parents=True, exist_ok=True)
    lock_path = bank_dir / ".lock"
    with open(lock_path, "w") as lock_file:
        fcntl.flock(lock_file, fcntl.LOCK_EX)
        try:
            _atomic_write(bank_dir / "passages.jsonl", "".join(_dump_line(_passage_to_json(p)) for p in bank.passages))
            _atomic_write(bank_dir / "items.jsonl", "".join(_dump_line(_item_to_json(i)) for i in bank.items))
            manifest = {
                "content_hash": bank_content_hash(bank.passages, bank.items),
                "id": bank.id,
                "item_count": len(bank.items),
                "label": bank.label,
                "passage_count": len(bank.passages),
            }
            _atomic_write(bank_dir / "manifest.json", json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n")
        finally:
            fcntl.flock(lock_file, fcntl.LOCK_UN)


def _atomic_write(path: Path, content: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(content)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp, path)


def new_passage(
    id: str,
    title: str,
    body: str,
    grade_band: GradeBand = GradeBand.UNSPECIFIED,
    source: str = "",
    role: PassageRole = PassageRole.TRAINING_EXAMPLE,
) -> Passage:
    """Build a passage with its word count derived from the body."""
    return Passage(id=id, title=title, body=body, word_count=count_words(body), grade_band=grade_band, source=source, role=role)


def with_recounted_words(p: Passage) -> Passage:
    return replace(p, word_count=count_words(p.body))


def training_bank_path() -> Path:
    """Directory of the bundled hand-written training bank."""
    return Path(str(resources.files("itemforge").joinpath("data/training_bank")))


def generation_targets_path() -> Path:
    """Directory of the bundled generation-target passages."""
    return Path(str(resources.files("itemforge").joinpath("data/generation_targets")))


def load_training_bank() -> ItemBank:
    return load_bank(training_bank_path())


def load_generation_targets() -> ItemBank:
    return load_bank(generation_targets_path())
