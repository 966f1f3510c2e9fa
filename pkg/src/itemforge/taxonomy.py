"""Inference taxonomy, annotation label set, and label distributions.

The label definitions shown to users are not hard-coded here: they are
parsed from the versioned handbook document shipped with the package, so
that protocol text stays under review like any other data file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable


class InferenceType(str, Enum):
    """The four bridging-inference categories items can be classified into."""

    PRONOMINAL = "pronominal"
    PRONOMINAL_BRIDGING = "pronominal_bridging"
    TEXT_CONNECTING = "text_connecting"
    GAP_FILLING = "gap_filling"


#: Types a generation run may target (plain pronoun resolution is not one).
GENERATION_TARGET_TYPES: tuple[InferenceType, ...] = (
    InferenceType.PRONOMINAL_BRIDGING,
    InferenceType.TEXT_CONNECTING,
    InferenceType.GAP_FILLING,
)


class AnnotationLabel(str, Enum):
    """Full label set used when annotating an item bank.

    Superset of :class:`InferenceType` plus the non-inference labels from
    the annotation guideline.
    """

    FACTUAL_LITERAL = "factual_literal"
    PRONOMINAL = "pronominal"
    PRONOMINAL_BRIDGING = "pronominal_bridging"
    TEXT_CONNECTING = "text_connecting"
    GAP_FILLING = "gap_filling"
    VOCABULARY = "vocabulary"
    OTHER = "other"


#: Labels that count as bridging inference when computing the bridging share.
BRIDGING_LABELS: frozenset[AnnotationLabel] = frozenset(
    {
        AnnotationLabel.PRONOMINAL,
        AnnotationLabel.PRONOMINAL_BRIDGING,
        AnnotationLabel.TEXT_CONNECTING,
        AnnotationLabel.GAP_FILLING,
    }
)

#: Labels raters may assign as the observed type of a generated item.
EVALUATION_LABELS: tuple[AnnotationLabel, ...] = (
    AnnotationLabel.GAP_FILLING,
    AnnotationLabel.PRONOMINAL_BRIDGING,
    AnnotationLabel.TEXT_CONNECTING,
    AnnotationLabel.FACTUAL_LITERAL,
)


def as_annotation_label(t: InferenceType | AnnotationLabel | str) -> AnnotationLabel:
    """Coerce an inference type (or raw string) into the annotation label set."""
    return AnnotationLabel(str(t.value if isinstance(t, Enum) else t))


@dataclass(frozen=True)
class LabeledItemRecord:
    """One coder's label for one item."""

    item_id: str
    coder_id: str
    label: AnnotationLabel


@dataclass(frozen=True)
class TypeDescriptor:
    """Guideline entry for one annotation label, verbatim from the handbook."""

    name: str
    definition: str
    example: str


@dataclass(frozen=True)
class Distribution:
    """Counts per annotation label plus their total."""

    counts: dict[AnnotationLabel, int]
    total: int

    def proportion(self, label: AnnotationLabel) -> float:
        if self.total == 0:
            return 0.0
        return self.counts.get(label, 0) / self.total

    def proportions(self) -> dict[AnnotationLabel, float]:
        return {label: self.proportion(label) for label in AnnotationLabel}


class HandbookError(Exception):
    """The handbook document is missing or not in the expected format."""


def handbook_path() -> Path:
    return Path(str(resources.files("itemforge").joinpath("data/handbook.md")))


def handbook_text(path: Path | None = None) -> str:
    p = path if path is not None else handbook_path()
    return p.read_text(encoding="utf-8")


_HEADING = re.compile(r"^### (?P<key>[a-z_]+) \((?P<name>[^)]+)\)\s*$")


def _parse_label_sections(text: str) -> dict[str, TypeDescriptor]:
    """Parse the `### key (Display Name)` entries of the annotation-labels
    section. Each entry must carry a `Definition:` line and an `Example:`
    line; values run until the next labeled line.
    """
    m = re.search(r"^## 1\. Annotation labels\s*$(.*?)(?=^## |\Z)", text, re.M | re.S)
    if not m:
        raise HandbookError("handbook has no annotation labels section")
    text = m.group(1)
    sections: dict[str, TypeDescriptor] = {}
    key = name = None
    fields: dict[str, list[str]] = {}
    current_field: str | None = None

    def flush() -> None:
        nonlocal key, name, fields, current_field
        if key is not None:
            definition = " ".join(" ".join(fields.get("Definition", [])).split())
            example = " ".join(" ".join(fields.get("Example", [])).split())
            if not definition:
                raise HandbookError(f"label section {key!r} has no Definition line")
            sections[key] = TypeDescriptor(name=name or key, definition=definition, example=example)
        key = name = None
        fields = {}
        current_field = None

    for line in text.splitlines():
        m = _HEADING.match(line)
        if m:
            flush()
            key, name = m.group("key"), m.group("name")
            continue
        if line.startswith("## "):
            flush()
            continue
        if key is None:
            continue
        for field in ("Definition", "Example"):
            prefix = field + ":"
            if line.startswith(prefix):
                current_field = field
                fields[field] = [line[len(prefix):].strip()]
                break
        else:
            if current_field and line.strip():
                fields[current_field].append(line.strip())
            elif not line.strip():
                current_field = None
    flush()
    return sections


_DESCRIPTOR_CACHE: dict[Path, dict[str, TypeDescriptor]] = {}


def type_definition(label: AnnotationLabel | InferenceType, handbook: Path | None = None) -> TypeDescriptor:
    """Return the handbook guideline entry for a label.

    Total over both enums; raises :class:`HandbookError` only if the shipped
    handbook itself is incomplete.
    """
    path = handbook if handbook is not None else handbook_path()
    if path not in _DESCRIPTOR_CACHE:
        _DESCRIPTOR_CACHE[path] = _parse_label_sections(handbook_text(path))
    key = as_annotation_label(label).value
    try:
        return _DESCRIPTOR_CACHE[path][key]
    except KeyError:
        raise HandbookError(f"handbook at {path} has no section for label {key!r}") from None


def rubric_text(handbook: Path | None = None) -> str:
    """The evaluation-rubric section of the handbook, as markdown."""
    text = handbook_text(handbook)
    m = re.search(r"^## 2\. Evaluation rubric\s*$(.*?)(?=^## |\Z)", text, re.M | re.S)
    if not m:
        raise HandbookError("handbook has no evaluation rubric section")
    return m.group(1).strip()


def distribution(labels: Iterable[AnnotationLabel | InferenceType | str]) -> Distribution:
    """Count occurrences per annotation label."""
    counts = {label: 0 for label in AnnotationLabel}
    total = 0
    for raw in labels:
        counts[as_annotation_label(raw)] += 1
        total += 1
    return Distribution(counts=counts, total=total)


def bridging_share(d: Distribution) -> float:
    """Fraction of labels that are bridging-inference categories."""
    if d.total <= 0:
        raise ValueError("bridging share is undefined for an empty distribution")
    bridging = sum(d.counts.get(label, 0) for label in BRIDGING_LABELS)
    return bridging / d.total


def load_labels(path: Path) -> list[LabeledItemRecord]:
    """Read labeled-item records from a labels.jsonl file.

    At most one record per (item, coder) pair; duplicates are an error.
    """
    records: list[LabeledItemRecord] = []
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                record = LabeledItemRecord(
                    item_id=obj["item_id"],
                    coder_id=obj["coder_id"],
                    label=AnnotationLabel(obj["label"]),
                )
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise ValueError(f"{path}:{line_no}: bad label record: {exc}") from exc
            pair = (record.item_id, record.coder_id)
            if pair in seen:
                raise ValueError(f"{path}:{line_no}: duplicate record for item {record.item_id!r} by coder {record.coder_id!r}")
            seen.add(pair)
            records.append(record)
    return records


def save_labels(records: Iterable[LabeledItemRecord], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps({"coder_id": r.coder_id, "item_id": r.item_id, "label": r.label.value}, sort_keys=True, ensure_ascii=False) + "\n")
