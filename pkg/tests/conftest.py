from __future__ import annotations

from pathlib import Path

import pytest

from itemforge.corpus import (
    GradeBand,
    Item,
    ItemBank,
    Passage,
    PassageRole,
    Provenance,
    load_generation_targets,
    load_training_bank,
    new_passage,
)
from itemforge.taxonomy import InferenceType

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
GOLDEN = REPO / "tests" / "golden"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in report.nodeid and report.when == "call":
                name = report.nodeid.split("::")[-1]
                lines.append(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def training_bank() -> ItemBank:
    return load_training_bank()


@pytest.fixture(scope="session")
def targets_bank() -> ItemBank:
    return load_generation_targets()


def make_passage(
    id: str = "p1",
    body: str = "A short test passage with a handful of words.",
    role: PassageRole = PassageRole.TRAINING_EXAMPLE,
) -> Passage:
    return new_passage(id=id, title=id.upper(), body=body, grade_band=GradeBand.UNSPECIFIED, source="test", role=role)


def make_item(
    id: str = "i1",
    passage_id: str = "p1",
    target_type: InferenceType = InferenceType.GAP_FILLING,
    options: tuple[str, str, str, str] = ("alpha", "beta", "gamma", "delta"),
    key: str = "A",
    text_hint: str | None = "A short test passage.",
    reasoning: str | None = "The answer must be inferred from outside knowledge.",
    provenance: Provenance = Provenance.HUMAN_WRITTEN,
) -> Item:
    return Item(
        id=id,
        passage_id=passage_id,
        stem=f"Question for {id}?",
        options=options,
        key=key,
        target_type=target_type,
        text_hint=text_hint,
        reasoning=reasoning,
        provenance=provenance,
    )


def make_bank(passages, items, bank_id: str = "test_bank") -> ItemBank:
    return ItemBank(id=bank_id, label=bank_id, passages=tuple(passages), items=tuple(items))
