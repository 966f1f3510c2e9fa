"""Regenerate every bundled artifact from the authored content:

  - src/itemforge/data/training_bank/       (6 passages, 58 items)
  - src/itemforge/data/generation_targets/  (10 passages)
  - src/itemforge/data/cassettes/demo.jsonl (120 recorded exchanges)
  - tests/golden/prompt_*.txt               (12 assembled prompts)
  - fixtures/ratings/                       (3-rater round-1/round-2 records)
  - fixtures/labels/                        (two-coder bank annotation)
  - fixtures/ui_session/                    (10-item walkthrough fixture)

The script self-checks the evaluation fixture end to end through the
session workflow and the statistics module before writing anything, so a
drifting edit here fails fast instead of breaking tests later.

Run from the repo root: python scripts/build_fixtures.py
"""

from __future__ import annotations

import hashlib
import json
import random
import sys
from collections import Counter
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "scripts"))
sys.path.insert(0, str(REPO / "src"))

from content import TRAINING_ITEMS, TRAINING_PASSAGES  # noqa: E402
from content_targets import GENERATED_QUESTIONS, TARGET_PASSAGES  # noqa: E402

from itemforge import agreestats, evalflow, gateway, promptkit  # noqa: E402
from itemforge.corpus import (  # noqa: E402
    Item,
    ItemBank,
    OPTION_LABELS,
    PassageRole,
    Provenance,
    new_passage,
    save_bank,
)
from itemforge.evalflow import Criterion, RatingRecord  # noqa: E402
from itemforge.taxonomy import AnnotationLabel, InferenceType  # noqa: E402

DATA = REPO / "src" / "itemforge" / "data"
FIXTURES = REPO / "fixtures"
GOLDEN = REPO / "tests" / "golden"

TYPE_BY_CODE = {
    "pb": InferenceType.PRONOMINAL_BRIDGING,
    "tc": InferenceType.TEXT_CONNECTING,
    "gf": InferenceType.GAP_FILLING,
}

RATERS = ("rater-a", "rater-b", "rater-c")

# Shortfall runs: the no-force rule lets a generation return fewer than the
# requested three questions. Keys are (condition name, type code, target id).
SHORT_RUNS = {
    ("standard_4", "tc", "t03"): 2,
    ("standard_4", "gf", "t08"): 2,
    ("standard_6", "tc", "t07"): 2,
}

# Per-condition engineered evaluation outcomes.
MATCHED = {  # requested type reproduced, per condition per type code
    "standard_4": {"pb": 13, "tc": 6, "gf": 17},
    "standard_6": {"pb": 16, "tc": 7, "gf": 18},
    "cot_4": {"pb": 14, "tc": 6, "gf": 17},
    "cot_6": {"pb": 14, "tc": 6, "gf": 18},
}
FACTUAL = {"standard_4": 31, "standard_6": 29, "cot_4": 32, "cot_6": 32}
QUALITY_REJECTS = {"standard_4": 6, "standard_6": 4, "cot_4": 9, "cot_6": 3}
REASONING_ACCEPTS = {"cot_4": 32, "cot_6": 35}

QUALITY_NOTES = [
    "answer key also fits another option",
    "distractor is arguably correct",
    "stem wording is confusing",
    "vocabulary above the passage's level",
    "two options overlap in meaning",
    "answerable without reading the passage",
]


def stable_int(text: str) -> int:
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


def build_options(entry: dict, item_id: str) -> tuple[tuple[str, ...], str]:
    """Place the correct answer at a hash-derived position."""
    slot = stable_int(item_id) % 4
    options = list(entry["distractors"])
    options.insert(slot, entry["answer"])
    return tuple(options), OPTION_LABELS[slot]


def spread(n: int, k: int) -> set[int]:
    """Indices of k items spread evenly across n (Bresenham distribution)."""
    return {i for i in range(n) if (i * k) // n != ((i + 1) * k) // n}


def build_training_bank() -> ItemBank:
    passages = [
        new_passage(
            id=p["id"],
            title=p["title"],
            body=p["body"],
            source="simple-wikipedia-adapted",
            role=PassageRole.TRAINING_EXAMPLE,
        )
        for p in TRAINING_PASSAGES
    ]
    counters: Counter[tuple[str, str]] = Counter()
    items = []
    for entry in TRAINING_ITEMS:
        counters[(entry["passage"], entry["type"])] += 1
        item_id = f"{entry['passage']}-{entry['type']}{counters[(entry['passage'], entry['type'])]}"
        options, key = build_options(entry, item_id)
        items.append(
            Item(
                id=item_id,
                passage_id=entry["passage"],
                stem=entry["stem"],
                options=options,
                key=key,
                target_type=TYPE_BY_CODE[entry["type"]],
                text_hint=entry["hint"],
                reasoning=entry["reasoning"],
                provenance=Provenance.HUMAN_WRITTEN,
            )
        )
    return ItemBank(id="training_bank", label="Hand-written training bank", passages=tuple(passages), items=tuple(items))


def build_targets_bank() -> ItemBank:
    passages = [
        new_passage(
            id=p["id"],
            title=p["title"],
            body=p["body"],
            source="simple-wikipedia-adapted",
            role=PassageRole.GENERATION_TARGET,
        )
        for p in TARGET_PASSAGES
    ]
    return ItemBank(id="generation_targets", label="Generation target passages", passages=tuple(passages), items=())


def demo_conditions() -> list[promptkit.GenerationCondition]:
    conditions = []
    for strategy, count in (
        (promptkit.PromptStrategy.STANDARD, 4),
        (promptkit.PromptStrategy.STANDARD, 6),
        (promptkit.PromptStrategy.COT, 4),
        (promptkit.PromptStrategy.COT, 6),
    ):
        for code in ("pb", "tc", "gf"):
            conditions.append(promptkit.GenerationCondition(strategy, count, TYPE_BY_CODE[code]))
    return conditions


def render_response(condition: promptkit.GenerationCondition, target_id: str, code: str) -> str:
    """Simulated assistant message for one generation call."""
    questions = GENERATED_QUESTIONS[(target_id, code)]
    n = SHORT_RUNS.get((condition.name, code, target_id), condition.questions_per_call)
    display = promptkit.TYPE_DISPLAY_NAMES[condition.target_type]
    blocks = [f"Here are {n} {display} questions for this passage."]
    for index, q in enumerate(questions[:n], start=1):
        item_id = f"{gateway.run_id_for(condition, target_id)}-q{index}"
        options, key = build_options(q, item_id)
        lines = []
        if condition.strategy is promptkit.PromptStrategy.COT:
            lines.append(f"Text Hint: {q['hint']}")
            lines.append(f"Reasoning: {q['reasoning']}")
        lines.append(f"Question: {q['stem']}")
        lines.extend(f"{label}. {option}" for label, option in zip(OPTION_LABELS, options))
        lines.append(f"Answer Key: {key}")
        blocks.append("\n".join(lines))
    if n < condition.questions_per_call:
        blocks.append(
            "No further suitable locations were found in the passage, so no additional questions were forced."
        )
    return "\n\n".join(blocks)


def build_cassette(training: ItemBank, targets: ItemBank, params: gateway.DecodeParams) -> list[gateway.Exchange]:
    exchanges = []
    minute = 0
    for target in targets.passages:
        for condition in demo_conditions():
            code = {v: k for k, v in TYPE_BY_CODE.items()}[condition.target_type]
            bundle = promptkit.assemble_prompt(training, target, condition)
            content = render_response(condition, target.id, code)
            envelope = {
                "id": f"chatcmpl-{bundle.content_hash[:12]}",
                "object": "chat.completion",
                "model": params.model_name,
                "choices": [
                    {
                        "index": 0,
                        "message": {"role": "assistant", "content": content},
                        "finish_reason": "stop",
                    }
                ],
                "usage": {
                    "prompt_tokens": len(bundle.system_text + bundle.user_text) // 4,
                    "completion_tokens": len(content) // 4,
                },
            }
            exchanges.append(
                gateway.Exchange(
                    bundle_hash=bundle.content_hash,
                    request_body=gateway.canonical_request_body(bundle, params),
                    response_body=json.dumps(envelope, sort_keys=True, ensure_ascii=False),
                    timestamp=f"2025-06-02T{9 + minute // 60:02d}:{minute % 60:02d}:00Z",
                    latency_ms=1200 + stable_int(bundle.content_hash) % 1800,
                )
            )
            minute += 1
    return exchanges


def write_goldens(training: ItemBank, targets: ItemBank) -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    target = targets.passages[0]
    for strategy in (promptkit.PromptStrategy.STANDARD, promptkit.PromptStrategy.COT):
        for count in (4, 6):
            for code, inference_type in TYPE_BY_CODE.items():
                condition = promptkit.GenerationCondition(strategy, count, inference_type)
                bundle = promptkit.assemble_prompt(training, target, condition)
                path = GOLDEN / f"prompt_{inference_type.value}_{strategy.value}_{count}.txt"
                path.write_text(
                    bundle.system_text + "\n\n=== user ===\n\n" + bundle.user_text, encoding="utf-8"
                )


# ---------------------------------------------------------------------------
# Evaluation fixture
# ---------------------------------------------------------------------------


def plan_verdicts(runs: list[gateway.GenerationRun]) -> dict[str, dict]:
    """Assign each generated item its engineered final outcome."""
    plan: dict[str, dict] = {}
    by_condition: dict[str, list[gateway.GenerationRun]] = {}
    for run in runs:
        by_condition.setdefault(run.condition.name, []).append(run)

    for cond_name, cond_runs in by_condition.items():
        cond_items: list[str] = []
        for code in ("pb", "tc", "gf"):
            inference_type = TYPE_BY_CODE[code]
            type_items = [
                item.id
                for run in cond_runs
                if run.condition.target_type == inference_type
                for item in run.items
            ]
            matched_idx = spread(len(type_items), MATCHED[cond_name][code])
            others = [l for l in (InferenceType.PRONOMINAL_BRIDGING, InferenceType.TEXT_CONNECTING, InferenceType.GAP_FILLING) if l != inference_type]
            for idx, item_id in enumerate(type_items):
                if idx in matched_idx:
                    observed = AnnotationLabel(inference_type.value)
                else:
                    observed = None  # placeholder: factual or wrong type, assigned below
                plan[item_id] = {"requested": inference_type, "observed": observed, "alt": others}
            cond_items.extend(type_items)

        unmatched = [i for i in cond_items if plan[i]["observed"] is None]
        factual_idx = spread(len(unmatched), FACTUAL[cond_name])
        for idx, item_id in enumerate(unmatched):
            if idx in factual_idx:
                plan[item_id]["observed"] = AnnotationLabel.FACTUAL_LITERAL
            else:
                alt = plan[item_id]["alt"][idx % 2]
                plan[item_id]["observed"] = AnnotationLabel(alt.value)

        reject_idx = spread(len(cond_items), QUALITY_REJECTS[cond_name])
        for idx, item_id in enumerate(cond_items):
            plan[item_id]["quality"] = 0 if idx in reject_idx else 1

        if cond_name in REASONING_ACCEPTS:
            accept_idx = spread(len(cond_items), REASONING_ACCEPTS[cond_name])
            for idx, item_id in enumerate(cond_items):
                plan[item_id]["reasoning"] = 1 if idx in accept_idx else 0
        else:
            for item_id in cond_items:
                plan[item_id]["reasoning"] = None
    return plan


def build_rating_records(
    plan: dict[str, dict], rng: random.Random
) -> tuple[list[RatingRecord], list[RatingRecord]]:
    """Round-1 records with occasional lone dissents, plus the round-2
    resolutions. Majorities always carry the planned outcome."""
    round1: list[RatingRecord] = []
    round2: list[RatingRecord] = []

    def note_for(item_id: str) -> str:
        return QUALITY_NOTES[stable_int(item_id + "note") % len(QUALITY_NOTES)]

    for item_id, target in sorted(plan.items()):
        criteria: list[tuple[Criterion, object]] = [
            (Criterion.GENERAL_ITEM_QUALITY, target["quality"]),
            (Criterion.INFERENCE_TYPE_ACCURACY, target["observed"]),
        ]
        if target["reasoning"] is not None:
            criteria.append((Criterion.REASONING_QUALITY, target["reasoning"]))

        for criterion, planned in criteria:
            dissenter = rng.choice(RATERS) if rng.random() < 0.12 else None
            keeps = dissenter is not None and rng.random() < 0.3
            for rater in RATERS:
                if criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                    majority_label: AnnotationLabel = planned  # type: ignore[assignment]
                    if rater == dissenter:
                        other = [l for l in evalflow.EVALUATION_LABELS if l != majority_label]
                        label = other[stable_int(item_id + rater) % len(other)]
                    else:
                        label = majority_label
                    verdict = 1 if label.value == target["requested"].value else 0
                    round1.append(
                        RatingRecord(item_id, rater, criterion, verdict, observed_type=label, round=1)
                    )
                    if rater == dissenter:
                        final_label = label if keeps else majority_label
                        final_verdict = 1 if final_label.value == target["requested"].value else 0
                        round2.append(
                            RatingRecord(item_id, rater, criterion, final_verdict, observed_type=final_label, round=2)
                        )
                else:
                    majority: int = planned  # type: ignore[assignment]
                    verdict = (1 - majority) if rater == dissenter else majority
                    note = None
                    if criterion is Criterion.GENERAL_ITEM_QUALITY and verdict == 0:
                        note = note_for(item_id)
                    round1.append(RatingRecord(item_id, rater, criterion, verdict, note=note, round=1))
                    if rater == dissenter:
                        final = verdict if keeps else majority
                        note2 = note_for(item_id) if criterion is Criterion.GENERAL_ITEM_QUALITY and final == 0 else None
                        round2.append(RatingRecord(item_id, rater, criterion, final, note=note2, round=2))
    return round1, round2


def self_check(
    bank: ItemBank, runs: list[gateway.GenerationRun], round1: list[RatingRecord], round2: list[RatingRecord]
) -> evalflow.FinalVerdicts:
    session = evalflow.open_session(bank.items, RATERS, session_id="fixture-check")
    for record in round1:
        evalflow.submit_rating(session, record)
    evalflow.open_round2(session)
    queued = {(e.item_id, rater, e.criterion.value) for rater, entries in session.queues.items() for e in entries}
    submitted = {(r.item_id, r.rater_id, r.criterion.value) for r in round2}
    assert queued == submitted, f"queue/round2 mismatch: {len(queued)} queued vs {len(submitted)} submitted"
    for record in round2:
        evalflow.submit_rating(session, record)
    verdicts = evalflow.finalize(session)

    results = agreestats.condition_results(verdicts, runs)
    by_name = {row.condition: row for row in results.rows}
    expect = {
        "standard_4": (88, 82, 36), "standard_6": (89, 85, 41), "cot_4": (90, 81, 37), "cot_6": (90, 87, 38),
    }
    for name, (n, quality, inference) in expect.items():
        row = by_name[name]
        assert row.num_items == n, f"{name}: {row.num_items} items, expected {n}"
        assert round(row.quality_rate * n) == quality, f"{name} quality {row.quality_rate}"
        assert round(row.inference_accuracy * n) == inference, f"{name} inference {row.inference_accuracy}"
    total = results.total
    assert total.num_items == 357
    assert abs(total.quality_rate - 335 / 357) < 1e-12
    assert abs(total.inference_accuracy - 152 / 357) < 1e-12
    assert abs(total.reasoning_rate - 67 / 180) < 1e-12

    conf = agreestats.confusion(verdicts, runs, conditions=["standard_6"])
    assert abs(conf.match_rate(InferenceType.GAP_FILLING) - 18 / 30) < 1e-12
    assert abs(conf.match_rate(InferenceType.PRONOMINAL_BRIDGING) - 16 / 30) < 1e-12
    assert abs(conf.match_rate(InferenceType.TEXT_CONNECTING) - 7 / 29) < 1e-12
    full = agreestats.confusion(verdicts, runs)
    assert abs(full.observed_share(AnnotationLabel.FACTUAL_LITERAL) - 124 / 357) < 1e-12
    return verdicts


# ---------------------------------------------------------------------------
# Two-coder operational-bank annotation fixture
# ---------------------------------------------------------------------------

OPERATIONAL_MARGINALS = [
    (AnnotationLabel.PRONOMINAL_BRIDGING, 46),
    (AnnotationLabel.TEXT_CONNECTING, 19),
    (AnnotationLabel.GAP_FILLING, 17),
    (AnnotationLabel.PRONOMINAL, 15),
    (AnnotationLabel.FACTUAL_LITERAL, 58),
    (AnnotationLabel.VOCABULARY, 21),
    (AnnotationLabel.OTHER, 16),
]
OPERATIONAL_DIAGONAL = [40, 16, 14, 12, 50, 18, 15]  # 165 agreements


def build_coder_table() -> list[list[int]]:
    """7x7 contingency table with both marginals equal to the operational
    counts and the planned diagonal; off-diagonal cells filled greedily."""
    n = len(OPERATIONAL_MARGINALS)
    table = [[0] * n for _ in range(n)]
    row_rem = [OPERATIONAL_MARGINALS[i][1] - OPERATIONAL_DIAGONAL[i] for i in range(n)]
    col_rem = list(row_rem)
    for i in range(n):
        table[i][i] = OPERATIONAL_DIAGONAL[i]
        for step in range(1, n):
            j = (i + step) % n
            take = min(row_rem[i], col_rem[j])
            if take:
                table[i][j] += take
                row_rem[i] -= take
                col_rem[j] -= take
    assert sum(row_rem) == 0 and sum(col_rem) == 0, "infeasible off-diagonal fill"
    return table


def write_labels_fixture() -> None:
    table = build_coder_table()
    labels_dir = FIXTURES / "labels"
    labels_dir.mkdir(parents=True, exist_ok=True)
    records = []
    item_no = 0
    for i, (label_a, _) in enumerate(OPERATIONAL_MARGINALS):
        for j, (label_b, _) in enumerate(OPERATIONAL_MARGINALS):
            for _ in range(table[i][j]):
                item_no += 1
                item_id = f"op-{item_no:03d}"
                records.append({"coder_id": "c1", "item_id": item_id, "label": label_a.value})
                records.append({"coder_id": "c2", "item_id": item_id, "label": label_b.value})
    assert item_no == 192
    with open(labels_dir / "operational_labels.jsonl", "w", encoding="utf-8") as f:
        for record in sorted(records, key=lambda r: (r["item_id"], r["coder_id"])):
            f.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")

    agreements = sum(OPERATIONAL_DIAGONAL)
    products = sum(count * count for _, count in OPERATIONAL_MARGINALS)
    p_o = agreements / 192
    p_e = products / (192 * 192)
    kappa = (p_o - p_e) / (1 - p_e)
    assert abs(kappa - 0.83) <= 0.01, kappa
    verification = f"""# Two-coder fixture: hand verification

192 items, two coders, identical marginal counts:

| label | count |
|---|---|
""" + "".join(
        f"| {label.value} | {count} |\n" for label, count in OPERATIONAL_MARGINALS
    ) + f"""
Agreements (diagonal): {' + '.join(str(d) for d in OPERATIONAL_DIAGONAL)} = {agreements}

Observed agreement
    p_o = {agreements}/192 = {p_o:.6f}   (rounds to 0.86)

Expected agreement from marginal products
    sum of squared marginals = {' + '.join(str(c * c) for _, c in OPERATIONAL_MARGINALS)} = {products}
    p_e = {products}/192^2 = {products}/36864 = {p_e:.6f}

Chance-corrected agreement
    kappa = (p_o - p_e) / (1 - p_e)
          = ({p_o:.6f} - {p_e:.6f}) / (1 - {p_e:.6f})
          = {p_o - p_e:.6f} / {1 - p_e:.6f}
          = {kappa:.6f}

Coder c1's column doubles as the operational-bank distribution fixture:
46/192 = {46/192:.4f}, 19/192 = {19/192:.4f}, 17/192 = {17/192:.4f},
15/192 = {15/192:.4f}; bridging share (46+19+17+15)/192 = 97/192 = {97/192:.6f}.
The three non-inference counts (58/21/16) are this fixture's own convention;
only the four inference shares and the bridging total are pinned.
"""
    (labels_dir / "VERIFICATION.md").write_text(verification, encoding="utf-8")


# ---------------------------------------------------------------------------
# Small UI walkthrough fixture (10 items, 2 planted lone dissents)
# ---------------------------------------------------------------------------


def write_ui_fixture(bank: ItemBank, targets: ItemBank) -> None:
    ui_dir = FIXTURES / "ui_session"
    ui_dir.mkdir(parents=True, exist_ok=True)
    items = [i for i in bank.items if i.id.startswith("cot_6-")][:10]
    assert len(items) == 10 and all(i.text_hint and i.reasoning for i in items)

    session = evalflow.open_session(items, RATERS, session_id="ui-demo")
    round1: list[RatingRecord] = []
    for index, item in enumerate(items):
        for rater in RATERS:
            # planted dissent 1: rater-c alone rejects quality on item 0
            if index == 0 and rater == "rater-c":
                round1.append(RatingRecord(item.id, rater, Criterion.GENERAL_ITEM_QUALITY, 0, note="stem wording is confusing", round=1))
            else:
                round1.append(RatingRecord(item.id, rater, Criterion.GENERAL_ITEM_QUALITY, 1, round=1))
            # planted dissent 2: rater-a alone sees item 3 as factual/literal
            requested = AnnotationLabel(item.target_type.value)
            if index == 3 and rater == "rater-a":
                round1.append(RatingRecord(item.id, rater, Criterion.INFERENCE_TYPE_ACCURACY, 0, observed_type=AnnotationLabel.FACTUAL_LITERAL, round=1))
            else:
                round1.append(RatingRecord(item.id, rater, Criterion.INFERENCE_TYPE_ACCURACY, 1, observed_type=requested, round=1))
            round1.append(RatingRecord(item.id, rater, Criterion.REASONING_QUALITY, index % 2, round=1))
    for record in round1:
        evalflow.submit_rating(session, record)
    queues = evalflow.open_round2(session)
    assert sum(len(v) for v in queues.values()) == 2, queues
    assert len(queues["rater-c"]) == 1 and queues["rater-c"][0].criterion is Criterion.GENERAL_ITEM_QUALITY
    assert len(queues["rater-a"]) == 1 and queues["rater-a"][0].criterion is Criterion.INFERENCE_TYPE_ACCURACY

    # both dissenters accept the consensus in round 2
    round2 = [
        RatingRecord(items[0].id, "rater-c", Criterion.GENERAL_ITEM_QUALITY, 1, round=2),
        RatingRecord(items[3].id, "rater-a", Criterion.INFERENCE_TYPE_ACCURACY, 1, observed_type=AnnotationLabel(items[3].target_type.value), round=2),
    ]
    for record in round2:
        evalflow.submit_rating(session, record)
    verdicts = evalflow.finalize(session)

    from itemforge.corpus import _item_to_json, _passage_to_json  # noqa: PLC0415

    passage_ids = {i.passage_id for i in items}
    doc = {
        "session_id": "ui-demo",
        "raters": list(RATERS),
        "items": [_item_to_json(i) for i in items],
        "passages": [_passage_to_json(p) for p in targets.passages if p.id in passage_ids],
        "round1": [r.to_json() for r in round1],
        "round2": [r.to_json() for r in round2],
        "expected_queues": {rater: [e.to_json() for e in entries] for rater, entries in queues.items()},
        "expected_verdicts": verdicts.to_json(),
    }
    (ui_dir / "walkthrough.json").write_text(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")


def main() -> None:
    training = build_training_bank()
    targets = build_targets_bank()
    save_bank(training, DATA / "training_bank")
    save_bank(targets, DATA / "generation_targets")
    print(f"training bank: {len(training.passages)} passages, {len(training.items)} items")
    print(f"targets bank: {len(targets.passages)} passages")

    params = gateway.DecodeParams()
    exchanges = build_cassette(training, targets, params)
    cassette_path = DATA / "cassettes" / "demo.jsonl"
    cassette_path.parent.mkdir(parents=True, exist_ok=True)
    with open(cassette_path, "w", encoding="utf-8") as f:
        for exchange in exchanges:
            f.write(json.dumps(exchange.to_json(), sort_keys=True, ensure_ascii=False) + "\n")
    print(f"cassette: {len(exchanges)} exchanges")

    write_goldens(training, targets)
    print("golden prompts: 12 files")

    cassette = gateway.CassetteStore(cassette_path)
    runs = gateway.run_generation(
        training, targets.passages, demo_conditions(), params, gateway.GatewayMode.REPLAY, cassette=cassette
    )
    assert all(run.error is None for run in runs), [r.error for r in runs if r.error]
    counts = Counter(run.condition.name for run in runs)
    item_counts = Counter()
    for run in runs:
        item_counts[run.condition.name] += len(run.items)
    print(f"replayed runs: {dict(counts)} -> items {dict(item_counts)}")
    assert item_counts == {"standard_4": 88, "standard_6": 89, "cot_4": 90, "cot_6": 90}

    bank = gateway.generated_bank(runs, targets.passages)
    plan = plan_verdicts(runs)
    round1, round2 = build_rating_records(plan, random.Random(20250801))
    self_check(bank, runs, round1, round2)
    ratings_dir = FIXTURES / "ratings"
    ratings_dir.mkdir(parents=True, exist_ok=True)
    for name, records in (("round1.jsonl", round1), ("round2.jsonl", round2)):
        with open(ratings_dir / name, "w", encoding="utf-8") as f:
            for record in records:
                f.write(json.dumps(record.to_json(), sort_keys=True, ensure_ascii=False) + "\n")
    print(f"ratings fixture: {len(round1)} round-1 records, {len(round2)} round-2 records")

    write_labels_fixture()
    print("labels fixture: 192 items x 2 coders")

    write_ui_fixture(bank, targets)
    print("ui walkthrough fixture written")


if __name__ == "__main__":
    main()
