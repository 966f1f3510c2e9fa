"""End-to-end acceptance suite.

Each test is one release criterion, run at its stated tolerance against the
bundled fixtures; the terminal summary prints one PASS/FAIL line per
criterion. The heavyweight pipeline (replay generation, the full two-round
rating session, and the report build) runs once per session and is shared.
"""

from __future__ import annotations

import filecmp
import json
import random
import time
from pathlib import Path

import pytest
from click.testing import CliRunner

from itemforge import agreestats, evalflow, gateway
from itemforge.agreestats import DegenerateMarginalsError, cohen_kappa, fleiss_kappa, matrix_from_columns, percent_agreement
from itemforge.cli import main
from itemforge.corpus import load_training_bank
from itemforge.evalflow import Criterion, RatingRecord
from itemforge.taxonomy import EVALUATION_LABELS, AnnotationLabel, InferenceType, load_labels

from conftest import FIXTURES, GOLDEN, REPO, make_item
from oracles import brute_adjudication_queues, brute_cohen_kappa, brute_fleiss_kappa

RATERS = ("rater-a", "rater-b", "rater-c")


def invoke(runner: CliRunner, args: list[str]) -> str:
    result = runner.invoke(main, args, catch_exceptions=False)
    assert result.exit_code == 0, f"{' '.join(args)}\n{result.output}"
    return result.output


@pytest.fixture(scope="session")
def pipeline(tmp_path_factory) -> dict:
    """Replay generation twice, run the full rating session from the
    bundled fixture, and build the report; shared by several criteria."""
    base = tmp_path_factory.mktemp("acceptance")
    runner = CliRunner()

    timings: dict[str, float] = {}
    started = time.monotonic()
    first = invoke(runner, ["generate", "--mode", "replay", "--out", str(base / "exec1"), "--format", "json"])
    timings["generate"] = time.monotonic() - started
    second = invoke(runner, ["generate", "--mode", "replay", "--out", str(base / "exec2"), "--format", "json"])

    sessions = base / "sessions"
    invoke(
        runner,
        [
            "eval", "init",
            "--items", str(base / "exec1" / "generated_bank"),
            "--raters", ",".join(RATERS),
            "--session-dir", str(sessions),
            "--session-id", "demo",
        ],
    )
    session_path = sessions / "demo"
    invoke(runner, ["eval", "import", "--session", str(session_path), "--ratings", str(FIXTURES / "ratings" / "round1.jsonl")])
    invoke(runner, ["eval", "open-round2", "--session", str(session_path)])
    invoke(runner, ["eval", "import", "--session", str(session_path), "--ratings", str(FIXTURES / "ratings" / "round2.jsonl")])
    invoke(runner, ["eval", "finalize", "--session", str(session_path)])

    stats_args = [
        "stats",
        "--session", str(session_path),
        "--runs", str(base / "exec1" / "runs"),
        "--labels", str(FIXTURES / "labels" / "operational_labels.jsonl"),
        "--out", str(base / "report"),
    ]
    started = time.monotonic()
    invoke(runner, stats_args)
    timings["stats"] = time.monotonic() - started
    invoke(runner, ["stats", "--session", str(session_path), "--runs", str(base / "exec1" / "runs"),
                    "--labels", str(FIXTURES / "labels" / "operational_labels.jsonl"), "--out", str(base / "report2")])

    return {
        "base": base,
        "first_summary": json.loads(first),
        "second_summary": json.loads(second),
        "report": json.loads((base / "report" / "report.json").read_text(encoding="utf-8")),
        "report_dir": base / "report",
        "report_dir2": base / "report2",
        "session_path": session_path,
        "timings": timings,
    }


def test_table4_reproduction(pipeline):
    """Bundled ratings fixture reproduces the published Total-row
    proportions via cmd_stats, each within one thousandth."""
    total = pipeline["report"]["conditions"]["total"]
    assert total["num_items"] == 357
    assert abs(total["quality_rate"] - 0.938) <= 0.001
    assert abs(total["inference_accuracy"] - 0.426) <= 0.001
    assert abs(total["reasoning_rate"] - 0.372) <= 0.001
    rows = {row["condition"]: row for row in pipeline["report"]["conditions"]["rows"]}
    assert rows["standard_6"]["num_items"] == 89
    assert abs(rows["standard_6"]["quality_rate"] - 0.955) <= 0.001
    assert abs(rows["standard_6"]["inference_accuracy"] - 0.461) <= 0.001
    report_md = (pipeline["report_dir"] / "report.md").read_text(encoding="utf-8")
    assert "| Total | 357 | 0.938 | 0.426 | 0.372 |" in report_md
    assert pipeline["timings"]["stats"] < 5.0, f"stats took {pipeline['timings']['stats']:.2f}s"


def test_section32_two_coder_reproduction():
    """Two-coder fixture over 192 items: 86% agreement, kappa 0.83 +- 0.01,
    with the hand computation committed alongside the fixture."""
    records = load_labels(FIXTURES / "labels" / "operational_labels.jsonl")
    by_coder: dict[str, dict[str, str]] = {"c1": {}, "c2": {}}
    for record in records:
        by_coder[record.coder_id][record.item_id] = record.label.value
    items = sorted(by_coder["c1"])
    assert len(items) == 192
    matrix = matrix_from_columns({"c1": [by_coder["c1"][i] for i in items], "c2": [by_coder["c2"][i] for i in items]})

    agreement = percent_agreement(matrix, ("c1", "c2"))
    assert agreement == 165 / 192
    assert round(agreement, 2) == 0.86
    kappa = cohen_kappa(matrix, ("c1", "c2"))
    assert abs(kappa - 0.83) <= 0.01

    # independent hand computation from the marginal counts alone
    from collections import Counter

    marginals_a = Counter(by_coder["c1"].values())
    marginals_b = Counter(by_coder["c2"].values())
    assert marginals_a == marginals_b
    products = sum(marginals_a[label] * marginals_b[label] for label in marginals_a)
    assert products == 7052
    p_e = products / (192 * 192)
    hand_kappa = (165 / 192 - p_e) / (1 - p_e)
    assert kappa == pytest.approx(hand_kappa, abs=1e-12)

    verification = (FIXTURES / "labels" / "VERIFICATION.md").read_text(encoding="utf-8")
    assert "7052/36864" in verification
    assert f"{hand_kappa:.6f}" in verification


def test_statistics_oracle_equivalence():
    """Cohen and Fleiss match the brute-force definitional implementations
    to 1e-12 on at least 1,000 random matrices, in under 30 seconds."""
    rng = random.Random(987654321)
    started = time.monotonic()
    checked = 0
    while checked < 1000:
        n_items = rng.randint(2, 12)
        cols = {f"r{k}": [rng.choice("ABCD") for _ in range(n_items)] for k in range(3)}
        matrix = matrix_from_columns(cols)
        try:
            ours_fleiss = fleiss_kappa(matrix)
            ours_cohen = cohen_kappa(matrix, ("r0", "r1"))
        except DegenerateMarginalsError:
            continue
        assert abs(ours_fleiss - brute_fleiss_kappa(cols)) < 1e-12
        assert abs(ours_cohen - brute_cohen_kappa(cols["r0"], cols["r1"])) < 1e-12
        checked += 1
    elapsed = time.monotonic() - started
    assert checked >= 1000
    assert elapsed < 30.0, f"oracle equivalence took {elapsed:.1f}s"


def test_confusion_reproduction(pipeline):
    """standard_6 match rates and the overall factual/literal share match
    the published figures."""
    session = evalflow.load_session(pipeline["session_path"])
    runs = gateway.load_runs(pipeline["base"] / "exec1" / "runs")
    conf = agreestats.confusion(session.verdicts, runs, conditions=["standard_6"])
    assert abs(conf.match_rate(InferenceType.GAP_FILLING) - 0.60) <= 0.001
    assert abs(conf.match_rate(InferenceType.PRONOMINAL_BRIDGING) - 0.533) <= 0.001
    assert abs(conf.match_rate(InferenceType.TEXT_CONNECTING) - 0.241) <= 0.001
    full = agreestats.confusion(session.verdicts, runs)
    assert abs(full.observed_share(AnnotationLabel.FACTUAL_LITERAL) - 0.348) <= 0.005
    csv_text = (pipeline["report_dir"] / "confusion.csv").read_text(encoding="utf-8")
    assert csv_text.splitlines()[0] == "requested_type,observed_label,count"


def test_prompt_golden_suite(targets_bank):
    """All 12 assembled prompts byte-match their committed golden files;
    strategy and no-force markers appear exactly where required."""
    from itemforge.promptkit import NO_FORCE_RULE, GenerationCondition, PromptStrategy, assemble_prompt

    training = load_training_bank()
    target = targets_bank.passages[0]
    checked = 0
    for strategy in (PromptStrategy.STANDARD, PromptStrategy.COT):
        for count in (4, 6):
            for target_type in (InferenceType.PRONOMINAL_BRIDGING, InferenceType.TEXT_CONNECTING, InferenceType.GAP_FILLING):
                bundle = assemble_prompt(training, target, GenerationCondition(strategy, count, target_type))
                rendered = bundle.system_text + "\n\n=== user ===\n\n" + bundle.user_text
                golden = GOLDEN / f"prompt_{target_type.value}_{strategy.value}_{count}.txt"
                assert rendered == golden.read_text(encoding="utf-8"), f"golden drift: {golden.name}"
                if strategy is PromptStrategy.COT:
                    assert "Text Hint:" in bundle.system_text and "Reasoning:" in bundle.system_text
                else:
                    assert "Text Hint:" not in bundle.system_text and "Reasoning:" not in bundle.system_text
                if target_type is InferenceType.PRONOMINAL_BRIDGING:
                    assert NO_FORCE_RULE not in bundle.system_text
                else:
                    assert NO_FORCE_RULE in bundle.system_text
                checked += 1
    assert checked == 12


def test_replay_determinism(pipeline):
    """Two replay executions produce the published per-condition counts and
    byte-identical run artifacts."""
    for summary in (pipeline["first_summary"], pipeline["second_summary"]):
        assert summary["items_per_condition"] == {"standard_4": 88, "standard_6": 89, "cot_4": 90, "cot_6": 90}
        assert summary["errors"] == []

    first_runs = pipeline["base"] / "exec1" / "runs"
    second_runs = pipeline["base"] / "exec2" / "runs"
    first_files = sorted(p.relative_to(first_runs) for p in first_runs.rglob("*") if p.is_file())
    second_files = sorted(p.relative_to(second_runs) for p in second_runs.rglob("*") if p.is_file())
    assert first_files == second_files and len(first_files) == 120 * 2
    for rel in first_files:
        assert filecmp.cmp(first_runs / rel, second_runs / rel, shallow=False), f"artifact differs: {rel}"
    for name in ("passages.jsonl", "items.jsonl", "manifest.json"):
        assert filecmp.cmp(
            pipeline["base"] / "exec1" / "generated_bank" / name,
            pipeline["base"] / "exec2" / "generated_bank" / name,
            shallow=False,
        )
    # report emission is deterministic too
    for name in ("report.json", "report.md", "confusion.csv", "coverage.csv"):
        assert filecmp.cmp(pipeline["report_dir"] / name, pipeline["report_dir2"] / name, shallow=False)


def test_training_bank_integrity():
    """Bundled bank: exactly 19 + 23 + 16 items over 6 passages, every
    passage length inside the documented range."""
    bank = load_training_bank()
    assert len(bank.passages) == 6
    counts = {t: 0 for t in InferenceType}
    for item in bank.items:
        counts[item.target_type] += 1
    assert counts[InferenceType.PRONOMINAL_BRIDGING] == 19
    assert counts[InferenceType.GAP_FILLING] == 23
    assert counts[InferenceType.TEXT_CONNECTING] == 16
    assert len(bank.items) == 58
    for passage in bank.passages:
        assert 342 <= passage.word_count <= 508, f"{passage.id}: {passage.word_count} words"


def test_workflow_properties():
    """10,000 randomized rating assignments: queues match a brute-force
    lone-dissenter check, finalization is rater-permutation invariant, and
    unanimous sessions finalize with empty queues. Under 60 seconds."""
    rng = random.Random(24680)
    started = time.monotonic()
    assignments = 0
    sessions_run = 0
    while assignments < 10_000:
        sessions_run += 1
        unanimous = sessions_run % 10 == 0
        n_items = rng.randint(3, 10)
        items = [
            make_item(id=f"x{i}", text_hint=None if rng.random() < 0.5 else "hint",
                      reasoning=None if rng.random() < 0.5 else "because")
            for i in range(n_items)
        ]
        # an item is CoT only when both fields are present
        items = [i for i in items if bool(i.text_hint) == bool(i.reasoning)] or [make_item(id="x0")]

        quality_votes: dict[tuple[str, str], int] = {}
        label_votes: dict[tuple[str, str], AnnotationLabel] = {}
        reasoning_votes: dict[tuple[str, str], int] = {}
        session = evalflow.open_session(items, RATERS)
        for snapshot in session.items:
            shared_q = rng.randint(0, 1)
            shared_l = rng.choice(EVALUATION_LABELS)
            shared_r = rng.randint(0, 1)
            for rater in RATERS:
                q = shared_q if unanimous else rng.randint(0, 1)
                l = shared_l if unanimous else rng.choice(EVALUATION_LABELS)
                r = shared_r if unanimous else rng.randint(0, 1)
                quality_votes[(snapshot.item_id, rater)] = q
                label_votes[(snapshot.item_id, rater)] = l
                reasoning_votes[(snapshot.item_id, rater)] = r
                note = "planted deficiency" if q == 0 else None
                evalflow.submit_rating(session, RatingRecord(snapshot.item_id, rater, Criterion.GENERAL_ITEM_QUALITY, q, note=note, round=1))
                evalflow.submit_rating(
                    session,
                    RatingRecord(snapshot.item_id, rater, Criterion.INFERENCE_TYPE_ACCURACY,
                                 int(l.value == snapshot.target_type.value), observed_type=l, round=1),
                )
                assignments += 2
                if snapshot.reasoning_applicable:
                    evalflow.submit_rating(session, RatingRecord(snapshot.item_id, rater, Criterion.REASONING_QUALITY, r, round=1))
                    assignments += 1

        queues = evalflow.open_round2(session)
        item_ids = [s.item_id for s in session.items]
        expected_quality = brute_adjudication_queues(
            RATERS, {(i, r): str(quality_votes[(i, r)]) for i in item_ids for r in RATERS}, item_ids, label_valued=False
        )
        expected_labels = brute_adjudication_queues(
            RATERS, {(i, r): label_votes[(i, r)].value for i in item_ids for r in RATERS}, item_ids, label_valued=True
        )
        for rater in RATERS:
            got_q = {e.item_id for e in queues[rater] if e.criterion is Criterion.GENERAL_ITEM_QUALITY}
            got_l = {e.item_id for e in queues[rater] if e.criterion is Criterion.INFERENCE_TYPE_ACCURACY}
            assert got_q == expected_quality[rater]
            assert got_l == expected_labels[rater]

        if unanimous:
            assert all(not entries for entries in queues.values())
            verdicts = evalflow.finalize(session)
            assert len(verdicts.per_item) == len(session.items)
            continue

        def resolve(target_session):
            for rater, entries in target_session.queues.items():
                for entry in entries:
                    snapshot = target_session.item(entry.item_id)
                    if entry.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                        label = label_votes[(entry.item_id, rater)]
                        record = RatingRecord(entry.item_id, rater, entry.criterion,
                                              int(label.value == snapshot.target_type.value), observed_type=label, round=2)
                    elif entry.criterion is Criterion.GENERAL_ITEM_QUALITY:
                        q = quality_votes[(entry.item_id, rater)]
                        record = RatingRecord(entry.item_id, rater, entry.criterion, q,
                                              note="planted deficiency" if q == 0 else None, round=2)
                    else:
                        record = RatingRecord(entry.item_id, rater, entry.criterion, reasoning_votes[(entry.item_id, rater)], round=2)
                    evalflow.submit_rating(target_session, record)

        resolve(session)
        baseline = evalflow.finalize(session).to_json()

        # relabel raters cyclically and replay the identical rating history
        mapping = dict(zip(RATERS, RATERS[1:] + RATERS[:1]))
        permuted = evalflow.open_session(items, RATERS)
        for snapshot in permuted.items:
            for rater in RATERS:
                source = next(r for r in RATERS if mapping[r] == rater)
                q = quality_votes[(snapshot.item_id, source)]
                l = label_votes[(snapshot.item_id, source)]
                evalflow.submit_rating(permuted, RatingRecord(snapshot.item_id, rater, Criterion.GENERAL_ITEM_QUALITY, q,
                                                              note="planted deficiency" if q == 0 else None, round=1))
                evalflow.submit_rating(permuted, RatingRecord(snapshot.item_id, rater, Criterion.INFERENCE_TYPE_ACCURACY,
                                                              int(l.value == snapshot.target_type.value), observed_type=l, round=1))
                if snapshot.reasoning_applicable:
                    evalflow.submit_rating(permuted, RatingRecord(snapshot.item_id, rater, Criterion.REASONING_QUALITY,
                                                                  reasoning_votes[(snapshot.item_id, source)], round=1))
        evalflow.open_round2(permuted)
        for rater, entries in permuted.queues.items():
            source = next(r for r in RATERS if mapping[r] == rater)
            for entry in entries:
                snapshot = permuted.item(entry.item_id)
                if entry.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                    label = label_votes[(entry.item_id, source)]
                    record = RatingRecord(entry.item_id, rater, entry.criterion,
                                          int(label.value == snapshot.target_type.value), observed_type=label, round=2)
                elif entry.criterion is Criterion.GENERAL_ITEM_QUALITY:
                    q = quality_votes[(entry.item_id, source)]
                    record = RatingRecord(entry.item_id, rater, entry.criterion, q,
                                          note="planted deficiency" if q == 0 else None, round=2)
                else:
                    record = RatingRecord(entry.item_id, rater, entry.criterion, reasoning_votes[(entry.item_id, source)], round=2)
                evalflow.submit_rating(permuted, record)
        assert evalflow.finalize(permuted).to_json() == baseline

    elapsed = time.monotonic() - started
    assert assignments >= 10_000
    assert elapsed < 60.0, f"workflow properties took {elapsed:.1f}s over {sessions_run} sessions"
