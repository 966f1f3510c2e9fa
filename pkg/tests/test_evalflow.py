from __future__ import annotations

import random

import pytest

from itemforge import evalflow
from itemforge.evalflow import (
    ClosedRoundError,
    Criterion,
    EvalError,
    InapplicableCriterionError,
    IncompleteQueueError,
    NotQueuedError,
    RatingInvalidError,
    RatingRecord,
    RoundNotReadyError,
    SessionState,
    adjudication_queue,
    finalize,
    open_round2,
    open_session,
    submit_rating,
)
from itemforge.taxonomy import EVALUATION_LABELS, AnnotationLabel, InferenceType

from conftest import make_item
from oracles import brute_adjudication_queues

RATERS = ("r1", "r2", "r3")
GF = AnnotationLabel.GAP_FILLING
TC = AnnotationLabel.TEXT_CONNECTING
FL = AnnotationLabel.FACTUAL_LITERAL
PBL = AnnotationLabel.PRONOMINAL_BRIDGING


def cot_item(i: int) -> "Item":
    return make_item(id=f"item-{i}", target_type=InferenceType.GAP_FILLING)


def standard_item(i: int) -> "Item":
    return make_item(id=f"item-{i}", text_hint=None, reasoning=None)


def quality(item_id, rater, verdict, round=1, note=None):
    if verdict == 0 and note is None:
        note = "distractor is arguably correct"
    return RatingRecord(item_id, rater, Criterion.GENERAL_ITEM_QUALITY, verdict, note=note, round=round)


def type_rating(item_id, rater, label, requested=GF, round=1):
    return RatingRecord(
        item_id, rater, Criterion.INFERENCE_TYPE_ACCURACY, int(label.value == requested.value), observed_type=label, round=round
    )


def reasoning(item_id, rater, verdict, round=1):
    return RatingRecord(item_id, rater, Criterion.REASONING_QUALITY, verdict, round=round)


def fill_round1(session, quality_verdicts=None, labels=None, reasoning_verdicts=None):
    """Submit a complete unanimous round 1 unless overridden per item."""
    for snapshot in session.items:
        for rater in session.rater_ids:
            q = (quality_verdicts or {}).get((snapshot.item_id, rater), 1)
            submit_rating(session, quality(snapshot.item_id, rater, q))
            label = (labels or {}).get((snapshot.item_id, rater), AnnotationLabel(snapshot.target_type.value))
            submit_rating(session, type_rating(snapshot.item_id, rater, label, requested=AnnotationLabel(snapshot.target_type.value)))
            if snapshot.reasoning_applicable:
                r = (reasoning_verdicts or {}).get((snapshot.item_id, rater), 1)
                submit_rating(session, reasoning(snapshot.item_id, rater, r))


class TestRatingValidation:
    def test_quality_zero_requires_note(self):
        with pytest.raises(RatingInvalidError, match="note"):
            RatingRecord("i", "r", Criterion.GENERAL_ITEM_QUALITY, 0).to_json and evalflow.validate_rating(
                RatingRecord("i", "r", Criterion.GENERAL_ITEM_QUALITY, 0)
            )

    def test_quality_one_must_not_carry_note(self):
        with pytest.raises(RatingInvalidError, match="must not carry"):
            evalflow.validate_rating(RatingRecord("i", "r", Criterion.GENERAL_ITEM_QUALITY, 1, note="but..."))

    def test_type_rating_requires_observed_label(self):
        with pytest.raises(RatingInvalidError, match="observed type"):
            evalflow.validate_rating(RatingRecord("i", "r", Criterion.INFERENCE_TYPE_ACCURACY, 1))

    def test_observed_label_restricted_to_evaluation_set(self):
        with pytest.raises(RatingInvalidError):
            evalflow.validate_rating(
                RatingRecord("i", "r", Criterion.INFERENCE_TYPE_ACCURACY, 0, observed_type=AnnotationLabel.VOCABULARY)
            )

    def test_binary_criteria_reject_observed_type(self):
        with pytest.raises(RatingInvalidError):
            evalflow.validate_rating(RatingRecord("i", "r", Criterion.REASONING_QUALITY, 1, observed_type=GF))


class TestOpenSession:
    def test_full_triple_design(self):
        items = [cot_item(i) for i in range(4)] + [standard_item(i) for i in range(4, 6)]
        session = open_session(items, RATERS)
        assert session.state is SessionState.ROUND1_OPEN
        pending = evalflow.missing_round1(session)
        # 6 items x 2 criteria x 3 raters + 4 CoT items x reasoning x 3
        assert len(pending) == 6 * 2 * 3 + 4 * 3

    def test_empty_session_valid(self):
        session = open_session([], RATERS)
        assert session.items == []
        assert evalflow.missing_round1(session) == []

    def test_two_raters_rejected(self):
        with pytest.raises(EvalError, match="exactly 3"):
            open_session([cot_item(0)], ("a", "b"))

    def test_duplicate_raters_rejected(self):
        with pytest.raises(EvalError, match="distinct"):
            open_session([cot_item(0)], ("a", "a", "b"))

    def test_reasoning_enabled_only_with_cot_fields(self):
        session = open_session([cot_item(0), standard_item(1)], RATERS)
        by_id = {s.item_id: s for s in session.items}
        assert by_id["item-0"].reasoning_applicable is True
        assert by_id["item-1"].reasoning_applicable is False


class TestSubmitRating:
    def test_overwrite_within_open_round(self):
        session = open_session([cot_item(0)], RATERS)
        submit_rating(session, quality("item-0", "r1", 1))
        submit_rating(session, quality("item-0", "r1", 0, note="stem is confusing"))
        assert session.round1[("item-0", "r1", Criterion.GENERAL_ITEM_QUALITY.value)].verdict == 0

    def test_reasoning_on_standard_item_inapplicable(self):
        session = open_session([standard_item(0)], RATERS)
        with pytest.raises(InapplicableCriterionError):
            submit_rating(session, reasoning("item-0", "r1", 1))

    def test_round2_while_round1_open_rejected(self):
        session = open_session([cot_item(0)], RATERS)
        with pytest.raises(ClosedRoundError):
            submit_rating(session, quality("item-0", "r1", 1, round=2))

    def test_unknown_rater_rejected(self):
        session = open_session([cot_item(0)], RATERS)
        with pytest.raises(evalflow.UnknownRaterError):
            submit_rating(session, quality("item-0", "intruder", 1))

    def test_unknown_item_rejected(self):
        session = open_session([cot_item(0)], RATERS)
        with pytest.raises(evalflow.UnknownItemError):
            submit_rating(session, quality("item-99", "r1", 1))

    def test_round1_closed_after_round2_opens(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session)
        open_round2(session)
        with pytest.raises(ClosedRoundError):
            submit_rating(session, quality("item-0", "r1", 1, round=1))

    def test_round2_only_for_queued_entries(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session)
        open_round2(session)
        with pytest.raises(NotQueuedError):
            submit_rating(session, quality("item-0", "r1", 0, round=2, note="x"))


class TestAdjudicationQueue:
    def test_lone_dissenter_on_binary(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, quality_verdicts={("item-0", "r1"): 1, ("item-0", "r2"): 0, ("item-0", "r3"): 0})
        queues = open_round2(session)
        assert [e.item_id for e in queues["r1"]] == ["item-0"]
        assert queues["r2"] == [] and queues["r3"] == []
        entry = queues["r1"][0]
        assert entry.own_rating == "1" and entry.others_agree_on == "0"

    def test_two_one_split_on_types(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, labels={("item-0", "r1"): GF, ("item-0", "r2"): GF, ("item-0", "r3"): TC})
        queues = open_round2(session)
        assert queues["r1"] == [] and queues["r2"] == []
        assert [e.item_id for e in queues["r3"]] == ["item-0"]
        assert queues["r3"][0].others_agree_on == "gap_filling"

    def test_three_way_split_queues_everyone(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, labels={("item-0", "r1"): GF, ("item-0", "r2"): TC, ("item-0", "r3"): FL})
        queues = open_round2(session)
        for rater in RATERS:
            assert [e.item_id for e in queues[rater]] == ["item-0"]
            assert queues[rater][0].others_agree_on is None

    def test_queue_requires_complete_round1(self):
        session = open_session([standard_item(0)], RATERS)
        submit_rating(session, quality("item-0", "r1", 1))
        with pytest.raises(RoundNotReadyError) as err:
            open_round2(session)
        assert len(err.value.missing) == 5
        with pytest.raises(RoundNotReadyError):
            adjudication_queue(session, "r1")

    def test_unanimous_round1_empty_queues(self):
        session = open_session([cot_item(i) for i in range(5)], RATERS)
        fill_round1(session)
        queues = open_round2(session)
        assert all(entries == [] for entries in queues.values())
        verdicts = finalize(session)
        assert len(verdicts.per_item) == 5

    def test_three_way_binary_split_impossible(self):
        # binary values over 3 raters always have a 2-1 or 3-0 pattern,
        # so at most one rater is ever queued per binary criterion
        rng = random.Random(5)
        for _ in range(50):
            session = open_session([standard_item(0)], RATERS)
            verdicts = {("item-0", r): rng.randint(0, 1) for r in RATERS}
            fill_round1(session, quality_verdicts=verdicts)
            queues = open_round2(session)
            assert sum(len(q) for q in queues.values()) <= 2  # quality + type criteria


class TestFinalize:
    def test_majority_quality(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, quality_verdicts={("item-0", "r1"): 1, ("item-0", "r2"): 1, ("item-0", "r3"): 0})
        open_round2(session)
        submit_rating(session, quality("item-0", "r3", 0, round=2, note="still confusing"))
        verdicts = finalize(session)
        assert verdicts.per_item["item-0"].accepted_quality == 1

    def test_majority_label(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, labels={("item-0", "r1"): GF, ("item-0", "r2"): GF, ("item-0", "r3"): FL})
        open_round2(session)
        submit_rating(session, type_rating("item-0", "r3", FL, round=2))  # keeps own rating
        verdicts = finalize(session)
        assert verdicts.per_item["item-0"].final_observed_type is GF
        assert verdicts.per_item["item-0"].matched_type == 1

    def test_all_distinct_after_round2_unresolved(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, labels={("item-0", "r1"): GF, ("item-0", "r2"): TC, ("item-0", "r3"): FL})
        open_round2(session)
        for rater, label in (("r1", GF), ("r2", TC), ("r3", FL)):
            submit_rating(session, type_rating("item-0", rater, label, round=2))
        verdicts = finalize(session)
        assert verdicts.per_item["item-0"].final_observed_type is None

    def test_round2_value_overrides_round1(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, labels={("item-0", "r1"): TC, ("item-0", "r2"): TC, ("item-0", "r3"): GF})
        open_round2(session)
        submit_rating(session, type_rating("item-0", "r3", TC, round=2))
        verdicts = finalize(session)
        assert verdicts.per_item["item-0"].final_observed_type is TC
        # requested type was gap_filling, so the unanimous TC majority fails the match
        assert verdicts.per_item["item-0"].matched_type == 0

    def test_incomplete_queue_blocks(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session, quality_verdicts={("item-0", "r3"): 0})
        open_round2(session)
        with pytest.raises(IncompleteQueueError):
            finalize(session)

    def test_finalize_before_round2_blocks(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session)
        with pytest.raises(ClosedRoundError):
            finalize(session)

    def test_reasoning_not_applicable_for_standard_items(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session)
        open_round2(session)
        verdicts = finalize(session)
        assert verdicts.per_item["item-0"].reasoning_ok is None

    def test_finalize_idempotent(self):
        session = open_session([standard_item(0)], RATERS)
        fill_round1(session)
        open_round2(session)
        first = finalize(session)
        assert finalize(session) is first
        assert session.state is SessionState.FINALIZED


def random_session_run(rng: random.Random, n_items=6):
    items = [standard_item(i) if rng.random() < 0.5 else cot_item(i) for i in range(n_items)]
    session = open_session(items, RATERS)
    quality_verdicts = {}
    labels = {}
    reasoning_verdicts = {}
    for snapshot in session.items:
        for rater in RATERS:
            quality_verdicts[(snapshot.item_id, rater)] = rng.randint(0, 1)
            labels[(snapshot.item_id, rater)] = rng.choice(EVALUATION_LABELS)
            reasoning_verdicts[(snapshot.item_id, rater)] = rng.randint(0, 1)
    fill_round1(session, quality_verdicts, labels, reasoning_verdicts)
    return session, quality_verdicts, labels, reasoning_verdicts


class TestQueueSoundness:
    def test_matches_brute_force_on_random_sessions(self):
        rng = random.Random(42)
        for _ in range(120):
            session, quality_verdicts, labels, reasoning_verdicts = random_session_run(rng)
            queues = open_round2(session)
            items = [s.item_id for s in session.items]
            expected_quality = brute_adjudication_queues(
                RATERS, {(i, r): str(quality_verdicts[(i, r)]) for i in items for r in RATERS}, items, label_valued=False
            )
            expected_types = brute_adjudication_queues(
                RATERS, {(i, r): labels[(i, r)].value for i in items for r in RATERS}, items, label_valued=True
            )
            for rater in RATERS:
                got_quality = {e.item_id for e in queues[rater] if e.criterion is Criterion.GENERAL_ITEM_QUALITY}
                got_types = {e.item_id for e in queues[rater] if e.criterion is Criterion.INFERENCE_TYPE_ACCURACY}
                assert got_quality == expected_quality[rater]
                assert got_types == expected_types[rater]

    def test_binary_queue_never_contains_majority_holder(self):
        rng = random.Random(7)
        for _ in range(60):
            session, quality_verdicts, _, _ = random_session_run(rng, n_items=4)
            queues = open_round2(session)
            for rater in RATERS:
                for entry in queues[rater]:
                    if entry.criterion is Criterion.GENERAL_ITEM_QUALITY:
                        others = [quality_verdicts[(entry.item_id, o)] for o in RATERS if o != rater]
                        assert others[0] == others[1]
                        assert quality_verdicts[(entry.item_id, rater)] != others[0]


class TestPermutationInvariance:
    def test_rater_relabeling_preserves_verdicts(self):
        rng = random.Random(11)
        session, quality_verdicts, labels, reasoning_verdicts = random_session_run(rng)
        open_round2(session)
        for rater, entries in session.queues.items():
            for entry in entries:
                if entry.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                    snapshot = session.item(entry.item_id)
                    submit_rating(session, type_rating(entry.item_id, rater, labels[(entry.item_id, rater)], requested=AnnotationLabel(snapshot.target_type.value), round=2))
                elif entry.criterion is Criterion.GENERAL_ITEM_QUALITY:
                    submit_rating(session, quality(entry.item_id, rater, quality_verdicts[(entry.item_id, rater)], round=2))
                else:
                    submit_rating(session, reasoning(entry.item_id, rater, reasoning_verdicts[(entry.item_id, rater)], round=2))
        baseline = finalize(session)

        # replay the same ratings under permuted rater names
        mapping = {"r1": "r3", "r2": "r1", "r3": "r2"}
        rng2 = random.Random(11)
        items = [standard_item(i) if rng2.random() < 0.5 else cot_item(i) for i in range(6)]
        permuted = open_session(items, RATERS)
        q2 = {(i, mapping[r]): v for (i, r), v in quality_verdicts.items()}
        l2 = {(i, mapping[r]): v for (i, r), v in labels.items()}
        rv2 = {(i, mapping[r]): v for (i, r), v in reasoning_verdicts.items()}
        fill_round1(permuted, q2, l2, rv2)
        open_round2(permuted)
        for rater, entries in permuted.queues.items():
            for entry in entries:
                if entry.criterion is Criterion.INFERENCE_TYPE_ACCURACY:
                    snapshot = permuted.item(entry.item_id)
                    submit_rating(permuted, type_rating(entry.item_id, rater, l2[(entry.item_id, rater)], requested=AnnotationLabel(snapshot.target_type.value), round=2))
                elif entry.criterion is Criterion.GENERAL_ITEM_QUALITY:
                    submit_rating(permuted, quality(entry.item_id, rater, q2[(entry.item_id, rater)], round=2))
                else:
                    submit_rating(permuted, reasoning(entry.item_id, rater, rv2[(entry.item_id, rater)], round=2))
        assert finalize(permuted).to_json() == baseline.to_json()


class TestPersistence:
    def test_session_round_trip(self, tmp_path):
        session = open_session([cot_item(0), standard_item(1)], RATERS)
        fill_round1(session, quality_verdicts={("item-0", "r2"): 0})
        open_round2(session)
        evalflow.save_session(session, tmp_path)
        loaded = evalflow.load_session(tmp_path / session.session_id)
        assert loaded.state is SessionState.ROUND2_OPEN
        assert loaded.round1 == session.round1
        assert loaded.queues == session.queues
        assert [s.item_id for s in loaded.items] == [s.item_id for s in session.items]

    def test_corrupted_session_file_raises(self, tmp_path):
        session_dir = tmp_path / "bad"
        session_dir.mkdir()
        (session_dir / "session.json").write_text("{ not json", encoding="utf-8")
        with pytest.raises(EvalError, match="corrupted"):
            evalflow.load_session(session_dir)

    def test_export_import_round_trip(self, tmp_path):
        session = open_session([cot_item(0)], RATERS)
        fill_round1(session, quality_verdicts={("item-0", "r3"): 0})
        path = tmp_path / "ratings.jsonl"
        count = evalflow.export_ratings(session, path, rounds=(1,))
        assert count == len(session.round1)
        replica = open_session([cot_item(0)], RATERS)
        assert evalflow.import_ratings(replica, path) == count
        assert replica.round1 == session.round1
