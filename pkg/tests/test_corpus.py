from __future__ import annotations

import json

import pytest

from itemforge.corpus import (
    BankIntegrityError,
    BankParseError,
    BankValidationError,
    Item,
    count_words,
    load_bank,
    normalize_option,
    save_bank,
    validate_item,
)
from itemforge.taxonomy import InferenceType

from conftest import make_bank, make_item, make_passage


class TestWordCount:
    def test_whitespace_tokens(self):
        assert count_words("one two  three\nfour\tfive") == 5

    def test_hyphenated_counts_once(self):
        assert count_words("a well-known fact") == 3

    def test_unicode_whitespace(self):
        assert count_words("a b c") == 3


class TestOptionNormalization:
    def test_trim_and_collapse(self):
        assert normalize_option("  a   b ") == "a b"

    def test_case_sensitive(self):
        assert normalize_option("Paris") != normalize_option("paris")


class TestValidateItem:
    def test_well_formed(self):
        assert validate_item(make_item()) == []

    def test_duplicate_options_after_normalization(self):
        # copy option text with whitespace variation: B and D collide
        item = make_item(options=("alpha", "two  words", "gamma", " two words "))
        violations = validate_item(item)
        assert [v.rule for v in violations] == ["duplicate-options"]
        assert "B and D" in violations[0].message

    def test_bad_key(self):
        item = make_item(key="E")
        assert any(v.rule == "key-designates-option" for v in validate_item(item))

    def test_cot_fields_requirement(self):
        item = make_item(text_hint=None, reasoning=None)
        assert validate_item(item) == []
        rules = {v.rule for v in validate_item(item, require_cot_fields=True)}
        assert rules == {"cot-fields-present"}

    def test_option_count_enforced_at_parse_time(self):
        with pytest.raises(ValueError, match="exactly 4 options"):
            from itemforge.corpus import _item_from_json

            _item_from_json(
                {
                    "id": "x",
                    "passage_id": "p1",
                    "stem": "s?",
                    "options": ["a", "b", "c"],
                    "key": "A",
                    "target_type": "gap_filling",
                }
            )


class TestRoundTrip:
    def test_save_load_identity(self, tmp_path):
        bank = make_bank([make_passage()], [make_item()])
        save_bank(bank, tmp_path / "bank")
        loaded = load_bank(tmp_path / "bank")
        assert loaded.passages == bank.passages
        assert loaded.items == bank.items
        assert loaded.id == bank.id

    def test_save_twice_byte_identical(self, tmp_path):
        bank = make_bank([make_passage()], [make_item()])
        save_bank(bank, tmp_path / "one")
        save_bank(bank, tmp_path / "two")
        for name in ("passages.jsonl", "items.jsonl", "manifest.json"):
            assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    def test_refuses_invalid_bank(self, tmp_path):
        bad = make_bank([make_passage()], [make_item(key="Z")])
        with pytest.raises(BankValidationError, match="key"):
            save_bank(bad, tmp_path / "bank")
        assert not (tmp_path / "bank" / "items.jsonl").exists()

    def test_word_count_recomputation_agrees_after_load(self, tmp_path):
        bank = make_bank([make_passage(body="five words in this body")], [])
        save_bank(bank, tmp_path / "bank")
        loaded = load_bank(tmp_path / "bank")
        for passage in loaded.passages:
            assert passage.word_count == count_words(passage.body)


class TestLoadErrors:
    def test_missing_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_bank(tmp_path / "nope")

    def test_parse_error_carries_line_number(self, tmp_path):
        bank_dir = tmp_path / "bank"
        bank_dir.mkdir()
        (bank_dir / "passages.jsonl").write_text('{"id": "p1"\n', encoding="utf-8")
        (bank_dir / "items.jsonl").write_text("", encoding="utf-8")
        with pytest.raises(BankParseError) as err:
            load_bank(bank_dir)
        assert err.value.line_no == 1
        assert "passages.jsonl" in str(err.value)

    def test_dangling_passage_reference(self, tmp_path):
        bank = make_bank([make_passage("p1")], [])
        save_bank(bank, tmp_path / "bank")
        item = make_item(id="i9", passage_id="p99")
        from itemforge.corpus import _dump_line, _item_to_json

        with open(tmp_path / "bank" / "items.jsonl", "a", encoding="utf-8") as f:
            f.write(_dump_line(_item_to_json(item)))
        (tmp_path / "bank" / "manifest.json").unlink()  # hash no longer applies
        with pytest.raises(BankIntegrityError, match="p99"):
            load_bank(tmp_path / "bank")

    def test_duplicate_item_id(self, tmp_path):
        bank = make_bank([make_passage("p1")], [make_item(id="i1")])
        save_bank(bank, tmp_path / "bank")
        from itemforge.corpus import _dump_line, _item_to_json

        with open(tmp_path / "bank" / "items.jsonl", "a", encoding="utf-8") as f:
            f.write(_dump_line(_item_to_json(make_item(id="i1"))))
        (tmp_path / "bank" / "manifest.json").unlink()
        with pytest.raises(BankIntegrityError, match="duplicate item id"):
            load_bank(tmp_path / "bank")

    def test_content_hash_mismatch_detected(self, tmp_path):
        bank = make_bank([make_passage("p1")], [make_item(id="i1")])
        save_bank(bank, tmp_path / "bank")
        manifest = json.loads((tmp_path / "bank" / "manifest.json").read_text())
        manifest["content_hash"] = "0" * 64
        (tmp_path / "bank" / "manifest.json").write_text(json.dumps(manifest))
        with pytest.raises(BankIntegrityError, match="hash mismatch"):
            load_bank(tmp_path / "bank")

    def test_stored_word_count_mismatch_rejected(self, tmp_path):
        from dataclasses import replace

        passage = replace(make_passage("p1"), word_count=999)
        bank = make_bank([passage], [])
        with pytest.raises(BankValidationError, match="word_count"):
            save_bank(bank, tmp_path / "bank")


class TestEmptyBank:
    def test_empty_bank_is_valid(self, tmp_path):
        bank = make_bank([], [])
        save_bank(bank, tmp_path / "bank")
        loaded = load_bank(tmp_path / "bank")
        assert loaded.passages == ()
        assert loaded.items == ()


class TestTrainingBank:
    def test_loads_and_validates(self, training_bank):
        assert len(training_bank.passages) == 6
        assert len(training_bank.items) == 58

    def test_type_counts(self, training_bank):
        counts = {t: 0 for t in InferenceType}
        for item in training_bank.items:
            counts[item.target_type] += 1
        assert counts[InferenceType.PRONOMINAL_BRIDGING] == 19
        assert counts[InferenceType.GAP_FILLING] == 23
        assert counts[InferenceType.TEXT_CONNECTING] == 16

    def test_passage_lengths(self, training_bank):
        for passage in training_bank.passages:
            assert 342 <= passage.word_count <= 508

    def test_every_item_carries_cot_fields(self, training_bank):
        for item in training_bank.items:
            assert validate_item(item, require_cot_fields=True) == []

    def test_two_to_four_items_per_passage_per_type(self, training_bank):
        for passage in training_bank.passages:
            for t in (InferenceType.PRONOMINAL_BRIDGING, InferenceType.GAP_FILLING, InferenceType.TEXT_CONNECTING):
                n = len(training_bank.items_for(passage.id, t))
                assert 2 <= n <= 4, f"{passage.id}/{t.value}: {n}"


class TestTargetsBank:
    def test_ten_generation_targets(self, targets_bank):
        assert len(targets_bank.passages) == 10
        from itemforge.corpus import PassageRole

        assert all(p.role is PassageRole.GENERATION_TARGET for p in targets_bank.passages)
        assert targets_bank.items == ()
