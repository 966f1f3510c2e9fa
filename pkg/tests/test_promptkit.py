from __future__ import annotations

import pytest

from itemforge import promptkit
from itemforge.promptkit import (
    NO_FORCE_RULE,
    GenerationCondition,
    InsufficientExamplesError,
    MissingCotFieldsError,
    PassageRoleError,
    PromptStrategy,
    assemble_prompt,
    render_example,
)
from itemforge.taxonomy import InferenceType

from conftest import GOLDEN, make_item

PB = InferenceType.PRONOMINAL_BRIDGING
TC = InferenceType.TEXT_CONNECTING
GF = InferenceType.GAP_FILLING


class TestGenerationCondition:
    def test_no_force_rule_derived(self):
        assert GenerationCondition(PromptStrategy.STANDARD, 4, PB).no_force_rule is False
        assert GenerationCondition(PromptStrategy.STANDARD, 4, TC).no_force_rule is True
        assert GenerationCondition(PromptStrategy.COT, 6, GF).no_force_rule is True

    def test_no_force_rule_mismatch_rejected(self):
        with pytest.raises(ValueError, match="no_force_rule"):
            GenerationCondition(PromptStrategy.STANDARD, 4, PB, no_force_rule=True)

    def test_example_count_restricted(self):
        with pytest.raises(ValueError, match="4 or 6"):
            GenerationCondition(PromptStrategy.STANDARD, 5, PB)

    def test_only_generable_types(self):
        with pytest.raises(ValueError, match="not a generable"):
            GenerationCondition(PromptStrategy.STANDARD, 4, InferenceType.PRONOMINAL)

    def test_names(self):
        assert GenerationCondition(PromptStrategy.COT, 6, GF).name == "cot_6"
        assert GenerationCondition(PromptStrategy.COT, 6, GF).display_name == "CoT_6"


class TestRenderExample:
    def test_cot_block_for_ships_item(self, training_bank):
        item = training_bank.items_for("train-01", PB)[0]
        block = render_example(item, PromptStrategy.COT)
        assert "Answer Key: " in block
        assert block.startswith("Text Hint: Ships have carried passengers")
        assert '"That"' in block  # reasoning line about the pronoun

    def test_standard_never_contains_cot_labels(self, training_bank):
        for item in training_bank.items:
            block = render_example(item, PromptStrategy.STANDARD)
            assert "Text Hint:" not in block
            assert "Reasoning:" not in block

    def test_deterministic(self, training_bank):
        item = training_bank.items[0]
        assert render_example(item, PromptStrategy.COT) == render_example(item, PromptStrategy.COT)

    def test_cot_requires_hint_and_reasoning(self):
        bare = make_item(text_hint=None, reasoning=None)
        with pytest.raises(MissingCotFieldsError):
            render_example(bare, PromptStrategy.COT)

    def test_layout(self, training_bank):
        item = training_bank.items[0]
        lines = render_example(item, PromptStrategy.STANDARD).splitlines()
        assert lines[0].startswith("Question: ")
        assert [l[:2] for l in lines[1:5]] == ["A.", "B.", "C.", "D."]
        assert lines[5].startswith("Answer Key: ")


@pytest.fixture(scope="module")
def target(targets_bank):
    return targets_bank.passages[0]


# session-scoped banks come from conftest; redeclare at module scope for target
@pytest.fixture(scope="module")
def targets_bank():
    from itemforge.corpus import load_generation_targets

    return load_generation_targets()


@pytest.fixture(scope="module")
def training_bank():
    from itemforge.corpus import load_training_bank

    return load_training_bank()


class TestAssemblePrompt:
    def test_standard_six_has_six_passage_blocks_and_no_cot_labels(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.STANDARD, 6, PB)
        bundle = assemble_prompt(training_bank, target, condition)
        assert bundle.system_text.count("Passage: ") == 6
        assert "Reasoning:" not in bundle.system_text
        assert "Text Hint:" not in bundle.system_text

    def test_cot_four_gap_filling_carries_labels_and_no_force_rule(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.COT, 4, GF)
        bundle = assemble_prompt(training_bank, target, condition)
        assert "Text Hint:" in bundle.system_text
        assert "Reasoning:" in bundle.system_text
        assert NO_FORCE_RULE in bundle.system_text

    def test_pronominal_bridging_omits_no_force_rule(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.COT, 6, PB)
        bundle = assemble_prompt(training_bank, target, condition)
        assert NO_FORCE_RULE not in bundle.system_text

    def test_deterministic_hash(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.STANDARD, 6, PB)
        b1 = assemble_prompt(training_bank, target, condition)
        b2 = assemble_prompt(training_bank, target, condition)
        assert b1.system_text == b2.system_text
        assert b1.user_text == b2.user_text
        assert b1.content_hash == b2.content_hash

    def test_hash_changes_with_content(self, training_bank, targets_bank):
        condition = GenerationCondition(PromptStrategy.STANDARD, 6, PB)
        b1 = assemble_prompt(training_bank, targets_bank.passages[0], condition)
        b2 = assemble_prompt(training_bank, targets_bank.passages[1], condition)
        assert b1.content_hash != b2.content_hash

    @pytest.mark.parametrize("count", [4, 6])
    def test_passage_count_law(self, training_bank, target, count):
        for t in (PB, TC, GF):
            bundle = assemble_prompt(training_bank, target, GenerationCondition(PromptStrategy.STANDARD, count, t))
            assert bundle.system_text.count("Passage: ") == count

    def test_example_ordering_is_bank_order(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.STANDARD, 6, GF)
        bundle = assemble_prompt(training_bank, target, condition)
        expected = [i.id for i in training_bank.items if i.target_type is GF]
        assert list(bundle.example_item_ids) == expected

    def test_count4_uses_first_four_training_passages(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.STANDARD, 4, GF)
        bundle = assemble_prompt(training_bank, target, condition)
        wanted = {"train-01", "train-02", "train-03", "train-04"}
        got = {i.passage_id for i in training_bank.items if i.id in bundle.example_item_ids}
        assert got == wanted

    def test_user_text_contains_target_and_question_count(self, training_bank, target):
        condition = GenerationCondition(PromptStrategy.STANDARD, 6, PB)
        bundle = assemble_prompt(training_bank, target, condition)
        assert target.title in bundle.user_text
        assert target.body in bundle.user_text
        assert "3 unique" in bundle.user_text

    def test_insufficient_examples(self, training_bank, target):
        from conftest import make_bank

        small = make_bank(training_bank.passages[:3], [i for i in training_bank.items if i.passage_id in {"train-01", "train-02", "train-03"}])
        with pytest.raises(InsufficientExamplesError, match="needs 4.*provides 3"):
            assemble_prompt(small, target, GenerationCondition(PromptStrategy.STANDARD, 4, PB))

    def test_wrong_role_rejected(self, training_bank):
        training_passage = training_bank.passages[0]
        with pytest.raises(PassageRoleError):
            assemble_prompt(training_bank, training_passage, GenerationCondition(PromptStrategy.STANDARD, 6, PB))


class TestGoldenPrompts:
    @pytest.mark.parametrize("strategy", ["standard", "cot"])
    @pytest.mark.parametrize("count", [4, 6])
    @pytest.mark.parametrize("target_type", [PB, TC, GF])
    def test_byte_match(self, training_bank, target, strategy, count, target_type):
        condition = GenerationCondition(PromptStrategy(strategy), count, target_type)
        bundle = assemble_prompt(training_bank, target, condition)
        rendered = bundle.system_text + "\n\n=== user ===\n\n" + bundle.user_text
        golden = (GOLDEN / f"prompt_{target_type.value}_{strategy}_{count}.txt").read_text(encoding="utf-8")
        assert rendered == golden
