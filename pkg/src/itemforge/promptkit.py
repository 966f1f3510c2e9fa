"""Deterministic few-shot prompt assembly for the generation conditions.

A prompt is built from a per-type, per-strategy template file plus the
handbook definition, the per-type expert steps, the shared quality rules,
and serialized training examples. Identical inputs always produce
byte-identical prompts; the content hash keys record/replay storage.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .corpus import Item, ItemBank, OPTION_LABELS, Passage, PassageRole
from .taxonomy import GENERATION_TARGET_TYPES, InferenceType, type_definition

NO_FORCE_RULE = "Do not force additional questions if no suitable locations can be found."

TYPE_DISPLAY_NAMES = {
    InferenceType.PRONOMINAL_BRIDGING: "Pronominal Bridging",
    InferenceType.TEXT_CONNECTING: "Text-Connecting",
    InferenceType.GAP_FILLING: "Gap-Filling",
    InferenceType.PRONOMINAL: "Pronominal",
}


class PromptStrategy(str, Enum):
    STANDARD = "standard"
    COT = "cot"


class PromptError(Exception):
    pass


class InsufficientExamplesError(PromptError):
    def __init__(self, target_type: InferenceType, needed: int, available: int):
        super().__init__(
            f"condition needs {needed} training passages with {target_type.value} items, bank provides {available}"
        )
        self.needed = needed
        self.available = available


class PassageRoleError(PromptError):
    pass


class MissingCotFieldsError(PromptError):
    pass


@dataclass(frozen=True)
class GenerationCondition:
    """One prompting condition: strategy crossed with example-passage count."""

    strategy: PromptStrategy
    example_passage_count: int
    target_type: InferenceType
    questions_per_call: int = 3
    no_force_rule: bool | None = None

    def __post_init__(self) -> None:
        if self.example_passage_count not in (4, 6):
            raise ValueError(f"example_passage_count must be 4 or 6, got {self.example_passage_count}")
        if self.target_type not in GENERATION_TARGET_TYPES:
            raise ValueError(f"{self.target_type.value} is not a generable inference type")
        expected_no_force = self.target_type in (InferenceType.TEXT_CONNECTING, InferenceType.GAP_FILLING)
        if self.no_force_rule is None:
            object.__setattr__(self, "no_force_rule", expected_no_force)
        elif self.no_force_rule != expected_no_force:
            raise ValueError(
                f"no_force_rule must be {expected_no_force} for target type {self.target_type.value}"
            )
        if self.questions_per_call < 1:
            raise ValueError("questions_per_call must be positive")

    @property
    def name(self) -> str:
        return f"{self.strategy.value}_{self.example_passage_count}"

    @property
    def display_name(self) -> str:
        base = "CoT" if self.strategy is PromptStrategy.COT else "standard"
        return f"{base}_{self.example_passage_count}"

    def to_json(self) -> dict:
        return {
            "example_passage_count": self.example_passage_count,
            "no_force_rule": self.no_force_rule,
            "questions_per_call": self.questions_per_call,
            "strategy": self.strategy.value,
            "target_type": self.target_type.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GenerationCondition":
        return cls(
            strategy=PromptStrategy(obj["strategy"]),
            example_passage_count=int(obj["example_passage_count"]),
            target_type=InferenceType(obj["target_type"]),
            questions_per_call=int(obj.get("questions_per_call", 3)),
            no_force_rule=obj.get("no_force_rule"),
        )


def all_conditions(target_type: InferenceType, questions_per_call: int = 3) -> list[GenerationCondition]:
    """The four conditions (standard/cot x 4/6 passages) for one target type."""
    return [
        GenerationCondition(strategy, count, target_type, questions_per_call)
        for strategy in (PromptStrategy.STANDARD, PromptStrategy.COT)
        for count in (4, 6)
    ]


@dataclass(frozen=True)
class PromptTemplate:
    """Template text for one (target type, strategy) pair."""

    target_type: InferenceType
    strategy: PromptStrategy
    system_template: str
    user_template: str
    steps: str
    rules: tuple[str, ...]

    @classmethod
    def load(
        cls,
        target_type: InferenceType,
        strategy: PromptStrategy,
        templates_dir: Path | None = None,
    ) -> "PromptTemplate":
        base = templates_dir if templates_dir is not None else default_templates_dir()
        skeleton = (base / f"{target_type.value}.{strategy.value}.txt").read_text(encoding="utf-8")
        if "=== user ===" not in skeleton:
            raise PromptError(f"template {target_type.value}.{strategy.value}.txt has no '=== user ===' separator")
        system_template, user_template = skeleton.split("=== user ===", 1)
        steps = (base / f"{target_type.value}.steps.txt").read_text(encoding="utf-8").strip()
        rules = tuple(
            line.strip()
            for line in (base / "rules.txt").read_text(encoding="utf-8").splitlines()
            if line.strip()
        )
        return cls(
            target_type=target_type,
            strategy=strategy,
            system_template=system_template.strip("\n"),
            user_template=user_template.strip("\n"),
            steps=steps,
            rules=rules,
        )


def default_templates_dir() -> Path:
    return Path(str(resources.files("itemforge").joinpath("data/templates")))


@dataclass(frozen=True)
class PromptBundle:
    system_text: str
    user_text: str
    condition: GenerationCondition
    example_item_ids: tuple[str, ...]
    content_hash: str = field(default="")

    def __post_init__(self) -> None:
        object.__setattr__(self, "content_hash", prompt_content_hash(self.system_text, self.user_text))


def prompt_content_hash(system_text: str, user_text: str) -> str:
    h = hashlib.sha256()
    h.update(system_text.encode("utf-8"))
    h.update(b"\x00")
    h.update(user_text.encode("utf-8"))
    return h.hexdigest()


def render_example(item: Item, strategy: PromptStrategy) -> str:
    """Serialize one training item as a labeled-text block.

    The layout here is also the output format the model is instructed to
    emit, so the response parser consumes exactly what this produces.
    """
    lines = []
    if strategy is PromptStrategy.COT:
        if not item.text_hint or not item.reasoning:
            raise MissingCotFieldsError(
                f"item {item.id!r} lacks text hint or reasoning required for chain-of-thought prompts"
            )
        lines.append(f"Text Hint: {item.text_hint}")
        lines.append(f"Reasoning: {item.reasoning}")
    lines.append(f"Question: {item.stem}")
    for label, option in zip(OPTION_LABELS, item.options):
        lines.append(f"{label}. {option}")
    lines.append(f"Answer Key: {item.key}")
    return "\n".join(lines)


def _passage_block(passage: Passage, items: list[Item], strategy: PromptStrategy) -> str:
    parts = [f"Passage: {passage.title}", passage.body, ""]
    parts.extend(render_example(item, strategy) + "\n" for item in items)
    return "\n".join(parts).rstrip("\n")


def select_example_passages(
    bank: ItemBank, target_type: InferenceType, count: int
) -> list[tuple[Passage, list[Item]]]:
    """First `count` training passages (bank order) with items of the type."""
    selected = []
    for passage in bank.passages:
        if passage.role is not PassageRole.TRAINING_EXAMPLE:
            continue
        items = bank.items_for(passage.id, target_type)
        if items:
            selected.append((passage, items))
    if len(selected) < count:
        raise InsufficientExamplesError(target_type, count, len(selected))
    return selected[:count]


def assemble_prompt(
    bank: ItemBank,
    target: Passage,
    condition: GenerationCondition,
    template: PromptTemplate | None = None,
) -> PromptBundle:
    """Build the full system/user prompt pair for one generation call."""
    if target.role is not PassageRole.GENERATION_TARGET:
        raise PassageRoleError(f"passage {target.id!r} has role {target.role.value}, expected generation_target")
    if template is None:
        template = PromptTemplate.load(condition.target_type, condition.strategy)
    if template.target_type != condition.target_type or template.strategy != condition.strategy:
        raise PromptError("template does not match the generation condition")

    selected = select_example_passages(bank, condition.target_type, condition.example_passage_count)
    example_blocks = "\n\n".join(_passage_block(p, items, condition.strategy) for p, items in selected)
    example_item_ids = tuple(item.id for _, items in selected for item in items)

    rules = list(template.rules)
    if condition.no_force_rule:
        rules.append(NO_FORCE_RULE)
    rules_text = "\n".join(f"- {rule}" for rule in rules)

    descriptor = type_definition(condition.target_type)
    fills = {
        "definition": descriptor.definition,
        "steps": template.steps,
        "rules": rules_text,
        "examples": example_blocks,
        "passage": f"Passage: {target.title}\n{target.body}",
        "n_questions": str(condition.questions_per_call),
        "type_name": TYPE_DISPLAY_NAMES[condition.target_type],
    }
    system_text = template.system_template.format(**fills)
    user_text = template.user_template.format(**fills)
    return PromptBundle(
        system_text=system_text,
        user_text=user_text,
        condition=condition,
        example_item_ids=example_item_ids,
    )
