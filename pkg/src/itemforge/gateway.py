"""Chat-completion gateway: live calls, record/replay cassettes, response
parsing into candidate items, and generation-run orchestration.

Replay mode never touches the network: exchanges are looked up in a
cassette keyed by the prompt bundle's content hash plus the decode
parameters (via the canonical request body), which makes whole runs
byte-deterministic.
"""

from __future__ import annotations

import json
import logging
import os
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Iterable

import httpx

from .corpus import Item, ItemBank, OPTION_LABELS, Passage, PassageRole, Provenance, validate_item
from .promptkit import (
    GenerationCondition,
    PromptBundle,
    PromptError,
    PromptStrategy,
    PromptTemplate,
    assemble_prompt,
)
from .taxonomy import InferenceType

log = logging.getLogger(__name__)

API_KEY_ENV = "ITEMFORGE_API_KEY"
API_URL_ENV = "ITEMFORGE_API_URL"

TYPE_ABBREV = {
    InferenceType.PRONOMINAL_BRIDGING: "pb",
    InferenceType.TEXT_CONNECTING: "tc",
    InferenceType.GAP_FILLING: "gf",
}

RETRYABLE_STATUSES = {429, 500, 502, 503, 504}
MAX_RETRIES = 3


class GatewayError(Exception):
    pass


class CredentialError(GatewayError):
    pass


class MissingCassetteEntryError(GatewayError):
    def __init__(self, bundle_hash: str):
        super().__init__(f"cassette has no entry for bundle hash {bundle_hash}")
        self.bundle_hash = bundle_hash


class TransportError(GatewayError):
    pass


class GatewayMode(str, Enum):
    LIVE = "live"
    RECORD = "record"
    REPLAY = "replay"


@dataclass(frozen=True)
class DecodeParams:
    model_name: str = "gpt-4o"
    temperature: float = 0.0
    frequency_penalty: float = 0.2
    max_output_tokens: int = 2048

    def __post_init__(self) -> None:
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative")
        if not 0 <= self.frequency_penalty <= 2:
            raise ValueError("frequency_penalty must be in [0, 2]")


@dataclass(frozen=True)
class Exchange:
    bundle_hash: str
    request_body: str
    response_body: str
    timestamp: str
    latency_ms: int

    def to_json(self) -> dict:
        return {
            "bundle_hash": self.bundle_hash,
            "latency_ms": self.latency_ms,
            "request_body": self.request_body,
            "response_body": self.response_body,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Exchange":
        return cls(
            bundle_hash=obj["bundle_hash"],
            request_body=obj["request_body"],
            response_body=obj["response_body"],
            timestamp=obj["timestamp"],
            latency_ms=int(obj["latency_ms"]),
        )


def canonical_request_body(bundle: PromptBundle, params: DecodeParams) -> str:
    """The exact chat-completions payload, serialized canonically.

    Doubles as the cassette key: equal bodies mean equal (prompt, params).
    """
    payload = {
        "frequency_penalty": params.frequency_penalty,
        "max_tokens": params.max_output_tokens,
        "messages": [
            {"content": bundle.system_text, "role": "system"},
            {"content": bundle.user_text, "role": "user"},
        ],
        "model": params.model_name,
        "temperature": params.temperature,
    }
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def response_content(response_body: str) -> str:
    """Extract the assistant message text from a chat-completion response."""
    try:
        obj = json.loads(response_body)
        return obj["choices"][0]["message"]["content"]
    except (json.JSONDecodeError, KeyError, IndexError, TypeError) as exc:
        raise GatewayError(f"response body is not a chat-completion envelope: {exc}") from exc


class CassetteStore:
    """JSONL-backed exchange store; concurrent reads, serialized appends."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._entries: dict[str, Exchange] = {}
        if self.path.exists():
            with open(self.path, encoding="utf-8") as f:
                for line_no, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        exchange = Exchange.from_json(json.loads(line))
                    except (json.JSONDecodeError, KeyError, ValueError) as exc:
                        raise GatewayError(f"{self.path}:{line_no}: bad cassette entry: {exc}") from exc
                    self._entries[exchange.request_body] = exchange

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, request_body: str) -> Exchange | None:
        return self._entries.get(request_body)

    def append(self, exchange: Exchange) -> None:
        with self._lock:
            if exchange.request_body in self._entries:
                log.warning("cassette entry for bundle %s overwritten", exchange.bundle_hash[:12])
                self._entries[exchange.request_body] = exchange
                self._rewrite()
                return
            self._entries[exchange.request_body] = exchange
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(json.dumps(exchange.to_json(), sort_keys=True, ensure_ascii=False) + "\n")

    def _rewrite(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "w", encoding="utf-8") as f:
            for exchange in self._entries.values():
                f.write(json.dumps(exchange.to_json(), sort_keys=True, ensure_ascii=False) + "\n")


def _resolve_endpoint() -> tuple[str, str]:
    url = os.environ.get(API_URL_ENV, "").strip()
    key = os.environ.get(API_KEY_ENV, "").strip()
    if not key:
        raise CredentialError(f"{API_KEY_ENV} is not set; live and record modes need a credential")
    if not url:
        raise CredentialError(f"{API_URL_ENV} is not set; live and record modes need an endpoint URL")
    return url, key


def _post_with_retries(url: str, key: str, request_body: str, client: httpx.Client | None = None) -> str:
    owned = client is None
    if owned:
        client = httpx.Client(timeout=120.0)
    try:
        delay = 1.0
        last_error: Exception | None = None
        for attempt in range(MAX_RETRIES + 1):
            if attempt:
                time.sleep(delay)
                delay *= 2
            try:
                response = client.post(
                    url.rstrip("/") + "/chat/completions",
                    content=request_body.encode("utf-8"),
                    headers={"Authorization": f"Bearer {key}", "Content-Type": "application/json"},
                )
            except httpx.HTTPError as exc:
                last_error = exc
                continue
            if response.status_code in RETRYABLE_STATUSES:
                last_error = TransportError(f"HTTP {response.status_code}: {response.text[:200]}")
                continue
            if response.status_code != 200:
                raise TransportError(f"HTTP {response.status_code}: {response.text[:500]}")
            return response.text
        raise TransportError(f"request failed after {MAX_RETRIES + 1} attempts: {last_error}")
    finally:
        if owned:
            client.close()


def complete(
    bundle: PromptBundle,
    params: DecodeParams,
    mode: GatewayMode,
    cassette: CassetteStore | None = None,
    client: httpx.Client | None = None,
) -> Exchange:
    """Run one chat-completion exchange in the given mode."""
    request_body = canonical_request_body(bundle, params)
    if mode is GatewayMode.REPLAY:
        if cassette is None:
            raise GatewayError("replay mode requires a cassette")
        entry = cassette.lookup(request_body)
        if entry is None:
            raise MissingCassetteEntryError(bundle.content_hash)
        return entry

    url, key = _resolve_endpoint()
    started = time.monotonic()
    response_body = _post_with_retries(url, key, request_body, client=client)
    latency_ms = int((time.monotonic() - started) * 1000)
    exchange = Exchange(
        bundle_hash=bundle.content_hash,
        request_body=request_body,
        response_body=response_body,
        timestamp=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        latency_ms=latency_ms,
    )
    if mode is GatewayMode.RECORD:
        if cassette is None:
            raise GatewayError("record mode requires a cassette")
        cassette.append(exchange)
    return exchange


@dataclass(frozen=True)
class ParseFailure:
    raw_block: str
    reason: str

    def to_json(self) -> dict:
        return {"raw_block": self.raw_block, "reason": self.reason}


_LABEL_RE = re.compile(
    r"^(?:\s*(?:\d+[.)]\s*)?)?(?P<label>Text Hint|Reasoning|Question|Answer Key|[A-D])(?:\s+\d+)?\s*[.:]\s*(?P<value>.*)$",
    re.IGNORECASE,
)


def _classify_line(line: str) -> tuple[str, str] | None:
    cleaned = line.replace("**", "").rstrip()
    m = _LABEL_RE.match(cleaned)
    if not m:
        return None
    label = m.group("label").strip()
    if len(label) == 1:
        label = label.upper()
    else:
        label = label.title().replace("Key", "Key")
        label = {"Text Hint": "Text Hint", "Reasoning": "Reasoning", "Question": "Question", "Answer Key": "Answer Key"}[label]
    return label, m.group("value").strip()


def _split_blocks(content: str) -> list[str]:
    """Split response text into candidate question blocks.

    Blocks are separated by blank lines; a chunk counts as a question block
    only if it contains at least one recognized label line (prose chatter
    around the questions is skipped).
    """
    chunks = re.split(r"\n\s*\n", content.strip())
    blocks = []
    for chunk in chunks:
        if any(_classify_line(line) for line in chunk.splitlines()):
            blocks.append(chunk.strip("\n"))
    return blocks


def parse_block(block: str) -> dict[str, str]:
    """Parse one labeled-text block into its fields; missing keys absent."""
    fields: dict[str, str] = {}
    options: dict[str, str] = {}
    current: str | None = None
    for line in block.splitlines():
        classified = _classify_line(line)
        if classified:
            label, value = classified
            if label in OPTION_LABELS:
                options[label] = value
                current = f"option:{label}"
            else:
                fields[label] = value
                current = label
        elif line.strip() and current:
            if current.startswith("option:"):
                label = current.split(":", 1)[1]
                options[label] = (options[label] + " " + line.strip()).strip()
            else:
                fields[current] = (fields[current] + " " + line.strip()).strip()
    for label, value in options.items():
        fields[f"option_{label}"] = value
    return fields


def parse_items(
    response: str,
    condition: GenerationCondition,
    target_passage_id: str,
    id_prefix: str = "gen",
) -> tuple[list[Item], list[ParseFailure]]:
    """Turn raw model output into validated items plus parse failures.

    Total: never raises on malformed input; every detected block ends up
    either as an item or as a failure with a reason.
    """
    items: list[Item] = []
    failures: list[ParseFailure] = []
    for index, block in enumerate(_split_blocks(response), start=1):
        fields = parse_block(block)
        missing = [
            name
            for name in ("Question", "Answer Key", "option_A", "option_B", "option_C", "option_D")
            if name not in fields
        ]
        present_options = [l for l in OPTION_LABELS if f"option_{l}" in fields]
        if missing:
            if any(name.startswith("option_") for name in missing):
                reason = f"option-count: found options {''.join(present_options) or 'none'}, expected ABCD"
            else:
                reason = "missing-field: " + ", ".join(n for n in missing if not n.startswith("option_"))
            failures.append(ParseFailure(block, reason))
            continue
        key = fields["Answer Key"].strip().rstrip(".").upper()[:1]
        item = Item(
            id=f"{id_prefix}-q{index}",
            passage_id=target_passage_id,
            stem=fields["Question"],
            options=(fields["option_A"], fields["option_B"], fields["option_C"], fields["option_D"]),
            key=key,
            target_type=condition.target_type,
            text_hint=fields.get("Text Hint"),
            reasoning=fields.get("Reasoning"),
            provenance=Provenance.LLM_GENERATED,
        )
        violations = validate_item(item, require_cot_fields=condition.strategy is PromptStrategy.COT)
        if violations:
            failures.append(ParseFailure(block, "; ".join(f"{v.rule}: {v.message}" for v in violations)))
            continue
        if len(items) >= condition.questions_per_call:
            failures.append(ParseFailure(block, f"quota-exceeded: condition allows {condition.questions_per_call} questions"))
            continue
        items.append(item)
    return items, failures


@dataclass
class GenerationRun:
    run_id: str
    condition: GenerationCondition
    target_passage_id: str
    exchanges: list[Exchange] = field(default_factory=list)
    items: list[Item] = field(default_factory=list)
    parse_failures: list[ParseFailure] = field(default_factory=list)
    error: str | None = None


def run_id_for(condition: GenerationCondition, target: Passage | str) -> str:
    target_id = target if isinstance(target, str) else target.id
    return f"{condition.name}-{TYPE_ABBREV[condition.target_type]}-{target_id}"


def execute_run(
    bank: ItemBank,
    target: Passage,
    condition: GenerationCondition,
    params: DecodeParams,
    mode: GatewayMode,
    cassette: CassetteStore | None,
    template: PromptTemplate | None = None,
    client: httpx.Client | None = None,
) -> GenerationRun:
    """One (target, condition) generation run; errors land on the run."""
    run = GenerationRun(run_id=run_id_for(condition, target), condition=condition, target_passage_id=target.id)
    try:
        bundle = assemble_prompt(bank, target, condition, template=template)
        exchange = complete(bundle, params, mode, cassette=cassette, client=client)
        run.exchanges.append(exchange)
        content = response_content(exchange.response_body)
        run.items, run.parse_failures = parse_items(content, condition, target.id, id_prefix=run.run_id)
    except (PromptError, GatewayError) as exc:
        run.error = f"{type(exc).__name__}: {exc}"
    return run


def run_generation(
    bank: ItemBank,
    targets: Iterable[Passage],
    conditions: Iterable[GenerationCondition],
    params: DecodeParams,
    mode: GatewayMode,
    cassette: CassetteStore | None = None,
    out_dir: str | Path | None = None,
    max_workers: int = 4,
    client: httpx.Client | None = None,
) -> list[GenerationRun]:
    """Run every (target x condition) pair and persist run artifacts.

    Runs are independent: a failing run records its error and never aborts
    siblings. Output order is deterministic (targets x conditions order),
    regardless of worker scheduling.
    """
    targets = list(targets)
    conditions = list(conditions)
    for target in targets:
        if target.role is not PassageRole.GENERATION_TARGET:
            raise PromptError(f"passage {target.id!r} has role {target.role.value}, expected generation_target")
    templates = {
        (c.target_type, c.strategy): PromptTemplate.load(c.target_type, c.strategy) for c in conditions
    }
    pairs = [(target, condition) for target in targets for condition in conditions]

    def job(pair: tuple[Passage, GenerationCondition]) -> GenerationRun:
        target, condition = pair
        return execute_run(
            bank,
            target,
            condition,
            params,
            mode,
            cassette,
            template=templates[(condition.target_type, condition.strategy)],
            client=client,
        )

    if max_workers <= 1 or len(pairs) <= 1:
        runs = [job(pair) for pair in pairs]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            runs = list(pool.map(job, pairs))

    if out_dir is not None:
        for run in runs:
            save_run(run, Path(out_dir))
    return runs


def save_run(run: GenerationRun, runs_dir: Path) -> Path:
    from .corpus import _dump_line, _item_to_json  # canonical record form

    run_dir = runs_dir / run.run_id
    run_dir.mkdir(parents=True, exist_ok=True)
    doc = {
        "condition": run.condition.to_json(),
        "error": run.error,
        "exchanges": [e.to_json() for e in run.exchanges],
        "item_ids": [i.id for i in run.items],
        "parse_failures": [f.to_json() for f in run.parse_failures],
        "run_id": run.run_id,
        "target_passage_id": run.target_passage_id,
    }
    (run_dir / "run.json").write_text(
        json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (run_dir / "items.jsonl").write_text(
        "".join(_dump_line(_item_to_json(i)) for i in run.items), encoding="utf-8"
    )
    return run_dir


def load_run(run_dir: Path) -> GenerationRun:
    from .corpus import _item_from_json

    doc = json.loads((run_dir / "run.json").read_text(encoding="utf-8"))
    items = []
    items_path = run_dir / "items.jsonl"
    if items_path.exists():
        with open(items_path, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    items.append(_item_from_json(json.loads(line)))
    return GenerationRun(
        run_id=doc["run_id"],
        condition=GenerationCondition.from_json(doc["condition"]),
        target_passage_id=doc["target_passage_id"],
        exchanges=[Exchange.from_json(e) for e in doc.get("exchanges", [])],
        items=items,
        parse_failures=[ParseFailure(f["raw_block"], f["reason"]) for f in doc.get("parse_failures", [])],
        error=doc.get("error"),
    )


def load_runs(runs_dir: str | Path) -> list[GenerationRun]:
    runs_dir = Path(runs_dir)
    runs = []
    for run_json in sorted(runs_dir.glob("*/run.json")):
        runs.append(load_run(run_json.parent))
    return runs


def generated_bank(runs: Iterable[GenerationRun], targets: Iterable[Passage], bank_id: str = "generated") -> ItemBank:
    """Collect all run items into one bank over the target passages."""
    items = tuple(item for run in runs for item in run.items)
    return ItemBank(id=bank_id, label=bank_id, passages=tuple(targets), items=items)


def default_cassette_path() -> Path:
    from importlib import resources

    return Path(str(resources.files("itemforge").joinpath("data/cassettes/demo.jsonl")))
