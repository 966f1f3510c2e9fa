"""Single entry-point command wiring the modules into batch workflows.

Exit codes are stable across subcommands: 0 success, 1 domain failure
(validation, protocol, or generation errors), 2 usage or I/O failure.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click

from . import agreestats, evalflow, gateway, promptkit, taxonomy
from .corpus import (
    BankError,
    generation_targets_path,
    load_bank,
    save_bank,
    training_bank_path,
    validate_bank,
)
from .gateway import API_KEY_ENV, API_URL_ENV, CassetteStore, DecodeParams, GatewayMode
from .promptkit import GenerationCondition, PromptStrategy
from .taxonomy import InferenceType

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

CONDITION_NAMES = ("standard_4", "standard_6", "cot_4", "cot_6")
TYPE_CODES = {"pb": InferenceType.PRONOMINAL_BRIDGING, "tc": InferenceType.TEXT_CONNECTING, "gf": InferenceType.GAP_FILLING}


@dataclass
class CliConfig:
    bank: Path = field(default_factory=training_bank_path)
    targets: Path = field(default_factory=generation_targets_path)
    cassette: Path = field(default_factory=gateway.default_cassette_path)
    api_url: str = ""
    api_key: str = ""
    model: str = "gpt-4o"
    temperature: float = 0.0
    frequency_penalty: float = 0.2
    max_output_tokens: int = 2048
    workers: int = 4
    out_dir: Path = Path("out")

    def redacted(self) -> dict:
        doc = {
            "bank": str(self.bank),
            "targets": str(self.targets),
            "cassette": str(self.cassette),
            "api_url": self.api_url or "(unset)",
            "api_key": "***" if self.api_key else "(unset)",
            "model": self.model,
            "temperature": self.temperature,
            "frequency_penalty": self.frequency_penalty,
            "max_output_tokens": self.max_output_tokens,
            "workers": self.workers,
            "out_dir": str(self.out_dir),
        }
        return doc

    def decode_params(self) -> DecodeParams:
        return DecodeParams(
            model_name=self.model,
            temperature=self.temperature,
            frequency_penalty=self.frequency_penalty,
            max_output_tokens=self.max_output_tokens,
        )


def resolve_config(config_path: Path | None, overrides: dict) -> CliConfig:
    """Flags take precedence over environment variables over the config file."""
    cfg = CliConfig()
    path = config_path if config_path is not None else Path("itemforge.toml")
    if path.is_file():
        with open(path, "rb") as f:
            doc = tomllib.load(f)
        table = doc.get("itemforge", doc)
        for key in ("api_url", "api_key", "model"):
            if key in table:
                setattr(cfg, key, str(table[key]))
        for key in ("temperature", "frequency_penalty"):
            if key in table:
                setattr(cfg, key, float(table[key]))
        for key in ("max_output_tokens", "workers"):
            if key in table:
                setattr(cfg, key, int(table[key]))
        for key in ("bank", "targets", "cassette", "out_dir"):
            if key in table:
                setattr(cfg, key, Path(table[key]))
    if os.environ.get(API_URL_ENV):
        cfg.api_url = os.environ[API_URL_ENV]
    if os.environ.get(API_KEY_ENV):
        cfg.api_key = os.environ[API_KEY_ENV]
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    return cfg


def fail(message: str, code: int, fmt: str = "text") -> None:
    if fmt == "json":
        click.echo(json.dumps({"error": message}, ensure_ascii=False))
    else:
        click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None, help="Config file (default ./itemforge.toml when present).")
@click.option("--verbose", is_flag=True, help="Print the resolved configuration (secrets redacted).")
@click.pass_context
def main(ctx: click.Context, config_path: Path | None, verbose: bool) -> None:
    """Generate, validate, and evaluate inference-targeted reading items."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["verbose"] = verbose
    if verbose:
        cfg = resolve_config(config_path, {})
        click.echo("config: " + json.dumps(cfg.redacted(), sort_keys=True), err=True)


def get_config(ctx: click.Context, **overrides) -> CliConfig:
    return resolve_config(ctx.obj.get("config_path"), overrides)


@main.command("validate")
@click.argument("bank_path", type=click.Path(path_type=Path))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_validate(bank_path: Path, fmt: str) -> None:
    """Load a bank and report every invariant violation."""
    try:
        bank = load_bank(bank_path)
    except FileNotFoundError as exc:
        fail(str(exc), EXIT_USAGE, fmt)
    except BankError as exc:
        fail(str(exc), EXIT_DOMAIN, fmt)
    violations = validate_bank(bank)
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "bank": bank.id,
                    "passages": len(bank.passages),
                    "items": len(bank.items),
                    "violations": [
                        {"owner": owner, "field": v.field, "rule": v.rule, "message": v.message}
                        for owner, v in violations
                    ],
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
    else:
        for owner, violation in violations:
            click.echo(f"{owner}: {violation}")
        if not violations:
            click.echo(f"bank {bank.id!r} is valid: {len(bank.passages)} passages, {len(bank.items)} items")
    sys.exit(EXIT_OK if not violations else EXIT_DOMAIN)


@main.command("prompt")
@click.option("--passage", "passage_id", required=True, help="Generation-target passage id.")
@click.option("--strategy", type=click.Choice(["standard", "cot"]), required=True)
@click.option("--examples", type=click.Choice(["4", "6"]), required=True)
@click.option("--type", "type_code", type=click.Choice(sorted(TYPE_CODES) + [t.value for t in TYPE_CODES.values()]), required=True)
@click.option("--questions", type=int, default=3, show_default=True)
@click.option("--bank", "bank_path", type=click.Path(path_type=Path), default=None, help="Training bank directory.")
@click.option("--targets", "targets_path", type=click.Path(path_type=Path), default=None, help="Target-passage bank directory.")
@click.option("--hash-only", is_flag=True, help="Print only the content hash.")
@click.pass_context
def cmd_prompt(
    ctx: click.Context,
    passage_id: str,
    strategy: str,
    examples: str,
    type_code: str,
    questions: int,
    bank_path: Path | None,
    targets_path: Path | None,
    hash_only: bool,
) -> None:
    """Assemble and print the exact prompt for one generation call."""
    cfg = get_config(ctx, bank=bank_path, targets=targets_path)
    target_type = TYPE_CODES.get(type_code) or InferenceType(type_code)
    try:
        bank = load_bank(cfg.bank)
        targets = load_bank(cfg.targets)
    except FileNotFoundError as exc:
        fail(str(exc), EXIT_USAGE)
    except BankError as exc:
        fail(str(exc), EXIT_DOMAIN)
    try:
        target = targets.passage(passage_id)
    except KeyError:
        fail(f"passage {passage_id!r} not found in {cfg.targets}", EXIT_DOMAIN)
    condition = GenerationCondition(PromptStrategy(strategy), int(examples), target_type, questions)
    try:
        bundle = promptkit.assemble_prompt(bank, target, condition)
    except promptkit.PromptError as exc:
        fail(str(exc), EXIT_DOMAIN)
    if hash_only:
        click.echo(bundle.content_hash)
    else:
        click.echo(bundle.system_text)
        click.echo("\n=== user ===\n")
        click.echo(bundle.user_text)
    sys.exit(EXIT_OK)


@main.command("generate")
@click.option("--mode", type=click.Choice(["live", "record", "replay"]), default="replay", show_default=True)
@click.option("--conditions", "condition_names", default="all", show_default=True, help="Comma-separated subset of standard_4,standard_6,cot_4,cot_6.")
@click.option("--types", "type_codes", default="pb,tc,gf", show_default=True)
@click.option("--questions", type=int, default=3, show_default=True)
@click.option("--bank", "bank_path", type=click.Path(path_type=Path), default=None)
@click.option("--targets", "targets_path", type=click.Path(path_type=Path), default=None)
@click.option("--cassette", "cassette_path", type=click.Path(path_type=Path), default=None)
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=None)
@click.option("--workers", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def cmd_generate(
    ctx: click.Context,
    mode: str,
    condition_names: str,
    type_codes: str,
    questions: int,
    bank_path: Path | None,
    targets_path: Path | None,
    cassette_path: Path | None,
    out_dir: Path | None,
    workers: int | None,
    fmt: str,
) -> None:
    """Run generation for every (target passage x condition) pair."""
    cfg = get_config(ctx, bank=bank_path, targets=targets_path, cassette=cassette_path, out_dir=out_dir, workers=workers)
    gateway_mode = GatewayMode(mode)

    if gateway_mode in (GatewayMode.LIVE, GatewayMode.RECORD):
        if not os.environ.get(API_KEY_ENV, "").strip():
            fail(f"{API_KEY_ENV} is not set; {mode} mode needs a credential", EXIT_DOMAIN, fmt)
        if not os.environ.get(API_URL_ENV, "").strip():
            fail(f"{API_URL_ENV} is not set; {mode} mode needs an endpoint URL", EXIT_DOMAIN, fmt)

    names = CONDITION_NAMES if condition_names == "all" else tuple(n.strip() for n in condition_names.split(","))
    for name in names:
        if name not in CONDITION_NAMES:
            fail(f"unknown condition {name!r}; choose from {', '.join(CONDITION_NAMES)}", EXIT_USAGE, fmt)
    types = []
    for code in type_codes.split(","):
        code = code.strip()
        if code not in TYPE_CODES:
            fail(f"unknown type code {code!r}; choose from pb, tc, gf", EXIT_USAGE, fmt)
        types.append(TYPE_CODES[code])

    conditions = []
    for name in names:
        strategy, count = name.rsplit("_", 1)
        for target_type in types:
            conditions.append(GenerationCondition(PromptStrategy(strategy), int(count), target_type, questions))

    try:
        bank = load_bank(cfg.bank)
        targets = load_bank(cfg.targets)
    except FileNotFoundError as exc:
        fail(str(exc), EXIT_USAGE, fmt)
    except BankError as exc:
        fail(str(exc), EXIT_DOMAIN, fmt)

    cassette = None
    if gateway_mode in (GatewayMode.REPLAY, GatewayMode.RECORD):
        if gateway_mode is GatewayMode.REPLAY and not Path(cfg.cassette).exists():
            fail(f"cassette not found: {cfg.cassette}", EXIT_USAGE, fmt)
        cassette = CassetteStore(cfg.cassette)

    runs_dir = Path(cfg.out_dir) / "runs"
    runs = gateway.run_generation(
        bank,
        targets.passages,
        conditions,
        cfg.decode_params(),
        gateway_mode,
        cassette=cassette,
        out_dir=runs_dir,
        max_workers=cfg.workers,
    )
    generated = gateway.generated_bank(runs, targets.passages)
    save_bank(generated, Path(cfg.out_dir) / "generated_bank")

    per_condition: dict[str, int] = {}
    failures = 0
    errors = []
    for run in runs:
        per_condition[run.condition.name] = per_condition.get(run.condition.name, 0) + len(run.items)
        failures += len(run.parse_failures)
        if run.error:
            errors.append(f"{run.run_id}: {run.error}")
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "runs": len(runs),
                    "items_per_condition": per_condition,
                    "parse_failures": failures,
                    "errors": errors,
                    "out_dir": str(cfg.out_dir),
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
    else:
        click.echo(f"{len(runs)} runs -> {sum(per_condition.values())} items ({runs_dir})")
        for name in names:
            click.echo(f"  {name}: {per_condition.get(name, 0)} items")
        if failures:
            click.echo(f"  parse failures: {failures}")
        for line in errors:
            click.echo(f"  run error: {line}", err=True)
    sys.exit(EXIT_DOMAIN if errors else EXIT_OK)


@main.group("eval")
def cmd_eval() -> None:
    """Drive the two-round, three-rater evaluation from files."""


@cmd_eval.command("init")
@click.option("--items", "items_path", type=click.Path(path_type=Path), required=True, help="Bank directory of items to rate.")
@click.option("--raters", required=True, help="Comma-separated list of exactly 3 rater ids.")
@click.option("--session-dir", type=click.Path(path_type=Path), default=Path("sessions"), show_default=True)
@click.option("--session-id", default="session", show_default=True)
def cmd_eval_init(items_path: Path, raters: str, session_dir: Path, session_id: str) -> None:
    try:
        bank = load_bank(items_path)
    except FileNotFoundError as exc:
        fail(str(exc), EXIT_USAGE)
    except BankError as exc:
        fail(str(exc), EXIT_DOMAIN)
    rater_ids = [r.strip() for r in raters.split(",") if r.strip()]
    try:
        session = evalflow.open_session(bank.items, rater_ids, session_id=session_id)
    except evalflow.EvalError as exc:
        fail(str(exc), EXIT_DOMAIN)
    path = evalflow.save_session(session, session_dir)
    reasoning_items = sum(1 for s in session.items if s.reasoning_applicable)
    click.echo(f"session {session_id!r}: {len(session.items)} items ({reasoning_items} with reasoning), state {session.state.value}")
    click.echo(str(path))
    sys.exit(EXIT_OK)


def _load_session_or_fail(session_path: Path) -> evalflow.EvaluationSession:
    if not Path(session_path).exists():
        fail(f"session not found: {session_path}", EXIT_USAGE)
    try:
        return evalflow.load_session(session_path)
    except evalflow.EvalError as exc:
        fail(str(exc), EXIT_DOMAIN)
    raise AssertionError("unreachable")


@cmd_eval.command("export")
@click.option("--session", "session_path", type=click.Path(path_type=Path), required=True)
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
@click.option("--rounds", default="1,2", show_default=True)
def cmd_eval_export(session_path: Path, out_path: Path, rounds: str) -> None:
    session = _load_session_or_fail(session_path)
    wanted = tuple(int(r) for r in rounds.split(","))
    count = evalflow.export_ratings(session, out_path, rounds=wanted)
    click.echo(f"exported {count} ratings to {out_path}")
    sys.exit(EXIT_OK)


@cmd_eval.command("import")
@click.option("--session", "session_path", type=click.Path(path_type=Path), required=True)
@click.option("--ratings", "ratings_path", type=click.Path(path_type=Path), required=True)
def cmd_eval_import(session_path: Path, ratings_path: Path) -> None:
    session = _load_session_or_fail(session_path)
    if not Path(ratings_path).exists():
        fail(f"ratings file not found: {ratings_path}", EXIT_USAGE)
    try:
        count = evalflow.import_ratings(session, ratings_path)
    except evalflow.EvalError as exc:
        fail(str(exc), EXIT_DOMAIN)
    evalflow.save_session(session, Path(session_path).parent.parent if Path(session_path).is_file() else Path(session_path).parent)
    click.echo(f"imported {count} ratings into session {session.session_id!r}")
    sys.exit(EXIT_OK)


@cmd_eval.command("open-round2")
@click.option("--session", "session_path", type=click.Path(path_type=Path), required=True)
def cmd_eval_open_round2(session_path: Path) -> None:
    session = _load_session_or_fail(session_path)
    try:
        queues = evalflow.open_round2(session)
    except evalflow.EvalError as exc:
        fail(str(exc), EXIT_DOMAIN)
    evalflow.save_session(session, Path(session_path).parent.parent if Path(session_path).is_file() else Path(session_path).parent)
    for rater_id in session.rater_ids:
        click.echo(f"{rater_id}: {len(queues.get(rater_id, []))} entries to review")
    sys.exit(EXIT_OK)


@cmd_eval.command("finalize")
@click.option("--session", "session_path", type=click.Path(path_type=Path), required=True)
def cmd_eval_finalize(session_path: Path) -> None:
    session = _load_session_or_fail(session_path)
    try:
        verdicts = evalflow.finalize(session)
    except evalflow.EvalError as exc:
        fail(str(exc), EXIT_DOMAIN)
    evalflow.save_session(session, Path(session_path).parent.parent if Path(session_path).is_file() else Path(session_path).parent)
    accepted = sum(v.accepted_quality for v in verdicts.per_item.values())
    matched = sum(v.matched_type for v in verdicts.per_item.values())
    click.echo(f"finalized {len(verdicts.per_item)} items: {accepted} accepted quality, {matched} matched type")
    sys.exit(EXIT_OK)


@main.command("stats")
@click.option("--session", "session_path", type=click.Path(path_type=Path), required=True)
@click.option("--runs", "runs_dir", type=click.Path(path_type=Path), required=True)
@click.option("--labels", "labels_path", type=click.Path(path_type=Path), default=None, help="Operational labels.jsonl for the coverage block.")
@click.option("--coder", default="c1", show_default=True, help="Coder whose labels define the operational distribution.")
@click.option("--ratings-round", type=click.Choice(["effective", "round1"]), default="effective", show_default=True)
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=Path("report"), show_default=True)
def cmd_stats(
    session_path: Path,
    runs_dir: Path,
    labels_path: Path | None,
    coder: str,
    ratings_round: str,
    out_dir: Path,
) -> None:
    """Emit report.json, report.md, confusion.csv, and coverage.csv."""
    session = _load_session_or_fail(session_path)
    if session.state is not evalflow.SessionState.FINALIZED or session.verdicts is None:
        fail(f"session {session.session_id!r} is not finalized (state: {session.state.value})", EXIT_DOMAIN)
    if not Path(runs_dir).exists():
        fail(f"runs directory not found: {runs_dir}", EXIT_USAGE)
    runs = gateway.load_runs(runs_dir)
    verdicts = session.verdicts

    agreement = {}
    for criterion in evalflow.Criterion:
        matrix = build_criterion_matrix(session, criterion, ratings_round)
        if matrix is not None:
            agreement[criterion.value] = agreestats.agreement_report(matrix)

    try:
        results = agreestats.condition_results(verdicts, runs)
        confusion_dist = agreestats.confusion(verdicts, runs)
    except agreestats.StatsError as exc:
        fail(str(exc), EXIT_DOMAIN)

    coverage = None
    if labels_path is not None:
        if not Path(labels_path).exists():
            fail(f"labels file not found: {labels_path}", EXIT_USAGE)
        records = taxonomy.load_labels(Path(labels_path))
        operational = taxonomy.distribution([r.label for r in records if r.coder_id == coder])
        generated = taxonomy.distribution(
            [v.final_observed_type for v in verdicts.per_item.values() if v.final_observed_type is not None]
        )
        try:
            coverage = agreestats.coverage_compare(operational, generated)
        except agreestats.StatsError as exc:
            fail(str(exc), EXIT_DOMAIN)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    doc = agreestats.report_json(agreement, results, confusion_dist, coverage)
    (out / "report.json").write_text(json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    (out / "report.md").write_text(agreestats.report_markdown(agreement, results, confusion_dist, coverage), encoding="utf-8")
    (out / "confusion.csv").write_text(agreestats.confusion_csv(confusion_dist), encoding="utf-8")
    if coverage is not None:
        (out / "coverage.csv").write_text(agreestats.coverage_csv(coverage), encoding="utf-8")
    t = results.total
    click.echo(
        f"Total: {t.num_items} items, quality {t.quality_rate:.3f}, inference {t.inference_accuracy:.3f}, "
        f"reasoning {t.reasoning_rate:.3f}" if t.reasoning_rate is not None else f"Total: {t.num_items} items"
    )
    click.echo(f"report written to {out}")
    sys.exit(EXIT_OK)


def build_criterion_matrix(
    session: evalflow.EvaluationSession, criterion: evalflow.Criterion, ratings_round: str
) -> agreestats.RatingMatrix | None:
    """Items x raters matrix for one criterion; observed-type labels for
    the inference criterion, verdicts for the binary criteria."""
    item_ids = [
        s.item_id
        for s in session.items
        if criterion in session.applicable_criteria(s)
    ]
    if not item_ids:
        return None
    cells = {}
    for item_id in item_ids:
        for rater_id in session.rater_ids:
            if ratings_round == "round1":
                record = session.round1[(item_id, rater_id, criterion.value)]
            else:
                record = evalflow.effective_rating(session, item_id, rater_id, criterion)
            if criterion is evalflow.Criterion.INFERENCE_TYPE_ACCURACY:
                cells[(item_id, rater_id)] = record.observed_type.value
            else:
                cells[(item_id, rater_id)] = str(record.verdict)
    return agreestats.RatingMatrix(items=tuple(item_ids), raters=tuple(session.rater_ids), cells=cells)


@main.command("serve")
@click.option("--port", type=int, default=8321, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--session-dir", type=click.Path(path_type=Path), required=True)
@click.option("--tokens-file", type=click.Path(path_type=Path), required=True)
@click.option("--bank", "bank_path", type=click.Path(path_type=Path), default=None, help="Bank with the items under evaluation.")
@click.option("--runs", "runs_dir", type=click.Path(path_type=Path), default=None)
@click.option("--static-dir", type=click.Path(path_type=Path), default=None)
def cmd_serve(
    port: int,
    host: str,
    session_dir: Path,
    tokens_file: Path,
    bank_path: Path | None,
    runs_dir: Path | None,
    static_dir: Path | None,
) -> None:
    """Serve the rating API and web interface."""
    from . import server

    try:
        app = server.create_app(
            session_dir=session_dir,
            tokens_file=tokens_file,
            bank_path=bank_path,
            runs_dir=runs_dir,
            static_dir=static_dir,
        )
    except server.ServerStartupError as exc:
        fail(str(exc), EXIT_DOMAIN)
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
