"""Reliability and result statistics.

Pairwise percent agreement, Cohen's kappa (two raters), Fleiss' kappa
(any fixed number of raters), per-condition acceptance proportions,
requested-vs-observed inference-type confusion, and coverage comparison
between two labeled banks. All computations run on immutable snapshots in
double precision; reports render proportions at three decimals.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .evalflow import FinalVerdicts
from .gateway import GenerationRun
from .taxonomy import AnnotationLabel, Distribution, InferenceType, as_annotation_label


class StatsError(Exception):
    pass


class DegenerateMarginalsError(StatsError):
    """Expected agreement is 1, so chance-corrected agreement is undefined."""


@dataclass(frozen=True)
class RatingMatrix:
    """A complete items x raters grid of categorical ratings.

    Every (item, rater) cell must be filled; incomplete grids are rejected
    at construction so the statistics below never silently skip cells.
    """

    items: tuple[str, ...]
    raters: tuple[str, ...]
    cells: Mapping[tuple[str, str], str]

    def __post_init__(self) -> None:
        if len(set(self.items)) != len(self.items):
            raise StatsError("duplicate item ids in rating matrix")
        if len(set(self.raters)) != len(self.raters):
            raise StatsError("duplicate rater ids in rating matrix")
        missing = [
            (item, rater)
            for item in self.items
            for rater in self.raters
            if (item, rater) not in self.cells
        ]
        if missing:
            raise StatsError(f"rating matrix is incomplete; first missing cell: {missing[0]}")

    def column(self, rater: str) -> list[str]:
        if rater not in self.raters:
            raise StatsError(f"unknown rater {rater!r}")
        return [self.cells[(item, rater)] for item in self.items]

    def categories(self) -> list[str]:
        return sorted({self.cells[(item, rater)] for item in self.items for rater in self.raters})


@dataclass(frozen=True)
class AgreementReport:
    """Kappas are None where chance agreement is 1 (a single category
    everywhere), which leaves the statistic undefined."""

    pairwise_percent: dict[tuple[str, str], float]
    percent_range: tuple[float, float]
    cohen_kappa: dict[tuple[str, str], float | None]
    fleiss_kappa: float | None


@dataclass(frozen=True)
class ConditionRow:
    condition: str
    num_items: int
    quality_rate: float | None
    inference_accuracy: float | None
    reasoning_rate: float | None  # None = not applicable
    unresolved_types: int = 0


@dataclass(frozen=True)
class ConditionResults:
    rows: list[ConditionRow]
    total: ConditionRow


@dataclass(frozen=True)
class ConfusionDistribution:
    """Observed-label counts per requested inference type.

    Row sums equal the number of type-resolved items of that requested
    type; unresolved items are counted separately, never in the rows.
    """

    rows: dict[InferenceType, dict[AnnotationLabel, int]]
    unresolved: dict[InferenceType, int]

    def match_rate(self, requested: InferenceType) -> float:
        row = self.rows[requested]
        total = sum(row.values())
        if total == 0:
            raise StatsError(f"no resolved items with requested type {requested.value}")
        return row.get(as_annotation_label(requested), 0) / total

    def observed_share(self, label: AnnotationLabel) -> float:
        """Share of the given observed label over all resolved items."""
        total = sum(sum(row.values()) for row in self.rows.values())
        if total == 0:
            raise StatsError("confusion distribution is empty")
        count = sum(row.get(label, 0) for row in self.rows.values())
        return count / total


@dataclass(frozen=True)
class CoverageReport:
    """Aligned per-label proportions of two distributions."""

    labels: dict[AnnotationLabel, tuple[float, float]]
    tv_distance: float


def percent_agreement(matrix: RatingMatrix, pair: tuple[str, str]) -> float:
    """Fraction of items on which the two raters gave the same category."""
    a, b = pair
    col_a, col_b = matrix.column(a), matrix.column(b)
    if not matrix.items:
        raise StatsError("percent agreement is undefined on an empty matrix")
    return sum(1 for x, y in zip(col_a, col_b) if x == y) / len(matrix.items)


def cohen_kappa(matrix: RatingMatrix, pair: tuple[str, str]) -> float:
    """Chance-corrected two-rater agreement.

    kappa = (p_o - p_e) / (1 - p_e), where p_o is the observed agreement
    and p_e the expected agreement from the product of the two raters'
    marginal category proportions.
    """
    a, b = pair
    col_a, col_b = matrix.column(a), matrix.column(b)
    n = len(matrix.items)
    if n == 0:
        raise StatsError("Cohen's kappa is undefined on an empty matrix")
    p_o = sum(1 for x, y in zip(col_a, col_b) if x == y) / n
    marg_a = Counter(col_a)
    marg_b = Counter(col_b)
    categories = set(marg_a) | set(marg_b)
    p_e = sum((marg_a.get(c, 0) / n) * (marg_b.get(c, 0) / n) for c in categories)
    if p_e >= 1.0:
        raise DegenerateMarginalsError("both raters use a single category; expected agreement is 1")
    return (p_o - p_e) / (1.0 - p_e)


def fleiss_kappa(matrix: RatingMatrix) -> float:
    """Multi-rater chance-corrected agreement.

    Per-item agreement P_i = [sum_j n_ij (n_ij - 1)] / [n (n - 1)] with n
    raters; expected agreement is the sum of squared pooled category
    shares; kappa = (mean(P_i) - P_e) / (1 - P_e).
    """
    n_items = len(matrix.items)
    n_raters = len(matrix.raters)
    if n_items < 1:
        raise StatsError("Fleiss' kappa needs at least one item")
    if n_raters < 2:
        raise StatsError("Fleiss' kappa needs at least two raters")

    category_totals: Counter[str] = Counter()
    p_bar_sum = 0.0
    for item in matrix.items:
        counts = Counter(matrix.cells[(item, rater)] for rater in matrix.raters)
        category_totals.update(counts)
        p_bar_sum += sum(c * (c - 1) for c in counts.values()) / (n_raters * (n_raters - 1))
    p_bar = p_bar_sum / n_items

    total_ratings = n_items * n_raters
    p_e = sum((count / total_ratings) ** 2 for count in category_totals.values())
    if p_e >= 1.0:
        raise DegenerateMarginalsError("all ratings fall in a single category; expected agreement is 1")
    return (p_bar - p_e) / (1.0 - p_e)


def agreement_report(matrix: RatingMatrix) -> AgreementReport:
    """Pairwise percent agreement (with range), Cohen's and Fleiss' kappa."""
    pairs = list(combinations(matrix.raters, 2))
    pairwise = {pair: percent_agreement(matrix, pair) for pair in pairs}
    cohen: dict[tuple[str, str], float | None] = {}
    for pair in pairs:
        try:
            cohen[pair] = cohen_kappa(matrix, pair)
        except DegenerateMarginalsError:
            cohen[pair] = None
    try:
        fleiss: float | None = fleiss_kappa(matrix)
    except DegenerateMarginalsError:
        fleiss = None
    values = list(pairwise.values())
    return AgreementReport(
        pairwise_percent=pairwise,
        percent_range=(min(values), max(values)),
        cohen_kappa=cohen,
        fleiss_kappa=fleiss,
    )


def matrix_from_columns(columns: Mapping[str, Iterable[str]]) -> RatingMatrix:
    """Build a matrix from per-rater category sequences of equal length."""
    raters = tuple(columns)
    lists = {rater: list(values) for rater, values in columns.items()}
    lengths = {len(v) for v in lists.values()}
    if len(lengths) != 1:
        raise StatsError(f"rater columns differ in length: {sorted(lengths)}")
    n = lengths.pop()
    items = tuple(f"i{idx}" for idx in range(n))
    cells = {(items[idx], rater): lists[rater][idx] for rater in raters for idx in range(n)}
    return RatingMatrix(items=items, raters=raters, cells=cells)


def _rate(numerator: int, denominator: int) -> float | None:
    return numerator / denominator if denominator else None


def condition_results(verdicts: FinalVerdicts, runs: list[GenerationRun]) -> ConditionResults:
    """Acceptance proportions per generation condition plus a total row.

    The reasoning rate is computed only over items where the criterion
    applied (chain-of-thought output); items whose final observed type is
    unresolved are excluded from the inference-accuracy numerator and
    denominator and surfaced as a separate count.
    """
    item_condition: dict[str, str] = {}
    condition_order: list[str] = []
    for run in runs:
        if run.condition.name not in condition_order:
            condition_order.append(run.condition.name)
        for item in run.items:
            item_condition[item.id] = run.condition.name
    unmapped = [item_id for item_id in verdicts.per_item if item_id not in item_condition]
    if unmapped:
        raise StatsError(f"{len(unmapped)} rated items map to no generation run; first: {unmapped[0]!r}")

    grouped: dict[str, list[str]] = {name: [] for name in condition_order}
    for item_id in verdicts.per_item:
        grouped[item_condition[item_id]].append(item_id)

    def row_for(name: str, item_ids: list[str]) -> ConditionRow:
        quality_hits = sum(verdicts.per_item[i].accepted_quality for i in item_ids)
        resolved = [i for i in item_ids if verdicts.per_item[i].final_observed_type is not None]
        inference_hits = sum(verdicts.per_item[i].matched_type for i in resolved)
        reasoning_items = [i for i in item_ids if verdicts.per_item[i].reasoning_ok is not None]
        reasoning_hits = sum(verdicts.per_item[i].reasoning_ok for i in reasoning_items)
        return ConditionRow(
            condition=name,
            num_items=len(item_ids),
            quality_rate=_rate(quality_hits, len(item_ids)),
            inference_accuracy=_rate(inference_hits, len(resolved)),
            reasoning_rate=_rate(reasoning_hits, len(reasoning_items)),
            unresolved_types=len(item_ids) - len(resolved),
        )

    rows = [row_for(name, grouped[name]) for name in condition_order]
    total = row_for("Total", [i for name in condition_order for i in grouped[name]])
    return ConditionResults(rows=rows, total=total)


def confusion(
    verdicts: FinalVerdicts,
    runs: list[GenerationRun],
    requested_types: Iterable[InferenceType] | None = None,
    conditions: Iterable[str] | None = None,
) -> ConfusionDistribution:
    """Observed-type distribution per requested type, optionally filtered
    to a subset of condition names."""
    wanted_conditions = set(conditions) if conditions is not None else None
    item_requested: dict[str, InferenceType] = {}
    for run in runs:
        if wanted_conditions is not None and run.condition.name not in wanted_conditions:
            continue
        for item in run.items:
            item_requested[item.id] = run.condition.target_type

    if requested_types is None:
        requested_types = sorted({t for t in item_requested.values()}, key=lambda t: t.value)
    rows: dict[InferenceType, dict[AnnotationLabel, int]] = {t: {} for t in requested_types}
    unresolved: dict[InferenceType, int] = {t: 0 for t in requested_types}
    for item_id, requested in item_requested.items():
        if requested not in rows or item_id not in verdicts.per_item:
            continue
        observed = verdicts.per_item[item_id].final_observed_type
        if observed is None:
            unresolved[requested] += 1
            continue
        rows[requested][observed] = rows[requested].get(observed, 0) + 1
    return ConfusionDistribution(rows=rows, unresolved=unresolved)


def coverage_compare(a: Distribution, b: Distribution) -> CoverageReport:
    """Per-label proportion pairs and total variation distance, 0.5 * sum
    of absolute proportion differences."""
    if a.total <= 0 or b.total <= 0:
        raise StatsError("coverage comparison needs two non-empty distributions")
    labels = {}
    tv = 0.0
    for label in AnnotationLabel:
        pa, pb = a.proportion(label), b.proportion(label)
        labels[label] = (pa, pb)
        tv += abs(pa - pb)
    return CoverageReport(labels=labels, tv_distance=tv / 2.0)


# ---------------------------------------------------------------------------
# Report emitters
# ---------------------------------------------------------------------------


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.3f}"


def report_json(
    agreement: dict[str, AgreementReport] | None = None,
    conditions: ConditionResults | None = None,
    confusion_dist: ConfusionDistribution | None = None,
    coverage: CoverageReport | None = None,
) -> dict:
    doc: dict = {"schema_version": 1}
    if agreement is not None:
        doc["agreement"] = {
            criterion: {
                "pairwise_percent": {" vs ".join(pair): value for pair, value in report.pairwise_percent.items()},
                "percent_range": list(report.percent_range),
                "cohen_kappa": {" vs ".join(pair): value for pair, value in report.cohen_kappa.items()},
                "fleiss_kappa": report.fleiss_kappa,
            }
            for criterion, report in agreement.items()
        }
    if conditions is not None:
        doc["conditions"] = {
            "rows": [row.__dict__ for row in conditions.rows],
            "total": conditions.total.__dict__,
        }
    if confusion_dist is not None:
        doc["confusion"] = {
            requested.value: {label.value: count for label, count in sorted(row.items())}
            for requested, row in confusion_dist.rows.items()
        }
        doc["confusion_unresolved"] = {t.value: n for t, n in confusion_dist.unresolved.items()}
    if coverage is not None:
        doc["coverage"] = {
            label.value: {"a": pa, "b": pb} for label, (pa, pb) in coverage.labels.items()
        }
        doc["coverage_tv_distance"] = coverage.tv_distance
    return doc


_CONDITION_DISPLAY = {"standard_4": "standard_4", "standard_6": "standard_6", "cot_4": "CoT_4", "cot_6": "CoT_6"}


def report_markdown(
    agreement: dict[str, AgreementReport] | None = None,
    conditions: ConditionResults | None = None,
    confusion_dist: ConfusionDistribution | None = None,
    coverage: CoverageReport | None = None,
) -> str:
    out = io.StringIO()
    out.write("# Evaluation report\n")
    if agreement is not None:
        out.write("\n## Inter-rater agreement\n\n")
        out.write("| Criterion | Agreement (%) | Fleiss' kappa |\n|---|---|---|\n")
        for criterion, report in agreement.items():
            lo, hi = report.percent_range
            fleiss = "-" if report.fleiss_kappa is None else f"{report.fleiss_kappa:.2f}"
            out.write(f"| {criterion} | {lo * 100:.0f}-{hi * 100:.0f} | {fleiss} |\n")
    if conditions is not None:
        out.write("\n## Accepted items by generation method\n\n")
        out.write("| Generation Method | Num Items | General Item Quality | Inference Accuracy | Reasoning Quality |\n")
        out.write("|---|---|---|---|---|\n")
        for row in conditions.rows:
            display = _CONDITION_DISPLAY.get(row.condition, row.condition)
            out.write(
                f"| {display} | {row.num_items} | {_fmt(row.quality_rate)} | {_fmt(row.inference_accuracy)} | {_fmt(row.reasoning_rate)} |\n"
            )
        t = conditions.total
        out.write(
            f"| Total | {t.num_items} | {_fmt(t.quality_rate)} | {_fmt(t.inference_accuracy)} | {_fmt(t.reasoning_rate)} |\n"
        )
    if confusion_dist is not None:
        out.write("\n## Observed inference types per requested type\n\n")
        labels = [l for l in AnnotationLabel if any(l in row for row in confusion_dist.rows.values())]
        header = " | ".join(l.value for l in labels)
        out.write(f"| Requested | {header} | unresolved | match rate |\n")
        out.write("|" + "---|" * (len(labels) + 3) + "\n")
        for requested, row in confusion_dist.rows.items():
            cells = " | ".join(str(row.get(l, 0)) for l in labels)
            out.write(
                f"| {requested.value} | {cells} | {confusion_dist.unresolved.get(requested, 0)} | {_fmt(confusion_dist.match_rate(requested))} |\n"
            )
    if coverage is not None:
        out.write("\n## Inference-type coverage comparison\n\n")
        out.write("| Label | Bank A | Bank B |\n|---|---|---|\n")
        for label, (pa, pb) in coverage.labels.items():
            out.write(f"| {label.value} | {_fmt(pa)} | {_fmt(pb)} |\n")
        out.write(f"\nTotal variation distance: {coverage.tv_distance:.3f}\n")
    return out.getvalue()


def confusion_csv(confusion_dist: ConfusionDistribution) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["requested_type", "observed_label", "count"])
    for requested, row in confusion_dist.rows.items():
        for label, count in sorted(row.items()):
            writer.writerow([requested.value, label.value, count])
        if confusion_dist.unresolved.get(requested):
            writer.writerow([requested.value, "unresolved", confusion_dist.unresolved[requested]])
    return buf.getvalue()


def coverage_csv(coverage: CoverageReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "proportion_a", "proportion_b"])
    for label, (pa, pb) in coverage.labels.items():
        writer.writerow([label.value, f"{pa:.6f}", f"{pb:.6f}"])
    return buf.getvalue()
