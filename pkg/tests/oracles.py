"""Independent brute-force reference implementations used as oracles.

These deliberately use a different formulation (numpy contingency tables
and per-item category-count tables) from the production code's streaming
Counter arithmetic, so agreement between the two is a real check.
"""

from __future__ import annotations

import numpy as np


def brute_percent_agreement(col_a: list[str], col_b: list[str]) -> float:
    return float(np.mean([a == b for a, b in zip(col_a, col_b)]))


def brute_cohen_kappa(col_a: list[str], col_b: list[str]) -> float:
    """Cohen's kappa from an explicit N x N contingency table."""
    categories = sorted(set(col_a) | set(col_b))
    index = {c: i for i, c in enumerate(categories)}
    table = np.zeros((len(categories), len(categories)))
    for a, b in zip(col_a, col_b):
        table[index[a], index[b]] += 1
    total = table.sum()
    observed = np.trace(table) / total
    expected = float(np.dot(table.sum(axis=1) / total, table.sum(axis=0) / total))
    return float((observed - expected) / (1.0 - expected))


def brute_fleiss_kappa(columns: dict[str, list[str]]) -> float:
    """Fleiss' kappa from the items x categories count table."""
    raters = list(columns)
    n_items = len(columns[raters[0]])
    categories = sorted({c for col in columns.values() for c in col})
    index = {c: i for i, c in enumerate(categories)}
    table = np.zeros((n_items, len(categories)))
    for col in columns.values():
        for i, category in enumerate(col):
            table[i, index[category]] += 1
    n = table.sum(axis=1)[0]
    p_cat = table.sum(axis=0) / table.sum()
    p_items = ((table * table).sum(axis=1) - n) / (n * (n - 1))
    p_bar = p_items.mean()
    p_exp = float((p_cat * p_cat).sum())
    return float((p_bar - p_exp) / (1.0 - p_exp))


def brute_adjudication_queues(
    raters: tuple[str, ...],
    ratings: dict[tuple[str, str], str],
    items: list[str],
    label_valued: bool,
) -> dict[str, set[str]]:
    """Queue membership per rater by direct case analysis of every item."""
    queues: dict[str, set[str]] = {r: set() for r in raters}
    for item in items:
        values = {r: ratings[(item, r)] for r in raters}
        for rater in raters:
            others = [values[o] for o in raters if o != rater]
            if others[0] == others[1] and values[rater] != others[0]:
                queues[rater].add(item)
            elif label_valued and len({values[rater], *others}) == 3:
                queues[rater].add(item)
    return queues
