"""Per-item confusion matrices and ratio metrics.

From the perspective of one item, the evaluation universe splits into
four disjoint sets: items shared by its ideal and actual clusters (true
positives), items only in its actual cluster (false positives), items
only in its ideal cluster (false negatives), and everything else (true
negatives). Summing weights over those sets gives a 2x2 confusion matrix
per item, from which the standard ratio metrics follow.

Confusion entries are computed from per-cluster weight sums and
intersection weights; the four sets themselves are materialized only on
demand for drill-down. Every cluster's weight and every intersection
weight is an exactly-rounded sum over members in sorted item order, so
boundary cases (an empty false-positive or false-negative side) come out
as exact zeros rather than rounding noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AlignedEvaluation
from .errors import UnknownItemError


@dataclass(frozen=True)
class ItemPartition:
    """The four-way split of the evaluation universe seen from one item."""

    true_positives: frozenset[str]
    false_positives: frozenset[str]
    false_negatives: frozenset[str]
    true_negatives: frozenset[str]


@dataclass(frozen=True)
class ItemConfusion:
    """Weighted 2x2 confusion matrix from one item's perspective.

    The focal item is always a true positive of itself, so ``tp`` is at
    least the focal item's weight and never zero; the four entries sum to
    the weight of the whole evaluation universe.
    """

    tp: float
    fp: float
    fn: float
    tn: float

    @property
    def total(self) -> float:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class ItemMetrics:
    """Ratio metrics derived from one item's confusion matrix.

    ``informedness`` and ``markedness`` are optional extras; they are None
    whenever their true-negative denominator is zero.
    """

    precision: float
    recall: float
    accuracy: float
    jaccard_index: float
    jaccard_distance: float
    over_merge_rate: float
    under_merge_rate: float
    informedness: float | None = None
    markedness: float | None = None


def _clamp0(x: float) -> float:
    # guards rounding noise at exact-zero boundaries; never hides real negatives
    return x if x > 0.0 else 0.0


def item_partition(ev: AlignedEvaluation, item: str) -> ItemPartition:
    """Materialize the four sets for drill-down into one item's situation."""
    ideal = ev.ideal_cluster_of(item)
    actual = ev.actual_cluster_of(item)
    tp = ideal & actual
    fp = actual - ideal
    fn = ideal - actual
    tn = ev.item_set - (ideal | actual)
    return ItemPartition(frozenset(tp), frozenset(fp), frozenset(fn), frozenset(tn))


def item_confusion(ev: AlignedEvaluation, item: str) -> ItemConfusion:
    """Confusion entries for one item, from cluster and intersection weights."""
    try:
        gid = ev.ideal_label_of[item]
        aid = ev.actual_label_of[item]
    except KeyError:
        raise UnknownItemError(item) from None
    inter = ev.ideal_members[gid] & ev.actual_members[aid]
    tp = ev.items.subset_weight(inter)
    fp = _clamp0(ev.actual_weights[aid] - tp)
    fn = _clamp0(ev.ideal_weights[gid] - tp)
    tn = _clamp0(ev.total_weight - tp - fp - fn)
    return ItemConfusion(tp, fp, fn, tn)


def item_metrics(confusion: ItemConfusion) -> ItemMetrics:
    """All ratio metrics for one confusion matrix.

    ``tp`` is positive by construction, so precision, recall, and the
    Jaccard pair never divide by zero.
    """
    tp, fp, fn, tn = confusion.tp, confusion.fp, confusion.fn, confusion.tn
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    accuracy = (tp + tn) / (tp + fp + fn + tn)
    mistaken = fn + fp
    union = mistaken + tp
    informedness = None
    if tn + fp > 0.0:
        informedness = tp / (tp + fn) + tn / (tn + fp) - 1.0
    markedness = None
    if tn + fn > 0.0:
        markedness = tp / (tp + fp) + tn / (tn + fn) - 1.0
    return ItemMetrics(
        precision=precision,
        recall=recall,
        accuracy=accuracy,
        jaccard_index=tp / union,
        jaccard_distance=mistaken / union,
        over_merge_rate=1.0 - precision,
        under_merge_rate=1.0 - recall,
        informedness=informedness,
        markedness=markedness,
    )


def all_item_metrics(
    ev: AlignedEvaluation,
) -> dict[str, tuple[ItemConfusion, ItemMetrics]]:
    """Confusion matrix and metrics for every item of the evaluation.

    Items that share both their ideal and their actual cluster see the
    same confusion matrix, so the result reuses one pair of objects per
    distinct cluster intersection. The mapping content is deterministic:
    weight sums run in sorted item order throughout.
    """
    ideal_label_of = ev.ideal_label_of
    actual_label_of = ev.actual_label_of
    cell_weights: dict[tuple[str, str], list[float]] = {}
    items = ev.items
    for i in items.sorted_items:
        pair = (ideal_label_of[i], actual_label_of[i])
        cell_weights.setdefault(pair, []).append(items.weight(i))
    total = ev.total_weight
    per_cell: dict[tuple[str, str], tuple[ItemConfusion, ItemMetrics]] = {}
    for pair, weights in cell_weights.items():
        gid, aid = pair
        tp = math.fsum(weights)
        fp = _clamp0(ev.actual_weights[aid] - tp)
        fn = _clamp0(ev.ideal_weights[gid] - tp)
        tn = _clamp0(total - tp - fp - fn)
        confusion = ItemConfusion(tp, fp, fn, tn)
        per_cell[pair] = (confusion, item_metrics(confusion))
    return {
        i: per_cell[(ideal_label_of[i], actual_label_of[i])]
        for i in items.sorted_items
    }
