"""Lifting per-item metrics to item sets by weighted averaging.

Any per-item ratio metric extends to an arbitrary set of items as the
weighted mean of the member values, i.e. the expected value of the metric
for an item drawn from the set. The same recipe covers the overall
evaluation universe, individual ideal or actual clusters, and arbitrary
user-defined slices, and it composes: the weighted mean of block
aggregates over any partition of a set equals the aggregate of the set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import AlignedEvaluation, WeightedItemSet
from .errors import EmptySliceError, UnknownItemError, UnknownMetricError
from .pointwise import ItemMetrics

# the lifted ratio metrics, in report order
METRIC_FIELDS: tuple[str, ...] = (
    "precision",
    "recall",
    "accuracy",
    "jaccard_distance",
    "over_merge_rate",
    "under_merge_rate",
)

SUBJECT_KINDS: tuple[str, ...] = ("overall", "ideal_cluster", "actual_cluster", "slice")


@dataclass(frozen=True)
class SliceSpec:
    """A named, user-defined subset of items to report on."""

    name: str
    members: frozenset[str]


@dataclass(frozen=True)
class AggregateMetrics:
    """Weighted-mean metrics for one subject (overall, a cluster, or a slice).

    ``source_size`` echoes the unrestricted member count for cluster
    subjects (the cluster may extend beyond the evaluation universe);
    ``dropped_members`` counts slice entries that fell outside it.
    """

    subject_kind: str
    subject_id: str | None
    weight: float
    item_count: int
    precision: float
    recall: float
    accuracy: float
    jaccard_distance: float
    over_merge_rate: float
    under_merge_rate: float
    source_size: int | None = None
    dropped_members: int | None = None

    def metric(self, name: str) -> float:
        if name not in METRIC_FIELDS:
            raise UnknownMetricError(name, METRIC_FIELDS)
        return getattr(self, name)


def aggregate(
    per_item: Mapping[str, ItemMetrics],
    weights: WeightedItemSet,
    members: Iterable[str],
    *,
    subject_kind: str = "overall",
    subject_id: str | None = None,
    source_size: int | None = None,
    dropped_members: int | None = None,
) -> AggregateMetrics:
    """Weighted mean of every metric over ``members``.

    A single-member set returns the member's metrics unchanged, so
    singleton aggregates compose exactly.
    """
    ids = sorted(members)
    if not ids:
        raise EmptySliceError(subject_id or subject_kind)
    for i in ids:
        if i not in per_item:
            raise UnknownItemError(i)
    if len(ids) == 1:
        m = per_item[ids[0]]
        values = {f: getattr(m, f) for f in METRIC_FIELDS}
        denom = weights.weight(ids[0])
    else:
        ws = [weights.weight(i) for i in ids]
        denom = math.fsum(ws)
        values = {
            f: math.fsum(w * getattr(per_item[i], f) for w, i in zip(ws, ids)) / denom
            for f in METRIC_FIELDS
        }
    return AggregateMetrics(
        subject_kind=subject_kind,
        subject_id=subject_id,
        weight=denom,
        item_count=len(ids),
        source_size=source_size,
        dropped_members=dropped_members,
        **values,
    )


def per_cluster_metrics(
    ev: AlignedEvaluation,
    per_item: Mapping[str, ItemMetrics],
) -> list[AggregateMetrics]:
    """One aggregate per ideal cluster and per actual cluster.

    Clusters are taken as restricted to the evaluation universe; the
    unrestricted size travels along as metadata. Ideal clusters come
    first, each side sorted by cluster id.
    """
    out: list[AggregateMetrics] = []
    for cid in sorted(ev.ideal_members):
        out.append(
            aggregate(
                per_item,
                ev.items,
                ev.ideal_members[cid],
                subject_kind="ideal_cluster",
                subject_id=cid,
                source_size=ev.ideal_source_sizes.get(cid),
            )
        )
    for cid in sorted(ev.actual_members):
        out.append(
            aggregate(
                per_item,
                ev.items,
                ev.actual_members[cid],
                subject_kind="actual_cluster",
                subject_id=cid,
                source_size=ev.actual_source_sizes.get(cid),
            )
        )
    return out


def resolve_slice(spec: SliceSpec, ev: AlignedEvaluation) -> tuple[frozenset[str], int]:
    """Slice members restricted to the evaluation universe, plus drop count.

    Items outside the universe are dropped rather than rejected; item
    populations drift over time and slice definitions may lag behind. A
    slice with nothing left raises :class:`EmptySliceError`.
    """
    kept = frozenset(i for i in spec.members if i in ev)
    dropped = len(spec.members) - len(kept)
    if not kept:
        raise EmptySliceError(spec.name)
    return kept, dropped


def slice_metrics(
    ev: AlignedEvaluation,
    per_item: Mapping[str, ItemMetrics],
    slices: Iterable[SliceSpec],
) -> list[AggregateMetrics]:
    """Aggregates for user-defined slices, sorted by slice name."""
    out = []
    for spec in sorted(slices, key=lambda s: s.name):
        kept, dropped = resolve_slice(spec, ev)
        out.append(
            aggregate(
                per_item,
                ev.items,
                kept,
                subject_kind="slice",
                subject_id=spec.name,
                dropped_members=dropped,
            )
        )
    return out


def rank_clusters(
    metrics_list: Iterable[AggregateMetrics],
    by: str,
    order: str = "ascending",
    limit: int | None = None,
) -> list[AggregateMetrics]:
    """Sort aggregates by one metric; ties break by ascending subject id.

    ``order`` is "ascending" or "descending". Sorting is stable, so equal
    metric values keep the id order.
    """
    if by not in METRIC_FIELDS:
        raise UnknownMetricError(by, METRIC_FIELDS)
    if order not in ("ascending", "descending"):
        raise ValueError(f"order must be 'ascending' or 'descending', got {order!r}")
    rows = sorted(metrics_list, key=lambda a: (a.subject_id or "", a.subject_kind))
    rows.sort(key=lambda a: getattr(a, by), reverse=(order == "descending"))
    if limit is not None:
        rows = rows[:limit]
    return rows
