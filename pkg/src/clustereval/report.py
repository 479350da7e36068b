"""Evaluation reports, A/B deltas, and drill-down.

A report bundles coverage statistics, the overall aggregate, per-cluster
and per-slice aggregates, and optionally the full per-item table. Reports
serialize to a stable JSON document: keys appear in a fixed order, lists
are sorted, and numbers use the shortest round-trippable decimal form, so
identical inputs and options always produce identical bytes and a written
report parses back bit-exactly.

Every report embeds a digest of the parsed, canonicalized ground truth.
Two reports can only be diffed when their digests agree, which is what
makes one set of evaluations reusable across many pairwise comparisons:
k evaluations against the same ground truth yield all k*(k-1)/2 deltas
without re-evaluating anything.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import __version__
from .aggregation import (
    METRIC_FIELDS,
    AggregateMetrics,
    SliceSpec,
    aggregate,
    per_cluster_metrics,
    slice_metrics,
)
from .core import (
    Clustering,
    CoverageStats,
    align,
    coverage,
    validate,
)
from .crosstab import crosstab_item_metrics
from .errors import (
    GroundTruthMismatchError,
    MissingPerItemDataError,
    UnknownMetricError,
)
from .fileio import read_clustering, read_slices
from .pointwise import ItemConfusion, ItemMetrics, all_item_metrics

DEFAULT_CROSSTAB_THRESHOLD = 10_000

# per-item metrics available for drill-down ordering; maps to whether a
# larger value is worse
_DRILL_METRICS: dict[str, bool] = {
    "precision": False,
    "recall": False,
    "accuracy": False,
    "jaccard_index": False,
    "jaccard_distance": True,
    "over_merge_rate": True,
    "under_merge_rate": True,
}


@dataclass(frozen=True)
class ItemRecord:
    """One per-item row of a report."""

    item: str
    weight: float
    ideal_cluster: str
    actual_cluster: str
    confusion: ItemConfusion
    metrics: ItemMetrics


@dataclass(frozen=True)
class MetricsReport:
    """Everything one evaluation produced."""

    tool_version: str
    engine_used: str
    ground_truth_digest: str
    coverage: CoverageStats
    overall: AggregateMetrics
    ideal_clusters: list[AggregateMetrics]
    actual_clusters: list[AggregateMetrics]
    slices: list[AggregateMetrics]
    slice_members: dict[str, tuple[str, ...]]
    per_item: list[ItemRecord] | None


def ground_truth_digest(clustering: Clustering) -> str:
    """Content hash of the parsed, canonicalized ground-truth clustering."""
    lines = sorted(
        f"{item}\t{clustering.assignment[item]}\t{clustering.items.weight(item)!r}"
        for item in clustering.items.sorted_items
    )
    digest = hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()
    return f"sha256:{digest}"


def _select_engine(engine: str, n_items: int, threshold: int) -> str:
    if engine == "auto":
        return "crosstab" if n_items > threshold else "pointwise"
    if engine not in ("pointwise", "crosstab"):
        raise ValueError(f"engine must be auto, pointwise, or crosstab, got {engine!r}")
    return engine


def evaluate(
    ideal: Clustering,
    actual: Clustering,
    slices: Iterable[SliceSpec] = (),
    *,
    engine: str = "auto",
    emit_items: bool = False,
    threads: int = 1,
    crosstab_threshold: int = DEFAULT_CROSSTAB_THRESHOLD,
) -> MetricsReport:
    """Evaluate ``actual`` against the ground truth ``ideal``.

    The engine choice never changes the metrics, only how they are
    computed; "auto" picks the cross-tab route above the item threshold.
    The thread count never affects output bytes.
    """
    validate(ideal)
    validate(actual)
    ev = align(ideal, actual)
    cov = coverage(ideal, actual)
    chosen = _select_engine(engine, len(ev), crosstab_threshold)
    if chosen == "crosstab":
        per_item = crosstab_item_metrics(ev, threads=threads)
    else:
        per_item = all_item_metrics(ev)
    metrics_map = {i: m for i, (_, m) in per_item.items()}
    overall = aggregate(metrics_map, ev.items, ev.sorted_items)
    clusters = per_cluster_metrics(ev, metrics_map)
    slice_list = list(slices)
    slice_rows = slice_metrics(ev, metrics_map, slice_list)
    slice_membership = {
        s.name: tuple(sorted(i for i in s.members if i in ev))
        for s in sorted(slice_list, key=lambda s: s.name)
    }
    records = None
    if emit_items:
        records = [
            ItemRecord(
                item=i,
                weight=ev.items.weight(i),
                ideal_cluster=ev.ideal_label_of[i],
                actual_cluster=ev.actual_label_of[i],
                confusion=per_item[i][0],
                metrics=per_item[i][1],
            )
            for i in ev.sorted_items
        ]
    return MetricsReport(
        tool_version=__version__,
        engine_used=chosen,
        ground_truth_digest=ground_truth_digest(ideal),
        coverage=cov,
        overall=overall,
        ideal_clusters=[a for a in clusters if a.subject_kind == "ideal_cluster"],
        actual_clusters=[a for a in clusters if a.subject_kind == "actual_cluster"],
        slices=slice_rows,
        slice_members=slice_membership,
        per_item=records,
    )


def evaluate_paths(
    ground_truth_path: str | Path,
    actual_path: str | Path,
    slice_paths: Sequence[str | Path] = (),
    *,
    engine: str = "auto",
    emit_items: bool = False,
    default_weight: float = 1.0,
    has_weights: bool | None = None,
    threads: int = 1,
    crosstab_threshold: int = DEFAULT_CROSSTAB_THRESHOLD,
) -> MetricsReport:
    """File-based front end to :func:`evaluate`."""
    ideal = read_clustering(
        ground_truth_path, has_weights=has_weights, default_weight=default_weight
    )
    actual = read_clustering(
        actual_path, has_weights=has_weights, default_weight=default_weight
    )
    slices: list[SliceSpec] = []
    merged: dict[str, set[str]] = {}
    for p in slice_paths:
        for spec in read_slices(p):
            merged.setdefault(spec.name, set()).update(spec.members)
    slices = [SliceSpec(name, frozenset(m)) for name, m in sorted(merged.items())]
    return evaluate(
        ideal,
        actual,
        slices,
        engine=engine,
        emit_items=emit_items,
        threads=threads,
        crosstab_threshold=crosstab_threshold,
    )


def _aggregate_to_dict(a: AggregateMetrics, members: tuple[str, ...] | None = None) -> dict:
    d: dict = {
        "subject_kind": a.subject_kind,
        "subject_id": a.subject_id,
        "weight": a.weight,
        "item_count": a.item_count,
        "source_size": a.source_size,
        "dropped_members": a.dropped_members,
    }
    if members is not None:
        d["members"] = list(members)
    for f in METRIC_FIELDS:
        d[f] = getattr(a, f)
    return d


def _aggregate_from_dict(d: Mapping) -> AggregateMetrics:
    return AggregateMetrics(
        subject_kind=d["subject_kind"],
        subject_id=d["subject_id"],
        weight=d["weight"],
        item_count=d["item_count"],
        source_size=d["source_size"],
        dropped_members=d["dropped_members"],
        **{f: d[f] for f in METRIC_FIELDS},
    )


def _record_to_dict(r: ItemRecord) -> dict:
    c, m = r.confusion, r.metrics
    return {
        "item": r.item,
        "weight": r.weight,
        "ideal_cluster": r.ideal_cluster,
        "actual_cluster": r.actual_cluster,
        "tp": c.tp,
        "fp": c.fp,
        "fn": c.fn,
        "tn": c.tn,
        "precision": m.precision,
        "recall": m.recall,
        "accuracy": m.accuracy,
        "jaccard_index": m.jaccard_index,
        "jaccard_distance": m.jaccard_distance,
        "over_merge_rate": m.over_merge_rate,
        "under_merge_rate": m.under_merge_rate,
        "informedness": m.informedness,
        "markedness": m.markedness,
    }


def _record_from_dict(d: Mapping) -> ItemRecord:
    return ItemRecord(
        item=d["item"],
        weight=d["weight"],
        ideal_cluster=d["ideal_cluster"],
        actual_cluster=d["actual_cluster"],
        confusion=ItemConfusion(tp=d["tp"], fp=d["fp"], fn=d["fn"], tn=d["tn"]),
        metrics=ItemMetrics(
            precision=d["precision"],
            recall=d["recall"],
            accuracy=d["accuracy"],
            jaccard_index=d["jaccard_index"],
            jaccard_distance=d["jaccard_distance"],
            over_merge_rate=d["over_merge_rate"],
            under_merge_rate=d["under_merge_rate"],
            informedness=d["informedness"],
            markedness=d["markedness"],
        ),
    )


def report_to_dict(report: MetricsReport) -> dict:
    cov = report.coverage
    return {
        "tool": "clustereval",
        "tool_version": report.tool_version,
        "engine_used": report.engine_used,
        "ground_truth_digest": report.ground_truth_digest,
        "coverage": {
            "common_count": cov.common_count,
            "common_weight": cov.common_weight,
            "ground_truth_only_count": cov.ground_truth_only_count,
            "ground_truth_only_weight": cov.ground_truth_only_weight,
            "actual_only_count": cov.actual_only_count,
            "actual_only_weight": cov.actual_only_weight,
        },
        "overall": _aggregate_to_dict(report.overall),
        "ideal_clusters": [_aggregate_to_dict(a) for a in report.ideal_clusters],
        "actual_clusters": [_aggregate_to_dict(a) for a in report.actual_clusters],
        "slices": [
            _aggregate_to_dict(a, members=report.slice_members.get(a.subject_id or "", ()))
            for a in report.slices
        ],
        "per_item": (
            None
            if report.per_item is None
            else [_record_to_dict(r) for r in report.per_item]
        ),
    }


def report_from_dict(d: Mapping) -> MetricsReport:
    cov = d["coverage"]
    return MetricsReport(
        tool_version=d["tool_version"],
        engine_used=d["engine_used"],
        ground_truth_digest=d["ground_truth_digest"],
        coverage=CoverageStats(
            common_count=cov["common_count"],
            common_weight=cov["common_weight"],
            ground_truth_only_count=cov["ground_truth_only_count"],
            ground_truth_only_weight=cov["ground_truth_only_weight"],
            actual_only_count=cov["actual_only_count"],
            actual_only_weight=cov["actual_only_weight"],
        ),
        overall=_aggregate_from_dict(d["overall"]),
        ideal_clusters=[_aggregate_from_dict(a) for a in d["ideal_clusters"]],
        actual_clusters=[_aggregate_from_dict(a) for a in d["actual_clusters"]],
        slices=[_aggregate_from_dict(a) for a in d["slices"]],
        slice_members={
            a["subject_id"]: tuple(a["members"]) for a in d["slices"]
        },
        per_item=(
            None
            if d["per_item"] is None
            else [_record_from_dict(r) for r in d["per_item"]]
        ),
    )


def serialize_report(report: MetricsReport) -> str:
    """Stable JSON text; identical reports serialize to identical bytes."""
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


def parse_report(text: str) -> MetricsReport:
    return report_from_dict(json.loads(text))


def write_report(report: MetricsReport, path: str | Path) -> None:
    Path(path).write_text(serialize_report(report), encoding="utf-8")


def read_report(path: str | Path) -> MetricsReport:
    return parse_report(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class DeltaRow:
    """Per-metric differences (experiment minus baseline) for one subject."""

    subject_kind: str
    subject_id: str | None
    deltas: dict[str, float]


@dataclass(frozen=True)
class DeltaReport:
    """Subject-aligned metric differences between two reports."""

    ground_truth_digest: str
    overall: DeltaRow
    ideal_clusters: list[DeltaRow]
    actual_clusters: list[DeltaRow]
    slices: list[DeltaRow]
    baseline_only: list[tuple[str, str]]
    experiment_only: list[tuple[str, str]]


def _delta_row(base: AggregateMetrics, exp: AggregateMetrics) -> DeltaRow:
    return DeltaRow(
        subject_kind=base.subject_kind,
        subject_id=base.subject_id,
        deltas={f: getattr(exp, f) - getattr(base, f) for f in METRIC_FIELDS},
    )


def _match_rows(
    base_rows: Sequence[AggregateMetrics],
    exp_rows: Sequence[AggregateMetrics],
    kind: str,
) -> tuple[list[DeltaRow], list[tuple[str, str]], list[tuple[str, str]]]:
    base_by_id = {a.subject_id: a for a in base_rows}
    exp_by_id = {a.subject_id: a for a in exp_rows}
    matched = [
        _delta_row(base_by_id[sid], exp_by_id[sid])
        for sid in sorted(base_by_id.keys() & exp_by_id.keys(), key=str)
    ]
    base_only = [(kind, sid) for sid in sorted(base_by_id.keys() - exp_by_id.keys(), key=str)]
    exp_only = [(kind, sid) for sid in sorted(exp_by_id.keys() - base_by_id.keys(), key=str)]
    return matched, base_only, exp_only


def delta(baseline: MetricsReport, experiment: MetricsReport) -> DeltaReport:
    """Metric differences between two evaluations of the same ground truth.

    Subjects are aligned by identity (cluster id or slice name); subjects
    present in only one report are listed separately rather than
    silently dropped. Works entirely from the stored reports.
    """
    if baseline.ground_truth_digest != experiment.ground_truth_digest:
        raise GroundTruthMismatchError(
            baseline.ground_truth_digest, experiment.ground_truth_digest
        )
    ideal_rows, b1, e1 = _match_rows(
        baseline.ideal_clusters, experiment.ideal_clusters, "ideal_cluster"
    )
    actual_rows, b2, e2 = _match_rows(
        baseline.actual_clusters, experiment.actual_clusters, "actual_cluster"
    )
    slice_rows, b3, e3 = _match_rows(baseline.slices, experiment.slices, "slice")
    return DeltaReport(
        ground_truth_digest=baseline.ground_truth_digest,
        overall=_delta_row(baseline.overall, experiment.overall),
        ideal_clusters=ideal_rows,
        actual_clusters=actual_rows,
        slices=slice_rows,
        baseline_only=b1 + b2 + b3,
        experiment_only=e1 + e2 + e3,
    )


def serialize_delta(report: DeltaReport) -> str:
    def row(r: DeltaRow) -> dict:
        return {
            "subject_kind": r.subject_kind,
            "subject_id": r.subject_id,
            **{f: r.deltas[f] for f in METRIC_FIELDS},
        }

    doc = {
        "tool": "clustereval",
        "ground_truth_digest": report.ground_truth_digest,
        "overall": row(report.overall),
        "ideal_clusters": [row(r) for r in report.ideal_clusters],
        "actual_clusters": [row(r) for r in report.actual_clusters],
        "slices": [row(r) for r in report.slices],
        "baseline_only": [list(s) for s in report.baseline_only],
        "experiment_only": [list(s) for s in report.experiment_only],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def drill(
    report: MetricsReport,
    *,
    ideal_cluster: str | None = None,
    actual_cluster: str | None = None,
    slice_name: str | None = None,
    worst: int | None = None,
    by: str | None = None,
) -> list[ItemRecord]:
    """Per-item rows for one cluster, one slice, or the worst-k items.

    Values are echoed exactly from the report. With ``worst``, rows sort
    worst-first by the ``by`` metric (ascending for higher-is-better
    metrics, descending otherwise), ties broken by item id; otherwise
    rows sort by ``by`` when given, else by item id.
    """
    if report.per_item is None:
        raise MissingPerItemDataError()
    selectors = [s is not None for s in (ideal_cluster, actual_cluster, slice_name, worst)]
    if sum(selectors) != 1:
        raise ValueError("exactly one of ideal_cluster, actual_cluster, slice_name, worst")
    if by is not None and by not in _DRILL_METRICS:
        raise UnknownMetricError(by, tuple(_DRILL_METRICS))

    rows = report.per_item
    if ideal_cluster is not None:
        rows = [r for r in rows if r.ideal_cluster == ideal_cluster]
    elif actual_cluster is not None:
        rows = [r for r in rows if r.actual_cluster == actual_cluster]
    elif slice_name is not None:
        members = report.slice_members.get(slice_name)
        if members is None:
            raise ValueError(f"report has no slice named {slice_name!r}")
        member_set = set(members)
        rows = [r for r in rows if r.item in member_set]
    else:
        if worst is not None and worst < 1:
            raise ValueError("worst must be at least 1")
        if by is None:
            raise ValueError("worst-k drill needs a metric (by=...)")

    rows = sorted(rows, key=lambda r: r.item)
    if by is not None:
        rows.sort(key=lambda r: getattr(r.metrics, by), reverse=_DRILL_METRICS[by])
    if worst is not None:
        rows = rows[:worst]
    return rows
