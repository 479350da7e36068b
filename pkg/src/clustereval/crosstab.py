"""Sparse cross-tabulation engine.

The cross-tab records, for every (ideal cluster, actual cluster) pair
with a non-empty intersection, the weight of that intersection. Each item
contributes its weight to exactly one cell, and every item of a cell sees
the same confusion matrix:

    tp = the cell weight
    fp = its column sum minus the cell
    fn = its row sum minus the cell
    tn = the remainder of the total weight

That makes one pass over the cells sufficient to reproduce every
per-item metric, which is what lets this engine scale to large
evaluations. Only non-empty cells are ever stored; a dense matrix never
materializes.

Work may be split across worker threads, but the reduction structure is
fixed: items are folded into partial cell maps chunk by chunk at a
constant chunk size, and partials merge in chunk order. Row sums, column
sums, and the total are folds over the final cells in sorted cell order.
Results are therefore bit-identical for any thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

from .aggregation import METRIC_FIELDS, AggregateMetrics
from .core import AlignedEvaluation, WeightedItemSet
from .errors import UnknownCellError
from .pointwise import ItemConfusion, ItemMetrics, item_metrics

# fixed fold width; never derived from the thread count
CHUNK_SIZE = 8192


@dataclass(frozen=True)
class CellConfusion:
    """Confusion entries shared by every item of one cross-tab cell."""

    tp: float
    fp: float
    fn: float
    tn: float


class CrossTab:
    """Sparse intersection-weight matrix with row, column, and total sums."""

    __slots__ = ("_cells", "_sorted_cells", "_row_sums", "_col_sums", "_total")

    def __init__(self, cells: dict[tuple[str, str], float]):
        self._cells = cells
        self._sorted_cells = tuple(sorted(cells))
        row_sums: dict[str, float] = {}
        col_sums: dict[str, float] = {}
        total = 0.0
        for gid, aid in self._sorted_cells:
            w = cells[(gid, aid)]
            row_sums[gid] = row_sums.get(gid, 0.0) + w
            col_sums[aid] = col_sums.get(aid, 0.0) + w
            total += w
        self._row_sums = row_sums
        self._col_sums = col_sums
        self._total = total

    @property
    def cells(self) -> Mapping[tuple[str, str], float]:
        return self._cells

    @property
    def sorted_cells(self) -> tuple[tuple[str, str], ...]:
        return self._sorted_cells

    @property
    def row_sums(self) -> Mapping[str, float]:
        return self._row_sums

    @property
    def col_sums(self) -> Mapping[str, float]:
        return self._col_sums

    @property
    def total_weight(self) -> float:
        return self._total

    def __len__(self) -> int:
        return len(self._cells)

    def __repr__(self) -> str:
        return (
            f"CrossTab({len(self._cells)} cells, {len(self._row_sums)} rows, "
            f"{len(self._col_sums)} cols, total weight {self._total!r})"
        )


def _partial_cells(
    ev: AlignedEvaluation, chunk: Sequence[str]
) -> dict[tuple[str, str], float]:
    lists: dict[tuple[str, str], list[float]] = {}
    items = ev.items
    ideal_label_of = ev.ideal_label_of
    actual_label_of = ev.actual_label_of
    for i in chunk:
        pair = (ideal_label_of[i], actual_label_of[i])
        lists.setdefault(pair, []).append(items.weight(i))
    return {pair: math.fsum(ws) for pair, ws in lists.items()}


def build_crosstab(ev: AlignedEvaluation, threads: int = 1) -> CrossTab:
    """One cell per non-empty ideal/actual intersection."""
    items = ev.sorted_items
    chunks = [items[k : k + CHUNK_SIZE] for k in range(0, len(items), CHUNK_SIZE)]
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(lambda c: _partial_cells(ev, c), chunks))
    else:
        partials = [_partial_cells(ev, c) for c in chunks]
    cells: dict[tuple[str, str], float] = {}
    for part in partials:
        for pair in sorted(part):
            cells[pair] = cells.get(pair, 0.0) + part[pair]
    return CrossTab(cells)


def cell_confusion(ct: CrossTab, ideal_id: str, actual_id: str) -> CellConfusion:
    """The confusion matrix every item of one cell sees."""
    try:
        w = ct.cells[(ideal_id, actual_id)]
    except KeyError:
        raise UnknownCellError(ideal_id, actual_id) from None
    tp = w
    fp = max(ct.col_sums[actual_id] - w, 0.0)
    fn = max(ct.row_sums[ideal_id] - w, 0.0)
    tn = max(ct.total_weight - tp - fp - fn, 0.0)
    return CellConfusion(tp, fp, fn, tn)


@dataclass(frozen=True)
class CrossTabResult:
    """Per-item metrics plus aggregates, all derived from the cell matrix."""

    per_item: dict[str, tuple[ItemConfusion, ItemMetrics]]
    overall: AggregateMetrics
    ideal_clusters: list[AggregateMetrics]
    actual_clusters: list[AggregateMetrics]


def _cell_results(
    ct: CrossTab, pairs: Sequence[tuple[str, str]]
) -> list[tuple[ItemConfusion, ItemMetrics]]:
    out = []
    for gid, aid in pairs:
        c = cell_confusion(ct, gid, aid)
        confusion = ItemConfusion(c.tp, c.fp, c.fn, c.tn)
        out.append((confusion, item_metrics(confusion)))
    return out


def crosstab_report(
    ct: CrossTab,
    weights: WeightedItemSet,
    memberships: Mapping[str, tuple[str, str]],
    threads: int = 1,
) -> CrossTabResult:
    """Reproduce the per-item report from the cell matrix alone.

    All items of a cell share one metrics object. Aggregates are folded
    directly over cells (cell weight times cell metric), which is the
    same weighted mean the per-item route computes, up to rounding.
    """
    pairs = ct.sorted_cells
    chunks = [pairs[k : k + CHUNK_SIZE] for k in range(0, len(pairs), CHUNK_SIZE)]
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _cell_results(ct, c), chunks))
    else:
        parts = [_cell_results(ct, c) for c in chunks]
    by_cell: dict[tuple[str, str], tuple[ItemConfusion, ItemMetrics]] = {}
    for chunk, results in zip(chunks, parts):
        for pair, res in zip(chunk, results):
            by_cell[pair] = res

    per_item = {i: by_cell[memberships[i]] for i in sorted(memberships)}

    counts: dict[tuple[str, str], int] = {}
    for i in sorted(memberships):
        pair = memberships[i]
        counts[pair] = counts.get(pair, 0) + 1

    def fold(cell_pairs: Sequence[tuple[str, str]], denom: float) -> dict[str, float]:
        return {
            f: math.fsum(
                ct.cells[p] * getattr(by_cell[p][1], f) for p in cell_pairs
            )
            / denom
            for f in METRIC_FIELDS
        }

    row_cells: dict[str, list[tuple[str, str]]] = {}
    col_cells: dict[str, list[tuple[str, str]]] = {}
    for pair in pairs:
        row_cells.setdefault(pair[0], []).append(pair)
        col_cells.setdefault(pair[1], []).append(pair)

    overall = AggregateMetrics(
        subject_kind="overall",
        subject_id=None,
        weight=ct.total_weight,
        item_count=len(per_item),
        **fold(pairs, ct.total_weight),
    )
    ideal_rows = []
    for gid in sorted(row_cells):
        row_pairs = row_cells[gid]
        ideal_rows.append(
            AggregateMetrics(
                subject_kind="ideal_cluster",
                subject_id=gid,
                weight=ct.row_sums[gid],
                item_count=sum(counts[p] for p in row_pairs),
                **fold(row_pairs, ct.row_sums[gid]),
            )
        )
    actual_rows = []
    for aid in sorted(col_cells):
        col_pairs = col_cells[aid]
        actual_rows.append(
            AggregateMetrics(
                subject_kind="actual_cluster",
                subject_id=aid,
                weight=ct.col_sums[aid],
                item_count=sum(counts[p] for p in col_pairs),
                **fold(col_pairs, ct.col_sums[aid]),
            )
        )
    return CrossTabResult(per_item, overall, ideal_rows, actual_rows)


def crosstab_item_metrics(
    ev: AlignedEvaluation, threads: int = 1
) -> dict[str, tuple[ItemConfusion, ItemMetrics]]:
    """Per-item metrics via the cross-tab route, for engine selection."""
    ct = build_crosstab(ev, threads=threads)
    return crosstab_report(ct, ev.items, ev.memberships(), threads=threads).per_item
