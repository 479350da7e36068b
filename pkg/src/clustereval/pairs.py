"""Co-membership pair-counting baseline.

The classical way to compare two clusterings builds a single confusion
matrix over unordered pairs of distinct items: a pair is a true positive
when its items share a cluster in both clusterings, a false negative when
they share only the ideal cluster, a false positive when they share only
the actual cluster, and a true negative otherwise.

Pair counts ignore item weights; this is the classical formulation, kept
as a comparison baseline. Note its quirks: an item that sits alone in
both clusterings only ever contributes true-negative pairs, while a
preserved cluster of n items contributes n*(n-1)/2 true-positive pairs,
an amplified influence that per-item metrics do not have.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlignedEvaluation
from .errors import TooFewItemsError


@dataclass(frozen=True)
class PairConfusion:
    """Pair counts plus derived rates (None when the denominator is zero)."""

    tp_pairs: int
    fn_pairs: int
    fp_pairs: int
    tn_pairs: int
    precision: float | None
    recall: float | None

    @property
    def total_pairs(self) -> int:
        return self.tp_pairs + self.fn_pairs + self.fp_pairs + self.tn_pairs


def _choose2(n: int) -> int:
    return n * (n - 1) // 2


def pair_confusion(ev: AlignedEvaluation) -> PairConfusion:
    """Count co-membership pairs via cell, row, and column item counts.

    O(cells) instead of O(n^2): pairs inside one cell share both
    clusters, pairs inside one row share the ideal cluster, pairs inside
    one column share the actual cluster.
    """
    n = len(ev)
    if n < 2:
        raise TooFewItemsError(n)
    cell_counts: dict[tuple[str, str], int] = {}
    row_counts: dict[str, int] = {}
    col_counts: dict[str, int] = {}
    for i in ev.sorted_items:
        pair = (ev.ideal_label_of[i], ev.actual_label_of[i])
        cell_counts[pair] = cell_counts.get(pair, 0) + 1
        row_counts[pair[0]] = row_counts.get(pair[0], 0) + 1
        col_counts[pair[1]] = col_counts.get(pair[1], 0) + 1
    tp = sum(_choose2(c) for c in cell_counts.values())
    same_ideal = sum(_choose2(c) for c in row_counts.values())
    same_actual = sum(_choose2(c) for c in col_counts.values())
    fn = same_ideal - tp
    fp = same_actual - tp
    tn = _choose2(n) - tp - fn - fp
    return PairConfusion(
        tp_pairs=tp,
        fn_pairs=fn,
        fp_pairs=fp,
        tn_pairs=tn,
        precision=tp / (tp + fp) if tp + fp > 0 else None,
        recall=tp / (tp + fn) if tp + fn > 0 else None,
    )
