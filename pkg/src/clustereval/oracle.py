"""Brute-force reference implementations and randomized instance generation.

The functions here exist to check the engines, not to be fast.
:func:`naive_evaluate` literally materializes the four per-item sets and
sums their weights, which is the definitional way to compute the per-item
confusion matrices; the engines must agree with it. The set distances and
:func:`lifted_distance` encode the distance-metric structure that the
per-item Jaccard distance inherits when averaged over a clustering, and
the property suites exercise its axioms (zero only at identical
partitions, symmetry, triangle inequality) on generated instances.

Generated instances are deterministic per seed. Failing cases can be
dumped as clustering files in the standard input format for replay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Literal

import numpy as np

from .core import AlignedEvaluation, Clustering, WeightedItemSet
from .errors import BothEmptyError, InstanceTooLargeError, ItemSetMismatchError
from .fileio import write_clustering
from .pointwise import ItemConfusion, ItemMetrics

ORACLE_MAX_ITEMS = 10_000

SetDistanceKind = Literal["symmetric_difference", "jaccard"]


def naive_evaluate(
    ev: AlignedEvaluation,
) -> dict[str, tuple[ItemConfusion, ItemMetrics]]:
    """Per-item confusion and metrics by literal set construction.

    Quadratic in the number of items; refuses instances beyond
    ``ORACLE_MAX_ITEMS``.
    """
    n = len(ev)
    if n > ORACLE_MAX_ITEMS:
        raise InstanceTooLargeError(n, ORACLE_MAX_ITEMS)
    items = ev.items
    universe = ev.item_set
    result: dict[str, tuple[ItemConfusion, ItemMetrics]] = {}
    for i in items.sorted_items:
        ideal = ev.ideal_cluster_of(i)
        actual = ev.actual_cluster_of(i)
        tp_set = ideal & actual
        fp_set = actual - ideal
        fn_set = ideal - actual
        tn_set = universe - (ideal | actual)
        tp = items.subset_weight(tp_set)
        fp = items.subset_weight(fp_set)
        fn = items.subset_weight(fn_set)
        tn = items.subset_weight(tn_set)
        confusion = ItemConfusion(tp, fp, fn, tn)
        result[i] = (confusion, _metrics_by_definition(tp, fp, fn, tn))
    return result


def _metrics_by_definition(tp: float, fp: float, fn: float, tn: float) -> ItemMetrics:
    # deliberately written out again, term by term, independent of the engines
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    accuracy = (tp + tn) / (tp + tn + fp + fn)
    jaccard_distance = (fn + fp) / (fn + tp + fp)
    jaccard_index = tp / (fn + tp + fp)
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
        jaccard_index=jaccard_index,
        jaccard_distance=jaccard_distance,
        over_merge_rate=1.0 - precision,
        under_merge_rate=1.0 - recall,
        informedness=informedness,
        markedness=markedness,
    )


def set_symmetric_difference(
    i1: frozenset[str] | set[str],
    i2: frozenset[str] | set[str],
    weights: WeightedItemSet,
) -> float:
    """Weight of the elements in exactly one of the two sets."""
    return weights.subset_weight((i1 - i2) | (i2 - i1))


def set_jaccard_distance(
    i1: frozenset[str] | set[str],
    i2: frozenset[str] | set[str],
    weights: WeightedItemSet,
) -> float:
    """One minus the weight ratio of intersection to union."""
    union = i1 | i2
    if not union:
        raise BothEmptyError()
    return 1.0 - weights.subset_weight(i1 & i2) / weights.subset_weight(union)


def lifted_distance(
    c1: Clustering,
    c2: Clustering,
    kind: SetDistanceKind = "jaccard",
) -> float:
    """Weighted average of the per-item distance between own-cluster pairs.

    Lifts any distance on item sets to a distance on clusterings of one
    weighted item set. Per-item distances depend only on the pair of
    clusters involved, so each distinct pair is evaluated once, from the
    two cluster weights and the intersection weight; sums over members
    run in sorted item order, making the result exactly symmetric.
    """
    if set(c1.items.sorted_items) != set(c2.items.sorted_items):
        raise ItemSetMismatchError("different item sets")
    for i in c1.items.sorted_items:
        if c1.items.weight(i) != c2.items.weight(i):
            raise ItemSetMismatchError(f"item {i!r} carries different weights")
    items = c1.items
    cell_lists: dict[tuple[str, str], list[float]] = {}
    pair_of: dict[str, tuple[str, str]] = {}
    for i in items.sorted_items:
        pair = (c1.cluster_id_of(i), c2.cluster_id_of(i))
        pair_of[i] = pair
        cell_lists.setdefault(pair, []).append(items.weight(i))
    w1 = {cid: items.subset_weight(m) for cid, m in sorted(c1.members.items())}
    w2 = {cid: items.subset_weight(m) for cid, m in sorted(c2.members.items())}
    cell_distance: dict[tuple[str, str], float] = {}
    for pair, ws in cell_lists.items():
        inter = math.fsum(ws)
        a, b = w1[pair[0]], w2[pair[1]]
        if kind == "jaccard":
            union = a + b - inter
            cell_distance[pair] = 1.0 - inter / union
        elif kind == "symmetric_difference":
            cell_distance[pair] = a + b - 2.0 * inter
        else:
            raise ValueError(f"unknown set distance kind {kind!r}")
    numer = math.fsum(
        items.weight(i) * cell_distance[pair_of[i]] for i in items.sorted_items
    )
    return numer / items.total_weight


@dataclass(frozen=True)
class RandomInstanceSpec:
    """Recipe for one deterministic random evaluation instance.

    ``mutation_moves`` switches the actual clustering from an independent
    draw to a copy of the ideal clustering with that many random item
    moves, which exercises near-identical clusterings.
    """

    item_count: int
    cluster_count_range: tuple[int, int] = (1, 10)
    weight_kind: Literal["unit", "uniform", "zipf"] = "unit"
    uniform_range: tuple[float, float] = (0.5, 2.0)
    zipf_exponent: float = 1.8
    mutation_moves: int | None = None
    seed: int = 0


def _random_assignment(
    rng: np.random.Generator, n: int, lo: int, hi: int, prefix: str
) -> dict[str, str]:
    k = int(rng.integers(lo, hi + 1))
    k = max(1, min(k, n))
    # geometric skew so that large clusters occur alongside small ones
    ratio = 0.7
    probs = np.array([ratio**j for j in range(k)])
    probs /= probs.sum()
    codes = rng.choice(k, size=n, p=probs)
    return {f"it{idx:05d}": f"{prefix}{int(c):04d}" for idx, c in enumerate(codes)}


def generate_instance(spec: RandomInstanceSpec) -> tuple[Clustering, Clustering]:
    """Two clusterings of one weighted item set, deterministic per seed."""
    if spec.item_count < 1:
        raise ValueError("item_count must be at least 1")
    rng = np.random.default_rng(spec.seed)
    n = spec.item_count
    ids = [f"it{idx:05d}" for idx in range(n)]
    if spec.weight_kind == "unit":
        weights = {i: 1.0 for i in ids}
    elif spec.weight_kind == "uniform":
        lo, hi = spec.uniform_range
        weights = {i: float(w) for i, w in zip(ids, rng.uniform(lo, hi, size=n))}
    elif spec.weight_kind == "zipf":
        weights = {i: float(w) for i, w in zip(ids, rng.zipf(spec.zipf_exponent, size=n))}
    else:
        raise ValueError(f"unknown weight kind {spec.weight_kind!r}")
    lo, hi = spec.cluster_count_range
    item_set = WeightedItemSet(weights)
    ideal_assignment = _random_assignment(rng, n, lo, hi, "g")
    ideal = Clustering(item_set, ideal_assignment, weighted=True)
    if spec.mutation_moves is None:
        actual_assignment = _random_assignment(rng, n, lo, hi, "a")
    else:
        actual_assignment = dict(ideal_assignment)
        cluster_pool = sorted(set(actual_assignment.values()))
        for move in range(spec.mutation_moves):
            victim = ids[int(rng.integers(0, n))]
            if rng.random() < 0.1 or len(cluster_pool) == 1:
                target = f"m{move:04d}"
            else:
                current = actual_assignment[victim]
                choices = [c for c in cluster_pool if c != current]
                target = choices[int(rng.integers(0, len(choices)))]
            actual_assignment[victim] = target
    actual = Clustering(item_set, actual_assignment, weighted=True)
    return ideal, actual


def singletons(items: WeightedItemSet) -> Clustering:
    """The degenerate clustering with every item alone in its own cluster."""
    return Clustering(items, {i: f"s_{i}" for i in items.sorted_items}, weighted=True)


def one_cluster(items: WeightedItemSet) -> Clustering:
    """The degenerate clustering with all items in a single cluster."""
    return Clustering(items, {i: "all" for i in items.sorted_items}, weighted=True)


def all_partitions(items: tuple[str, ...]) -> Iterator[list[list[str]]]:
    """Every set partition of ``items``; only intended for tiny item sets."""
    if len(items) > 8:
        raise InstanceTooLargeError(len(items), 8)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in all_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1 :]
        yield [[first]] + smaller


def clustering_from_blocks(
    blocks: list[list[str]], items: WeightedItemSet
) -> Clustering:
    """Wrap explicit member blocks as a clustering over ``items``."""
    assignment = {}
    for idx, block in enumerate(blocks):
        for item in block:
            assignment[item] = f"p{idx:04d}"
    return Clustering(items, assignment, weighted=True)


def dump_instance(
    ideal: Clustering,
    actual: Clustering,
    directory: str | Path,
    stem: str = "case",
) -> tuple[Path, Path]:
    """Write both clusterings as replayable input files; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    ideal_path = directory / f"{stem}.ideal.tsv"
    actual_path = directory / f"{stem}.actual.tsv"
    write_clustering(ideal, ideal_path)
    write_clustering(actual, actual_path)
    return ideal_path, actual_path
