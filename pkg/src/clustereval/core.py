"""Core data model: weighted item sets, clusterings, and their alignment.

A clustering is a partition of a finite item set into named clusters. To
evaluate an actual clustering against a ground-truth clustering, the two
are first aligned: the evaluation universe is the set of items they have
in common, and each item's ideal and actual clusters are restricted to
that universe. Everything downstream (per-item metrics, aggregates, the
cross-tab engine) works on the :class:`AlignedEvaluation` produced here.

All weight sums are accumulated in sorted item order so repeated runs
produce bit-identical floating-point results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateItemError,
    EmptyIntersectionError,
    NonPositiveWeightError,
    UnassignedItemError,
    UnknownItemError,
    WeightMismatchError,
)


def _checked_weight(item: str, weight: float) -> float:
    w = float(weight)
    if not math.isfinite(w) or w <= 0.0:
        raise NonPositiveWeightError(item, w)
    return w


class WeightedItemSet:
    """Items with strictly positive, finite weights.

    The weight of an item expresses its relative importance; only the
    relative magnitudes matter for the ratio metrics built on top.
    Instances are immutable once constructed.
    """

    __slots__ = ("_weights", "_sorted", "_total")

    def __init__(self, weights: Mapping[str, float]):
        checked: dict[str, float] = {}
        for item, w in weights.items():
            if not isinstance(item, str) or not item:
                raise ValueError(f"item ids must be non-empty strings, got {item!r}")
            checked[item] = _checked_weight(item, w)
        self._weights = checked
        self._sorted = tuple(sorted(checked))
        self._total = math.fsum(checked[i] for i in self._sorted)

    @classmethod
    def uniform(cls, items: Iterable[str], weight: float = 1.0) -> WeightedItemSet:
        """All of ``items`` at the same weight (1.0 unless told otherwise)."""
        return cls({i: weight for i in items})

    @property
    def sorted_items(self) -> tuple[str, ...]:
        return self._sorted

    @property
    def total_weight(self) -> float:
        return self._total

    def weight(self, item: str) -> float:
        try:
            return self._weights[item]
        except KeyError:
            raise UnknownItemError(item) from None

    def subset_weight(self, items: Iterable[str]) -> float:
        """Summed weight of ``items``, accumulated in sorted order."""
        try:
            return math.fsum(self._weights[i] for i in sorted(items))
        except KeyError as exc:
            raise UnknownItemError(exc.args[0]) from None

    def scaled(self, factor: float) -> WeightedItemSet:
        """A copy with every weight multiplied by ``factor``."""
        return WeightedItemSet({i: w * factor for i, w in self._weights.items()})

    def as_dict(self) -> dict[str, float]:
        return dict(self._weights)

    def __contains__(self, item: object) -> bool:
        return item in self._weights

    def __iter__(self) -> Iterator[str]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedItemSet):
            return NotImplemented
        return self._weights == other._weights

    def __repr__(self) -> str:
        return f"WeightedItemSet({len(self)} items, total weight {self._total!r})"


class Clustering:
    """A partition of a weighted item set into named clusters.

    ``assignment`` maps every item to exactly one cluster id. The
    ``weighted`` flag records whether weights were declared by the input
    (as opposed to filled in with a default); it decides whether this
    side participates in weight-consistency checks during alignment.
    """

    __slots__ = ("_items", "_assignment", "_weighted", "_members")

    def __init__(
        self,
        items: WeightedItemSet,
        assignment: Mapping[str, str],
        *,
        weighted: bool = True,
    ):
        self._items = items
        self._assignment = dict(assignment)
        self._weighted = weighted
        self._members: dict[str, frozenset[str]] | None = None

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[tuple],
        *,
        default_weight: float = 1.0,
    ) -> Clustering:
        """Build from ``(item, cluster)`` or ``(item, cluster, weight)`` rows.

        A repeated item id raises :class:`DuplicateItemError`; partitions
        must be unambiguous, so the last occurrence never silently wins.
        """
        weights: dict[str, float] = {}
        assignment: dict[str, str] = {}
        any_weight = False
        for row in rows:
            if len(row) == 2:
                item, cluster = row
                w = default_weight
            else:
                item, cluster, w = row
                if w is None:
                    w = default_weight
                else:
                    any_weight = True
            if item in assignment:
                raise DuplicateItemError(item)
            assignment[item] = cluster
            weights[item] = w
        return cls(WeightedItemSet(weights), assignment, weighted=any_weight)

    @classmethod
    def from_clusters(
        cls,
        clusters: Mapping[str, Iterable[str]],
        weights: Mapping[str, float] | None = None,
        *,
        default_weight: float = 1.0,
    ) -> Clustering:
        """Build from a cluster-id to member-list mapping."""
        assignment: dict[str, str] = {}
        for cid, members in clusters.items():
            for item in members:
                if item in assignment:
                    raise DuplicateItemError(item)
                assignment[item] = cid
        if weights is None:
            item_set = WeightedItemSet.uniform(assignment, default_weight)
        else:
            item_set = WeightedItemSet(weights)
        return cls(item_set, assignment, weighted=weights is not None)

    @property
    def items(self) -> WeightedItemSet:
        return self._items

    @property
    def assignment(self) -> Mapping[str, str]:
        return self._assignment

    @property
    def weighted(self) -> bool:
        return self._weighted

    @property
    def members(self) -> dict[str, frozenset[str]]:
        """Cluster id to member set, built once and cached."""
        if self._members is None:
            grouped: dict[str, set[str]] = {}
            for item in self._items.sorted_items:
                cid = self._assignment.get(item)
                if cid is not None:
                    grouped.setdefault(cid, set()).add(item)
            self._members = {cid: frozenset(m) for cid, m in grouped.items()}
        return self._members

    @property
    def cluster_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))

    def cluster_id_of(self, item: str) -> str:
        try:
            return self._assignment[item]
        except KeyError:
            raise UnknownItemError(item) from None

    def cluster_of(self, item: str) -> frozenset[str]:
        return self.members[self.cluster_id_of(item)]

    def partition_sets(self) -> frozenset[frozenset[str]]:
        """The partition as a set of member sets, ignoring cluster names."""
        return frozenset(self.members.values())

    def __len__(self) -> int:
        return len(self._items)

    def __repr__(self) -> str:
        return f"Clustering({len(self._items)} items in {len(self.members)} clusters)"


def validate(clustering: Clustering) -> Clustering:
    """Check the partition and weight invariants; return the input unchanged.

    Raises :class:`NonPositiveWeightError` for a bad weight and
    :class:`UnassignedItemError` when the assignment is not total over the
    item set. An assignment entry for an item outside the item set raises
    :class:`UnknownItemError`. Duplicate items cannot survive into a built
    ``Clustering`` (mappings are single-valued), so they are rejected
    earlier, by the row-based constructors and the file reader.
    """
    items = clustering.items
    for item in items.sorted_items:
        _checked_weight(item, items.weight(item))
    assignment = clustering.assignment
    for item in items.sorted_items:
        cid = assignment.get(item)
        if cid is None:
            raise UnassignedItemError(item)
        if not isinstance(cid, str) or not cid:
            raise ValueError(f"cluster ids must be non-empty strings, got {cid!r}")
    for item in assignment:
        if item not in items:
            raise UnknownItemError(item)
    return clustering


@dataclass(frozen=True)
class CoverageStats:
    """How much of each input the shared evaluation universe covers.

    ``actual_only_weight`` is only reported when the actual clustering
    declared weights of its own; otherwise it is None and only the count
    is meaningful.
    """

    common_count: int
    common_weight: float
    ground_truth_only_count: int
    ground_truth_only_weight: float
    actual_only_count: int
    actual_only_weight: float | None


class AlignedEvaluation:
    """The common item set of two clusterings, with both restricted to it.

    Weights come from the ground-truth side. For every common item ``i``,
    ``ideal_cluster_of(i)`` and ``actual_cluster_of(i)`` are that item's
    clusters intersected with the common set, so each map induces a
    partition of the evaluation universe and ``i`` is always a member of
    both of its own clusters.

    Instances are immutable; per-cluster weights are precomputed here so
    that every consumer sees identical floating-point values.
    """

    __slots__ = (
        "_items",
        "_ideal_label_of",
        "_actual_label_of",
        "_ideal_members",
        "_actual_members",
        "_ideal_weights",
        "_actual_weights",
        "_ideal_source_sizes",
        "_actual_source_sizes",
        "_item_set",
    )

    def __init__(
        self,
        items: WeightedItemSet,
        ideal_label_of: dict[str, str],
        actual_label_of: dict[str, str],
        ideal_source_sizes: dict[str, int],
        actual_source_sizes: dict[str, int],
    ):
        self._items = items
        self._ideal_label_of = ideal_label_of
        self._actual_label_of = actual_label_of
        self._ideal_source_sizes = ideal_source_sizes
        self._actual_source_sizes = actual_source_sizes
        self._ideal_members = _group_members(items, ideal_label_of)
        self._actual_members = _group_members(items, actual_label_of)
        self._ideal_weights = {
            cid: items.subset_weight(m) for cid, m in sorted(self._ideal_members.items())
        }
        self._actual_weights = {
            cid: items.subset_weight(m) for cid, m in sorted(self._actual_members.items())
        }
        self._item_set = frozenset(items.sorted_items)

    @property
    def items(self) -> WeightedItemSet:
        return self._items

    @property
    def sorted_items(self) -> tuple[str, ...]:
        return self._items.sorted_items

    @property
    def item_set(self) -> frozenset[str]:
        return self._item_set

    @property
    def total_weight(self) -> float:
        return self._items.total_weight

    @property
    def ideal_label_of(self) -> Mapping[str, str]:
        return self._ideal_label_of

    @property
    def actual_label_of(self) -> Mapping[str, str]:
        return self._actual_label_of

    @property
    def ideal_members(self) -> Mapping[str, frozenset[str]]:
        return self._ideal_members

    @property
    def actual_members(self) -> Mapping[str, frozenset[str]]:
        return self._actual_members

    @property
    def ideal_weights(self) -> Mapping[str, float]:
        return self._ideal_weights

    @property
    def actual_weights(self) -> Mapping[str, float]:
        return self._actual_weights

    @property
    def ideal_source_sizes(self) -> Mapping[str, int]:
        """Unrestricted member counts of the ideal clusters present here."""
        return self._ideal_source_sizes

    @property
    def actual_source_sizes(self) -> Mapping[str, int]:
        return self._actual_source_sizes

    def ideal_cluster_of(self, item: str) -> frozenset[str]:
        try:
            return self._ideal_members[self._ideal_label_of[item]]
        except KeyError:
            raise UnknownItemError(item) from None

    def actual_cluster_of(self, item: str) -> frozenset[str]:
        try:
            return self._actual_members[self._actual_label_of[item]]
        except KeyError:
            raise UnknownItemError(item) from None

    def memberships(self) -> dict[str, tuple[str, str]]:
        """Item to ``(ideal cluster id, actual cluster id)``, sorted."""
        return {
            i: (self._ideal_label_of[i], self._actual_label_of[i])
            for i in self._items.sorted_items
        }

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, item: object) -> bool:
        return item in self._items

    def __repr__(self) -> str:
        return (
            f"AlignedEvaluation({len(self)} common items, "
            f"{len(self._ideal_members)} ideal / {len(self._actual_members)} actual clusters)"
        )


def _group_members(items: WeightedItemSet, label_of: Mapping[str, str]) -> dict[str, frozenset[str]]:
    grouped: dict[str, set[str]] = {}
    for item in items.sorted_items:
        grouped.setdefault(label_of[item], set()).add(item)
    return {cid: frozenset(m) for cid, m in grouped.items()}


def align(ideal: Clustering, actual: Clustering) -> AlignedEvaluation:
    """Restrict both clusterings to their common items.

    Weights are taken from the ground-truth (``ideal``) side. If the
    actual side also declared weights, they must agree exactly on every
    common item, otherwise the input is considered corrupt and
    :class:`WeightMismatchError` is raised. No common items at all raises
    :class:`EmptyIntersectionError`: such an evaluation is not meaningful.

    Both inputs are expected to have passed :func:`validate`.
    """
    common = [i for i in ideal.items.sorted_items if i in actual.items]
    if not common:
        raise EmptyIntersectionError()
    if actual.weighted and ideal.weighted:
        for i in common:
            wi = ideal.items.weight(i)
            wa = actual.items.weight(i)
            if wi != wa:
                raise WeightMismatchError(i, wi, wa)
    items = WeightedItemSet({i: ideal.items.weight(i) for i in common})
    ideal_label_of = {i: ideal.cluster_id_of(i) for i in common}
    actual_label_of = {i: actual.cluster_id_of(i) for i in common}
    ideal_sizes = {cid: len(ideal.members[cid]) for cid in set(ideal_label_of.values())}
    actual_sizes = {cid: len(actual.members[cid]) for cid in set(actual_label_of.values())}
    return AlignedEvaluation(items, ideal_label_of, actual_label_of, ideal_sizes, actual_sizes)


def coverage(ideal: Clustering, actual: Clustering) -> CoverageStats:
    """Counts and weights of common, ground-truth-only, and actual-only items."""
    common = [i for i in ideal.items.sorted_items if i in actual.items]
    gt_only = [i for i in ideal.items.sorted_items if i not in actual.items]
    actual_only = [i for i in actual.items.sorted_items if i not in ideal.items]
    return CoverageStats(
        common_count=len(common),
        common_weight=ideal.items.subset_weight(common),
        ground_truth_only_count=len(gt_only),
        ground_truth_only_weight=ideal.items.subset_weight(gt_only),
        actual_only_count=len(actual_only),
        actual_only_weight=(
            actual.items.subset_weight(actual_only) if actual.weighted else None
        ),
    )
