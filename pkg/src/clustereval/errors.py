"""Exception hierarchy shared across the library.

Every error raised on a bad input derives from :class:`ClusterEvalError`,
so callers can catch one type at the boundary. The CLI maps
:class:`EmptyIntersectionError` and :class:`GroundTruthMismatchError` to
exit code 2 and every other library error to exit code 1.
"""

from __future__ import annotations


class ClusterEvalError(Exception):
    """Base class for all clustereval errors."""


class NonPositiveWeightError(ClusterEvalError):
    """An item weight is zero, negative, or not finite."""

    def __init__(self, item: str, weight: float, line: int | None = None):
        self.item = item
        self.weight = weight
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"item {item!r} has non-positive weight {weight!r}{at}")


class DuplicateItemError(ClusterEvalError):
    """The same item appears more than once in one clustering input."""

    def __init__(self, item: str, line: int | None = None):
        self.item = item
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"item {item!r} appears more than once{at}")


class UnassignedItemError(ClusterEvalError):
    """An item in the item set has no cluster assignment."""

    def __init__(self, item: str):
        self.item = item
        super().__init__(f"item {item!r} has no cluster assignment")


class UnknownItemError(ClusterEvalError):
    """An item was referenced that the relevant item set does not contain."""

    def __init__(self, item: str):
        self.item = item
        super().__init__(f"unknown item {item!r}")


class WeightMismatchError(ClusterEvalError):
    """Both clusterings declare a weight for a shared item and they differ."""

    def __init__(self, item: str, ideal_weight: float, actual_weight: float):
        self.item = item
        self.ideal_weight = ideal_weight
        self.actual_weight = actual_weight
        super().__init__(
            f"item {item!r} carries weight {ideal_weight!r} in the ground truth "
            f"but {actual_weight!r} in the actual clustering"
        )


class EmptyIntersectionError(ClusterEvalError):
    """The two clusterings share no items, so an evaluation is meaningless."""

    def __init__(self) -> None:
        super().__init__("the clusterings have no items in common")


class EmptySliceError(ClusterEvalError):
    """A slice resolves to no evaluable items."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"slice {name!r} contains no evaluable items")


class UnknownMetricError(ClusterEvalError):
    """A metric name is not one of the supported ratio metrics."""

    def __init__(self, metric: str, valid: tuple[str, ...]):
        self.metric = metric
        super().__init__(f"unknown metric {metric!r}; expected one of {', '.join(valid)}")


class UnknownCellError(ClusterEvalError):
    """The cross-tabulation holds no cell for the requested cluster pair."""

    def __init__(self, ideal_id: str, actual_id: str):
        self.ideal_id = ideal_id
        self.actual_id = actual_id
        super().__init__(f"no cross-tab cell for ({ideal_id!r}, {actual_id!r})")


class TooFewItemsError(ClusterEvalError):
    """Pair counting needs at least two common items."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"pair counting needs at least 2 common items, got {count}")


class ParseError(ClusterEvalError):
    """A line of an input file could not be parsed."""

    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")


class MissingPerItemDataError(ClusterEvalError):
    """Drill-down requested on a report that has no per-item section."""

    def __init__(self) -> None:
        super().__init__("report has no per-item section; re-run evaluate with emit_items")


class GroundTruthMismatchError(ClusterEvalError):
    """Delta requested between reports evaluated against different ground truths."""

    def __init__(self, baseline_digest: str, experiment_digest: str):
        self.baseline_digest = baseline_digest
        self.experiment_digest = experiment_digest
        super().__init__(
            "reports were evaluated against different ground truths "
            f"({baseline_digest} vs {experiment_digest})"
        )


class InstanceTooLargeError(ClusterEvalError):
    """The brute-force reference path refuses oversized instances."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"instance has {size} items; the reference path allows at most {limit}")


class ItemSetMismatchError(ClusterEvalError):
    """Two clusterings that must share a weighted item set do not."""

    def __init__(self, detail: str):
        super().__init__(f"clusterings do not share a weighted item set: {detail}")


class BothEmptyError(ClusterEvalError):
    """Jaccard distance between two empty sets is undefined."""

    def __init__(self) -> None:
        super().__init__("Jaccard distance is undefined when both sets are empty")
