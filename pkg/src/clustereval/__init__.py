"""clustereval: weighted per-item evaluation of clusterings.

Compare an actual clustering against a weighted ground-truth clustering.
Each common item gets its own 2x2 confusion matrix and ratio metrics
(precision, recall, accuracy, Jaccard distance, and more), and the
metrics lift to clusters, arbitrary slices, and the whole evaluation by
weighted averaging. Includes a sparse cross-tab engine for large inputs,
a pair-counting baseline, stable report files with A/B deltas and
drill-down, and brute-force reference implementations for testing.
"""

__version__ = "0.1.0"

from .errors import (
    BothEmptyError,
    ClusterEvalError,
    DuplicateItemError,
    EmptyIntersectionError,
    EmptySliceError,
    GroundTruthMismatchError,
    InstanceTooLargeError,
    ItemSetMismatchError,
    MissingPerItemDataError,
    NonPositiveWeightError,
    ParseError,
    TooFewItemsError,
    UnassignedItemError,
    UnknownCellError,
    UnknownItemError,
    UnknownMetricError,
    WeightMismatchError,
)
from .core import (
    AlignedEvaluation,
    Clustering,
    CoverageStats,
    WeightedItemSet,
    align,
    coverage,
    validate,
)
from .pointwise import (
    ItemConfusion,
    ItemMetrics,
    ItemPartition,
    all_item_metrics,
    item_confusion,
    item_metrics,
    item_partition,
)
from .aggregation import (
    METRIC_FIELDS,
    AggregateMetrics,
    SliceSpec,
    aggregate,
    per_cluster_metrics,
    rank_clusters,
    slice_metrics,
)
from .crosstab import (
    CellConfusion,
    CrossTab,
    CrossTabResult,
    build_crosstab,
    cell_confusion,
    crosstab_report,
)
from .pairs import PairConfusion, pair_confusion
from .fileio import read_clustering, read_slices, write_clustering
from .report import (
    DeltaReport,
    DeltaRow,
    ItemRecord,
    MetricsReport,
    delta,
    drill,
    evaluate,
    evaluate_paths,
    ground_truth_digest,
    parse_report,
    read_report,
    serialize_delta,
    serialize_report,
    write_report,
)
from .oracle import (
    RandomInstanceSpec,
    all_partitions,
    clustering_from_blocks,
    dump_instance,
    generate_instance,
    lifted_distance,
    naive_evaluate,
    one_cluster,
    set_jaccard_distance,
    set_symmetric_difference,
    singletons,
)

__all__ = [
    "__version__",
    # errors
    "BothEmptyError",
    "ClusterEvalError",
    "DuplicateItemError",
    "EmptyIntersectionError",
    "EmptySliceError",
    "GroundTruthMismatchError",
    "InstanceTooLargeError",
    "ItemSetMismatchError",
    "MissingPerItemDataError",
    "NonPositiveWeightError",
    "ParseError",
    "TooFewItemsError",
    "UnassignedItemError",
    "UnknownCellError",
    "UnknownItemError",
    "UnknownMetricError",
    "WeightMismatchError",
    # core model
    "AlignedEvaluation",
    "Clustering",
    "CoverageStats",
    "WeightedItemSet",
    "align",
    "coverage",
    "validate",
    # per-item engine
    "ItemConfusion",
    "ItemMetrics",
    "ItemPartition",
    "all_item_metrics",
    "item_confusion",
    "item_metrics",
    "item_partition",
    # aggregation
    "METRIC_FIELDS",
    "AggregateMetrics",
    "SliceSpec",
    "aggregate",
    "per_cluster_metrics",
    "rank_clusters",
    "slice_metrics",
    # cross-tab engine
    "CellConfusion",
    "CrossTab",
    "CrossTabResult",
    "build_crosstab",
    "cell_confusion",
    "crosstab_report",
    # pair baseline
    "PairConfusion",
    "pair_confusion",
    # files and reports
    "read_clustering",
    "read_slices",
    "write_clustering",
    "DeltaReport",
    "DeltaRow",
    "ItemRecord",
    "MetricsReport",
    "delta",
    "drill",
    "evaluate",
    "evaluate_paths",
    "ground_truth_digest",
    "parse_report",
    "read_report",
    "serialize_delta",
    "serialize_report",
    "write_report",
    # reference implementations
    "RandomInstanceSpec",
    "all_partitions",
    "clustering_from_blocks",
    "dump_instance",
    "generate_instance",
    "lifted_distance",
    "naive_evaluate",
    "one_cluster",
    "set_jaccard_distance",
    "set_symmetric_difference",
    "singletons",
]
