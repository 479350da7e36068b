"""Command-line interface.

Subcommands:

    evaluate   score an actual clustering against a ground truth
    delta      diff two stored reports sharing one ground truth
    drill      list per-item rows from a stored report
    pairs      co-membership pair confusion counts
    crosstab   dump the sparse intersection-weight matrix

Exit codes: 0 on success, 1 on parse or validation errors, 2 when the
clusterings share no items or two reports have different ground truths.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import AlignedEvaluation, align, validate
from .crosstab import build_crosstab
from .errors import (
    ClusterEvalError,
    EmptyIntersectionError,
    GroundTruthMismatchError,
)
from .fileio import read_clustering
from .pairs import pair_confusion
from .report import (
    delta,
    drill,
    evaluate_paths,
    read_report,
    serialize_delta,
    serialize_report,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved here, so remap
    def error(self, message: str):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--engine",
        choices=("auto", "pointwise", "crosstab"),
        default="auto",
        help="which computation route to use (default: auto)",
    )
    common.add_argument(
        "--emit-items",
        action="store_true",
        help="include the per-item table in the report",
    )
    common.add_argument(
        "--default-weight",
        type=float,
        default=1.0,
        metavar="W",
        help="weight for items in files without a weight column (default: 1.0)",
    )
    common.add_argument(
        "--slices",
        action="append",
        default=[],
        metavar="PATH",
        help="slice definition file; may be given multiple times",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="N",
        help="worker threads; never changes output bytes (default: 1)",
    )

    parser = _Parser(prog="clustereval", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "evaluate", parents=[common], help="evaluate an actual clustering"
    )
    p_eval.add_argument("ground_truth", help="ground-truth clustering file")
    p_eval.add_argument("actual", help="actual clustering file")
    p_eval.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p_eval.add_argument(
        "--crosstab-threshold",
        type=int,
        default=10_000,
        metavar="N",
        help="auto engine switches to crosstab above this many common items",
    )

    p_delta = sub.add_parser("delta", parents=[common], help="diff two reports")
    p_delta.add_argument("baseline", help="baseline report file")
    p_delta.add_argument("experiment", help="experiment report file")
    p_delta.add_argument("--out", metavar="PATH", help="write the delta here instead of stdout")

    p_drill = sub.add_parser("drill", parents=[common], help="list per-item rows")
    p_drill.add_argument("report", help="report file written with --emit-items")
    group = p_drill.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal-cluster", metavar="ID")
    group.add_argument("--actual-cluster", metavar="ID")
    group.add_argument("--slice", dest="slice_name", metavar="NAME")
    group.add_argument("--worst", type=int, metavar="K")
    p_drill.add_argument("--by", metavar="METRIC", help="metric to order rows by")

    p_pairs = sub.add_parser(
        "pairs", parents=[common], help="co-membership pair confusion counts"
    )
    p_pairs.add_argument("ground_truth")
    p_pairs.add_argument("actual")

    p_ct = sub.add_parser(
        "crosstab", parents=[common], help="dump the sparse cross-tab matrix"
    )
    p_ct.add_argument("ground_truth")
    p_ct.add_argument("actual")

    return parser


def _aligned(args) -> AlignedEvaluation:
    ideal = read_clustering(args.ground_truth, default_weight=args.default_weight)
    actual = read_clustering(args.actual, default_weight=args.default_weight)
    validate(ideal)
    validate(actual)
    return align(ideal, actual)


def _cmd_evaluate(args) -> int:
    report = evaluate_paths(
        args.ground_truth,
        args.actual,
        args.slices,
        engine=args.engine,
        emit_items=args.emit_items,
        default_weight=args.default_weight,
        threads=args.threads,
        crosstab_threshold=args.crosstab_threshold,
    )
    text = serialize_report(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_delta(args) -> int:
    baseline = read_report(args.baseline)
    experiment = read_report(args.experiment)
    text = serialize_delta(delta(baseline, experiment))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_DRILL_COLUMNS = (
    "item",
    "weight",
    "ideal_cluster",
    "actual_cluster",
    "tp",
    "fp",
    "fn",
    "tn",
    "precision",
    "recall",
    "accuracy",
    "jaccard_distance",
)


def _cmd_drill(args) -> int:
    report = read_report(args.report)
    rows = drill(
        report,
        ideal_cluster=args.ideal_cluster,
        actual_cluster=args.actual_cluster,
        slice_name=args.slice_name,
        worst=args.worst,
        by=args.by,
    )
    sys.stdout.write("\t".join(_DRILL_COLUMNS) + "\n")
    for r in rows:
        c, m = r.confusion, r.metrics
        values = (
            r.item,
            r.weight,
            r.ideal_cluster,
            r.actual_cluster,
            c.tp,
            c.fp,
            c.fn,
            c.tn,
            m.precision,
            m.recall,
            m.accuracy,
            m.jaccard_distance,
        )
        sys.stdout.write("\t".join(str(v) for v in values) + "\n")
    return 0


def _cmd_pairs(args) -> int:
    ev = _aligned(args)
    pc = pair_confusion(ev)
    lines = [
        f"tp_pairs\t{pc.tp_pairs}",
        f"fn_pairs\t{pc.fn_pairs}",
        f"fp_pairs\t{pc.fp_pairs}",
        f"tn_pairs\t{pc.tn_pairs}",
        f"precision\t{'' if pc.precision is None else pc.precision!r}",
        f"recall\t{'' if pc.recall is None else pc.recall!r}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_crosstab(args) -> int:
    ev = _aligned(args)
    ct = build_crosstab(ev, threads=args.threads)
    sys.stdout.write("ideal_cluster\tactual_cluster\tweight\n")
    for gid, aid in ct.sorted_cells:
        sys.stdout.write(f"{gid}\t{aid}\t{ct.cells[(gid, aid)]!r}\n")
    return 0


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "delta": _cmd_delta,
    "drill": _cmd_drill,
    "pairs": _cmd_pairs,
    "crosstab": _cmd_crosstab,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (EmptyIntersectionError, GroundTruthMismatchError) as exc:
        print(f"clustereval: {exc}", file=sys.stderr)
        return 2
    except ClusterEvalError as exc:
        print(f"clustereval: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"clustereval: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"clustereval: malformed report file (missing field {exc})", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
