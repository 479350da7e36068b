"""
The file formats and the command-line workflow, end to end.

Clustering files are plain TSV (item, cluster, optional weight), slice
files are (slice_name, item) rows, and reports are stable JSON. The same
steps work through the `clustereval` command; this script drives the CLI
entry points in-process so it can run anywhere the package is installed.
"""

import json
import tempfile
from pathlib import Path

from clustereval.cli import main

workdir = Path(tempfile.mkdtemp(prefix="clustereval_demo_"))

## A weighted ground truth and two algorithm outputs, as input files.
(workdir / "truth.tsv").write_text(
    "# item<TAB>cluster<TAB>weight\n"
    "i1\tg1\t1.0\n"
    "i2\tg1\t2.0\n"
    "i3\tg2\t3.0\n",
    encoding="utf-8",
)
(workdir / "run_a.tsv").write_text("i1\ta1\ni3\ta1\ni2\ta2\n", encoding="utf-8")
(workdir / "run_b.tsv").write_text("i1\tb1\ni2\tb1\ni3\tb2\n", encoding="utf-8")
(workdir / "slices.tsv").write_text("tail\ti2\ntail\ti3\n", encoding="utf-8")

## evaluate: one report per run, per-item rows included.
for run in ("run_a", "run_b"):
    code = main([
        "evaluate", str(workdir / "truth.tsv"), str(workdir / f"{run}.tsv"),
        "--slices", str(workdir / "slices.tsv"),
        "--emit-items",
        "--out", str(workdir / f"{run}.report.json"),
    ])
    assert code == 0
    doc = json.loads((workdir / f"{run}.report.json").read_text())
    print(f"{run}: precision={doc['overall']['precision']:.4f} "
          f"recall={doc['overall']['recall']:.4f}")

## delta: compare the two runs through their stored reports.
print("\ndelta run_a -> run_b:")
main(["delta", str(workdir / "run_a.report.json"), str(workdir / "run_b.report.json")])

## drill: worst item of run_a by precision.
print("\nworst item of run_a:")
main(["drill", str(workdir / "run_a.report.json"), "--worst", "1", "--by", "precision"])

## pairs and crosstab give the baseline view and the raw matrix.
print("\npair-counting baseline (run_a):")
main(["pairs", str(workdir / "truth.tsv"), str(workdir / "run_a.tsv")])
print("\nsparse cross-tab (run_a):")
main(["crosstab", str(workdir / "truth.tsv"), str(workdir / "run_a.tsv")])

print(f"\nall artifacts are under {workdir}")
