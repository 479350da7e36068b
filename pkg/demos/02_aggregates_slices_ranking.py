"""
Lift per-item metrics to clusters, slices, and the overall evaluation.

Any set of items gets the weighted mean of its members' metrics, i.e. the
expected metric of an item drawn from the set. That one recipe covers the
whole evaluation, each cluster, and ad-hoc slices, and it composes: block
averages recombine into the overall value.
"""

import math

import clustereval as ce

ideal = ce.Clustering.from_clusters(
    {"g1": ["i1", "i2"], "g2": ["i3"]},
    {"i1": 1.0, "i2": 2.0, "i3": 3.0},
)
actual = ce.Clustering.from_clusters({"a1": ["i1", "i3"], "a2": ["i2"]})
ev = ce.align(ideal, actual)
metrics = {i: m for i, (_, m) in ce.all_item_metrics(ev).items()}

## Overall metrics: the expected metrics of a weighted random item.
overall = ce.aggregate(metrics, ev.items, ev.sorted_items)
print(f"overall: precision={overall.precision:.4f} recall={overall.recall:.4f} "
      f"jaccard_distance={overall.jaccard_distance:.4f}")

## Per-cluster rows answer "which actual clusters are the least pure?"
## and "which ideal clusters were shredded the worst?".
rows = ce.per_cluster_metrics(ev, metrics)
print("\nper-cluster aggregates:")
for r in rows:
    print(f"  {r.subject_kind:14} {r.subject_id}: weight={r.weight:g} "
          f"precision={r.precision:.4f} recall={r.recall:.4f}")

## Rank the actual clusters by precision, worst first.
actual_rows = [r for r in rows if r.subject_kind == "actual_cluster"]
worst = ce.rank_clusters(actual_rows, by="precision", order="ascending", limit=1)
print(f"\nleast precise actual cluster: {worst[0].subject_id} "
      f"(precision {worst[0].precision:.4f})")

## A slice is any subset you care about: a market, a language, a cohort.
slice_rows = ce.slice_metrics(ev, metrics, [ce.SliceSpec("tail", frozenset({"i2", "i3"}))])
print(f"\nslice 'tail': precision={slice_rows[0].precision:.4f} "
      f"recall={slice_rows[0].recall:.4f}")

## Composition check: actual-cluster averages recombine into the overall.
combined = math.fsum(r.weight * r.precision for r in actual_rows) / math.fsum(
    r.weight for r in actual_rows
)
print(f"\nweighted mean of actual-cluster precisions: {combined:.4f} "
      f"(overall is {overall.precision:.4f})")
assert abs(combined - overall.precision) < 1e-12
