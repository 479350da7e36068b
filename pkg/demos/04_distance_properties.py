"""
The mathematical structure behind the metrics, demonstrated numerically.

Three properties make these metrics trustworthy for comparisons:
only relative weights matter, precision and recall are mirror images
under role swap, and the averaged Jaccard distance is a true distance
between clusterings (so "A is close to B, B is close to C, yet A is far
from C" cannot happen).
"""

import clustereval as ce

## A reproducible random instance: 120 items, skewed cluster sizes.
spec = ce.RandomInstanceSpec(
    item_count=120, cluster_count_range=(2, 8), weight_kind="uniform", seed=42
)
c1, c2 = ce.generate_instance(spec)
ev = ce.align(c1, c2)
metrics = {i: m for i, (_, m) in ce.all_item_metrics(ev).items()}
overall = ce.aggregate(metrics, ev.items, ev.sorted_items)
print(f"instance: {len(ev)} items, precision={overall.precision:.6f}")

## 1. Scale invariance: multiply every weight by any positive constant.
for factor in (0.001, 7.0, 1e6):
    scaled = c1.items.scaled(factor)
    sev = ce.align(
        ce.Clustering(scaled, dict(c1.assignment), weighted=True),
        ce.Clustering(scaled, dict(c2.assignment), weighted=True),
    )
    smetrics = {i: m for i, (_, m) in ce.all_item_metrics(sev).items()}
    soverall = ce.aggregate(smetrics, sev.items, sev.sorted_items)
    drift = abs(soverall.precision - overall.precision)
    print(f"  weights x {factor:g}: precision drift {drift:.2e}")

## 2. Role-swap symmetry: precision with roles one way equals recall with
## the roles reversed, on any set of items.
backward = ce.align(c2, c1)
bmetrics = {i: m for i, (_, m) in ce.all_item_metrics(backward).items()}
boverall = ce.aggregate(bmetrics, backward.items, backward.sorted_items)
print(f"\nprecision(c1,c2) = {overall.precision:.10f}")
print(f"recall(c2,c1)    = {boverall.recall:.10f}")
assert overall.precision == boverall.recall

## 3. Distance-metric axioms for the lifted Jaccard distance.
spec3 = ce.RandomInstanceSpec(
    item_count=120, cluster_count_range=(2, 8), weight_kind="uniform", seed=43
)
other, _ = ce.generate_instance(spec3)
c3 = ce.Clustering(c1.items, dict(other.assignment), weighted=True)

d12 = ce.lifted_distance(c1, c2)
d23 = ce.lifted_distance(c2, c3)
d13 = ce.lifted_distance(c1, c3)
print(f"\nd(c1,c2)={d12:.6f}  d(c2,c3)={d23:.6f}  d(c1,c3)={d13:.6f}")
print(f"triangle slack: d(c1,c2) + d(c2,c3) - d(c1,c3) = {d12 + d23 - d13:.6f} (>= 0)")
assert d12 + d23 >= d13
assert d12 == ce.lifted_distance(c2, c1)
assert ce.lifted_distance(c1, c1) == 0.0

## The same lifting works for any base distance on item sets, e.g. the
## weighted symmetric difference.
print(f"lifted symmetric difference d(c1,c2) = "
      f"{ce.lifted_distance(c1, c2, 'symmetric_difference'):.4f}")
