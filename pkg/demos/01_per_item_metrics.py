"""
Walk through the per-item metrics on a tiny evaluation.

Three items with weights 1, 2, 3. The ground truth groups i1 with i2 and
leaves i3 alone; the actual clustering instead groups i1 with i3 and
leaves i2 alone. Every item gets its own confusion matrix and metrics.
"""

import clustereval as ce

## The two clusterings share the items; weights live with the ground truth.
ideal = ce.Clustering.from_clusters(
    {"g1": ["i1", "i2"], "g2": ["i3"]},
    {"i1": 1.0, "i2": 2.0, "i3": 3.0},
)
actual = ce.Clustering.from_clusters({"a1": ["i1", "i3"], "a2": ["i2"]})

## Align onto the common item set (here: all three items).
ev = ce.align(ce.validate(ideal), ce.validate(actual))
print(f"evaluating {len(ev)} common items, total weight {ev.total_weight}")

## From i1's perspective the universe splits into four sets:
## its ideal and actual clusters agree on {i1}, the actual cluster drags
## in i3 (a false positive), and the ideal cluster misses i2 (a false
## negative).
p = ce.item_partition(ev, "i1")
print("\nfour-way split seen from i1:")
print("  true positives :", sorted(p.true_positives))
print("  false positives:", sorted(p.false_positives))
print("  false negatives:", sorted(p.false_negatives))
print("  true negatives :", sorted(p.true_negatives))

## Summing weights over those sets gives i1's confusion matrix, and the
## usual ratio metrics follow.
print("\nper-item confusion and metrics:")
print("item  tp   fp   fn   tn   precision recall  jaccard_dist")
for item, (c, m) in ce.all_item_metrics(ev).items():
    print(
        f"{item:4} {c.tp:4} {c.fp:4} {c.fn:4} {c.tn:4}"
        f"   {m.precision:9.4f} {m.recall:7.4f} {m.jaccard_distance:8.4f}"
    )

## i1 has precision 1/4: its actual cluster weighs 4 and only i1 itself
## (weight 1) belongs there per the ground truth. Recall is 1/3: of its
## ideal cluster's weight 3, the actual cluster only kept i1.
m1 = ce.item_metrics(ce.item_confusion(ev, "i1"))
assert abs(m1.precision - 1 / 4) < 1e-12
assert abs(m1.recall - 1 / 3) < 1e-12

## Equivalent over/under-merge phrasing, if rates read better than scores.
print("\nover-merge and under-merge rates:")
for item, (_, m) in ce.all_item_metrics(ev).items():
    print(f"  {item}: over={m.over_merge_rate:.4f} under={m.under_merge_rate:.4f}")
