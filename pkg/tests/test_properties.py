"""Property-based invariant checks over randomly drawn clustering pairs."""

import math

import hypothesis.strategies as st
from hypothesis import given, settings

import clustereval as ce

positive_weights = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)


@st.composite
def weighted_clustering_pair(draw):
    """Two clusterings over one weighted item set, up to 12 items."""
    n = draw(st.integers(min_value=1, max_value=12))
    ids = [f"x{k:02d}" for k in range(n)]
    weights = {i: draw(positive_weights) for i in ids}
    ideal_labels = draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    actual_labels = draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    items = ce.WeightedItemSet(weights)
    ideal = ce.Clustering(
        items, {i: f"g{l}" for i, l in zip(ids, ideal_labels)}, weighted=True
    )
    actual = ce.Clustering(
        items, {i: f"a{l}" for i, l in zip(ids, actual_labels)}, weighted=True
    )
    return ideal, actual


@settings(max_examples=80, deadline=None)
@given(weighted_clustering_pair())
def test_four_sets_partition_the_universe(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    universe = set(ev.sorted_items)
    for i in ev.sorted_items:
        p = ce.item_partition(ev, i)
        sets = [p.true_positives, p.false_positives, p.false_negatives, p.true_negatives]
        seen = set()
        for s in sets:
            assert not (seen & s)
            seen |= s
        assert seen == universe
        assert i in p.true_positives


@settings(max_examples=80, deadline=None)
@given(weighted_clustering_pair())
def test_confusion_entries_sum_to_universe_weight(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    for i, (c, _) in ce.all_item_metrics(ev).items():
        assert math.isclose(c.total, ev.total_weight, rel_tol=1e-9)
        assert c.tp >= ev.items.weight(i) - 1e-12
        assert min(c.tp, c.fp, c.fn, c.tn) >= 0.0


@settings(max_examples=80, deadline=None)
@given(weighted_clustering_pair())
def test_ratio_metrics_stay_in_unit_interval(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    for _, (c, m) in ce.all_item_metrics(ev).items():
        for f in ("precision", "recall", "accuracy", "jaccard_index",
                  "jaccard_distance", "over_merge_rate", "under_merge_rate"):
            v = getattr(m, f)
            assert -1e-9 <= v <= 1.0 + 1e-9
        assert abs(m.jaccard_distance + m.jaccard_index - 1.0) <= 1e-9
        assert abs(m.over_merge_rate + m.precision - 1.0) <= 1e-9
        assert abs(m.under_merge_rate + m.recall - 1.0) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(weighted_clustering_pair())
def test_true_positive_classmates_share_the_confusion_matrix(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    per = ce.all_item_metrics(ev)
    for i in ev.sorted_items:
        for j in ce.item_partition(ev, i).true_positives:
            assert per[j][0] == per[i][0]


@settings(max_examples=60, deadline=None)
@given(weighted_clustering_pair())
def test_swapping_roles_swaps_precision_and_recall(pair):
    ideal, actual = pair
    forward = ce.all_item_metrics(ce.align(ideal, actual))
    backward = ce.all_item_metrics(ce.align(actual, ideal))
    for i, (cf, mf) in forward.items():
        cb, mb = backward[i]
        assert cf.fp == cb.fn
        assert cf.fn == cb.fp
        assert mf.precision == mb.recall
        assert mf.recall == mb.precision


@settings(max_examples=40, deadline=None)
@given(weighted_clustering_pair(), st.floats(min_value=1e-3, max_value=1e6))
def test_scale_invariance(pair, factor):
    ideal, actual = pair
    base = ce.all_item_metrics(ce.align(ideal, actual))
    scaled_items = ideal.items.scaled(factor)
    scaled_ideal = ce.Clustering(scaled_items, dict(ideal.assignment), weighted=True)
    scaled_actual = ce.Clustering(scaled_items, dict(actual.assignment), weighted=True)
    scaled = ce.all_item_metrics(ce.align(scaled_ideal, scaled_actual))
    for i, (_, m) in base.items():
        sm = scaled[i][1]
        for f in ("precision", "recall", "accuracy", "jaccard_distance"):
            assert abs(getattr(m, f) - getattr(sm, f)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(weighted_clustering_pair())
def test_engines_and_reference_agree(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    reference = ce.naive_evaluate(ev)
    pointwise = ce.all_item_metrics(ev)
    ct = ce.build_crosstab(ev)
    via_cells = ce.crosstab_report(ct, ev.items, ev.memberships()).per_item
    for i in ev.sorted_items:
        for engine in (pointwise, via_cells):
            cr, mr = reference[i]
            c, m = engine[i]
            assert math.isclose(c.tp, cr.tp, rel_tol=1e-9, abs_tol=1e-12)
            assert math.isclose(c.tn, cr.tn, rel_tol=1e-9, abs_tol=1e-9)
            assert abs(m.precision - mr.precision) <= 1e-9
            assert abs(m.jaccard_distance - mr.jaccard_distance) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(weighted_clustering_pair())
def test_singleton_aggregates_compose_exactly(pair):
    ideal, actual = pair
    ev = ce.align(ideal, actual)
    mm = {i: m for i, (_, m) in ce.all_item_metrics(ev).items()}
    for i in ev.sorted_items:
        a = ce.aggregate(mm, ev.items, {i})
        for f in ce.METRIC_FIELDS:
            assert getattr(a, f) == getattr(mm[i], f)


@st.composite
def weighted_subset_triple(draw):
    n = draw(st.integers(min_value=1, max_value=16))
    ids = [f"u{k:02d}" for k in range(n)]
    weights = ce.WeightedItemSet({i: draw(positive_weights) for i in ids})
    def subset():
        mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
        return frozenset(i for i, keep in zip(ids, mask) if keep)
    return weights, subset(), subset(), subset()


@settings(max_examples=120, deadline=None)
@given(weighted_subset_triple())
def test_symmetric_difference_metric_axioms(case):
    weights, a, b, c = case
    assert ce.set_symmetric_difference(a, a, weights) == 0.0
    if a != b:
        assert ce.set_symmetric_difference(a, b, weights) > 0.0
    d_ab = ce.set_symmetric_difference(a, b, weights)
    assert d_ab == ce.set_symmetric_difference(b, a, weights)
    d_bc = ce.set_symmetric_difference(b, c, weights)
    d_ac = ce.set_symmetric_difference(a, c, weights)
    assert d_ab + d_bc >= d_ac - 1e-9


@settings(max_examples=120, deadline=None)
@given(weighted_subset_triple())
def test_jaccard_set_distance_axioms(case):
    weights, a, b, c = case
    if a | b:
        d_ab = ce.set_jaccard_distance(a, b, weights)
        assert 0.0 <= d_ab <= 1.0
        assert d_ab == ce.set_jaccard_distance(b, a, weights)
        if a == b:
            assert d_ab == 0.0
        else:
            assert d_ab > 0.0
    if (a | b) and (b | c) and (a | c):
        d_ab = ce.set_jaccard_distance(a, b, weights)
        d_bc = ce.set_jaccard_distance(b, c, weights)
        d_ac = ce.set_jaccard_distance(a, c, weights)
        assert d_ab + d_bc >= d_ac - 1e-9
