"""Core model: validation, alignment, and coverage."""

import math

import pytest

import clustereval as ce


class TestValidate:
    def test_toy_ideal_is_valid(self, toy_ideal):
        assert ce.validate(toy_ideal) is toy_ideal

    def test_smallest_partition_is_valid(self):
        c = ce.Clustering.from_clusters({"c": ["only"]}, {"only": 1.0})
        assert ce.validate(c) is c

    def test_zero_weight_rejected(self):
        with pytest.raises(ce.NonPositiveWeightError):
            ce.Clustering.from_clusters({"g": ["i1"]}, {"i1": 0.0})

    @pytest.mark.parametrize("bad", [-1.0, float("inf"), float("nan")])
    def test_bad_weights_rejected(self, bad):
        with pytest.raises(ce.NonPositiveWeightError):
            ce.WeightedItemSet({"i1": bad})

    def test_duplicate_item_from_rows(self):
        with pytest.raises(ce.DuplicateItemError):
            ce.Clustering.from_rows([("i1", "g1"), ("i1", "g2")])

    def test_duplicate_item_across_clusters(self):
        with pytest.raises(ce.DuplicateItemError):
            ce.Clustering.from_clusters({"g1": ["i1"], "g2": ["i1"]})

    def test_unassigned_item_rejected(self):
        items = ce.WeightedItemSet({"i1": 1.0, "i2": 1.0})
        c = ce.Clustering(items, {"i1": "g1"})
        with pytest.raises(ce.UnassignedItemError):
            ce.validate(c)

    def test_assignment_for_unknown_item_rejected(self):
        items = ce.WeightedItemSet({"i1": 1.0})
        c = ce.Clustering(items, {"i1": "g1", "ghost": "g1"})
        with pytest.raises(ce.UnknownItemError):
            ce.validate(c)

    def test_empty_item_id_rejected(self):
        with pytest.raises(ValueError):
            ce.WeightedItemSet({"": 1.0})

    def test_empty_cluster_id_rejected(self):
        items = ce.WeightedItemSet({"i1": 1.0})
        with pytest.raises(ValueError):
            ce.validate(ce.Clustering(items, {"i1": ""}))


class TestAlign:
    def test_toy_alignment(self, toy_eval):
        assert set(toy_eval.sorted_items) == {"i1", "i2", "i3"}
        assert toy_eval.ideal_cluster_of("i1") == frozenset({"i1", "i2"})
        assert toy_eval.actual_cluster_of("i1") == frozenset({"i1", "i3"})
        assert toy_eval.total_weight == 6.0

    def test_identity_singleton(self):
        c = ce.Clustering.from_clusters({"c": ["a"]}, {"a": 1.0})
        ev = ce.align(c, c)
        assert ev.sorted_items == ("a",)
        assert ev.ideal_cluster_of("a") == ev.actual_cluster_of("a") == frozenset({"a"})

    def test_disjoint_item_sets(self):
        left = ce.Clustering.from_clusters({"g": ["a", "b"]})
        right = ce.Clustering.from_clusters({"g": ["c", "d"]})
        with pytest.raises(ce.EmptyIntersectionError):
            ce.align(left, right)

    def test_weights_come_from_ground_truth(self, toy_ideal, toy_actual):
        ev = ce.align(toy_ideal, toy_actual)
        assert ev.items.weight("i3") == 3.0

    def test_restriction_to_common_items(self):
        ideal = ce.Clustering.from_clusters({"g": ["a", "b", "c"]}, {"a": 1, "b": 1, "c": 1})
        actual = ce.Clustering.from_clusters({"x": ["a", "b"], "y": ["z"]})
        ev = ce.align(ideal, actual)
        assert set(ev.sorted_items) == {"a", "b"}
        assert ev.ideal_cluster_of("a") == frozenset({"a", "b"})

    def test_weight_mismatch_between_weighted_sides(self):
        ideal = ce.Clustering.from_clusters({"g": ["a"]}, {"a": 1.0})
        actual = ce.Clustering.from_clusters({"h": ["a"]}, {"a": 2.0})
        with pytest.raises(ce.WeightMismatchError):
            ce.align(ideal, actual)

    def test_matching_weights_on_both_sides_accepted(self):
        ideal = ce.Clustering.from_clusters({"g": ["a"]}, {"a": 2.0})
        actual = ce.Clustering.from_clusters({"h": ["a"]}, {"a": 2.0})
        ev = ce.align(ideal, actual)
        assert ev.items.weight("a") == 2.0

    def test_item_set_symmetry(self, toy_ideal, toy_actual):
        forward = ce.align(toy_ideal, toy_actual)
        toy_actual_weighted = ce.Clustering(
            forward.items, dict(toy_actual.assignment), weighted=True
        )
        backward = ce.align(toy_actual_weighted, toy_ideal)
        assert forward.sorted_items == backward.sorted_items

    def test_cluster_maps_partition_the_universe(self, toy_eval):
        for members in (toy_eval.ideal_members, toy_eval.actual_members):
            union = set()
            total = 0
            for m in members.values():
                assert not (union & m)
                union |= m
                total += len(m)
            assert union == set(toy_eval.sorted_items)
            assert total == len(toy_eval)

    def test_item_in_both_own_clusters(self, toy_eval):
        for i in toy_eval.sorted_items:
            assert i in toy_eval.ideal_cluster_of(i)
            assert i in toy_eval.actual_cluster_of(i)

    def test_unknown_item_lookup(self, toy_eval):
        with pytest.raises(ce.UnknownItemError):
            toy_eval.ideal_cluster_of("nope")

    def test_source_sizes_are_unrestricted(self):
        ideal = ce.Clustering.from_clusters({"g": ["a", "b", "c"]})
        actual = ce.Clustering.from_clusters({"x": ["a", "b"]})
        ev = ce.align(ideal, actual)
        assert ev.ideal_source_sizes["g"] == 3
        assert len(ev.ideal_members["g"]) == 2


class TestCoverage:
    def test_toy_coverage(self, toy_ideal, toy_actual):
        cov = ce.coverage(toy_ideal, toy_actual)
        assert cov.common_count == 3
        assert cov.common_weight == 6.0
        assert cov.ground_truth_only_count == 0
        assert cov.actual_only_count == 0

    def test_ground_truth_only_items(self):
        ideal = ce.Clustering.from_clusters({"g": ["a", "b"]}, {"a": 1.0, "b": 1.0})
        actual = ce.Clustering.from_clusters({"x": ["a"]})
        cov = ce.coverage(ideal, actual)
        assert cov.ground_truth_only_count == 1
        assert cov.ground_truth_only_weight == 1.0

    def test_identical_item_sets(self, toy_ideal):
        cov = ce.coverage(toy_ideal, toy_ideal)
        assert cov.ground_truth_only_count == 0
        assert cov.actual_only_count == 0
        assert cov.common_count == 3

    def test_actual_only_weight_needs_actual_weights(self):
        ideal = ce.Clustering.from_clusters({"g": ["a"]}, {"a": 1.0})
        plain = ce.Clustering.from_clusters({"x": ["a", "b"]})
        assert ce.coverage(ideal, plain).actual_only_weight is None
        weighted = ce.Clustering.from_clusters({"x": ["a", "b"]}, {"a": 1.0, "b": 5.0})
        assert ce.coverage(ideal, weighted).actual_only_weight == 5.0


class TestWeightedItemSet:
    def test_subset_weight_is_member_sum(self):
        items = ce.WeightedItemSet({"a": 0.5, "b": 1.25, "c": 2.0})
        assert items.subset_weight(["a", "c"]) == 2.5
        assert items.subset_weight([]) == 0.0
        assert items.total_weight == items.subset_weight(["a", "b", "c"])

    def test_scaled_preserves_items(self):
        items = ce.WeightedItemSet({"a": 1.0, "b": 2.0})
        scaled = items.scaled(3.0)
        assert scaled.weight("b") == 6.0
        assert math.isclose(scaled.total_weight, 9.0)

    def test_unknown_item_weight(self):
        items = ce.WeightedItemSet({"a": 1.0})
        with pytest.raises(ce.UnknownItemError):
            items.weight("b")
