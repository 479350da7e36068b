"""Shared fixtures and helpers for the test suite.

The "toy" instance is the 3-item worked example used as a golden fixture
throughout: ideal clusters {i1,i2},{i3}, actual clusters {i1,i3},{i2},
weights 1, 2, 3. The "split" instance is its unit-weight variant where
i2 is split into i4,i5 and i3 into i6,i7,i8; its overall metrics must
match the toy instance exactly.
"""

from __future__ import annotations

import contextlib
import math
from pathlib import Path

import pytest

import clustereval as ce

REPLAY_DIR = Path(__file__).parent / "_replay"

CONFUSION_FIELDS = ("tp", "fp", "fn", "tn")
RATIO_FIELDS = (
    "precision",
    "recall",
    "accuracy",
    "jaccard_index",
    "jaccard_distance",
    "over_merge_rate",
    "under_merge_rate",
)
OPTIONAL_FIELDS = ("informedness", "markedness")


@pytest.fixture
def toy_ideal() -> ce.Clustering:
    return ce.Clustering.from_clusters(
        {"g1": ["i1", "i2"], "g2": ["i3"]},
        {"i1": 1.0, "i2": 2.0, "i3": 3.0},
    )


@pytest.fixture
def toy_actual() -> ce.Clustering:
    return ce.Clustering.from_clusters({"a1": ["i1", "i3"], "a2": ["i2"]})


@pytest.fixture
def toy_eval(toy_ideal, toy_actual) -> ce.AlignedEvaluation:
    return ce.align(ce.validate(toy_ideal), ce.validate(toy_actual))


@pytest.fixture
def split_ideal() -> ce.Clustering:
    return ce.Clustering.from_clusters(
        {"g1": ["i1", "i4", "i5"], "g2": ["i6", "i7", "i8"]}
    )


@pytest.fixture
def split_actual() -> ce.Clustering:
    return ce.Clustering.from_clusters(
        {"a1": ["i1", "i6", "i7", "i8"], "a2": ["i4", "i5"]}
    )


@pytest.fixture
def split_eval(split_ideal, split_actual) -> ce.AlignedEvaluation:
    return ce.align(ce.validate(split_ideal), ce.validate(split_actual))


@contextlib.contextmanager
def replay_on_failure(ideal: ce.Clustering, actual: ce.Clustering, label: str):
    """Dump a failing generated instance as replayable input files."""
    try:
        yield
    except AssertionError as exc:
        ideal_path, actual_path = ce.dump_instance(ideal, actual, REPLAY_DIR, stem=label)
        raise AssertionError(f"{exc}\nreplay files: {ideal_path} {actual_path}") from None


WEIGHT_KINDS = ("unit", "uniform", "zipf")


def instance_specs(
    count: int,
    max_items: int,
    seed_base: int = 0,
    mutation_every: int = 10,
) -> list[ce.RandomInstanceSpec]:
    """A deterministic mix of sizes, weight kinds, and cluster shapes."""
    specs = []
    for k in range(count):
        n = 1 + (k * 37 + seed_base * 13) % max_items
        kind = WEIGHT_KINDS[k % len(WEIGHT_KINDS)]
        mutation = None
        if mutation_every and k % mutation_every == 7:
            mutation = max(1, n // 10)
        hi = max(1, min(n, 2 + (k % 12)))
        specs.append(
            ce.RandomInstanceSpec(
                item_count=n,
                cluster_count_range=(1, hi),
                weight_kind=kind,
                mutation_moves=mutation,
                seed=seed_base + k,
            )
        )
    return specs


def clustering_triple(
    n: int, seed: int, weight_kind: str = "uniform", identical_first_two: bool = False
) -> tuple[ce.Clustering, ce.Clustering, ce.Clustering]:
    """Three clusterings of one weighted item set, deterministic per seed."""
    spec = ce.RandomInstanceSpec(
        item_count=n,
        cluster_count_range=(1, max(1, min(n, 6))),
        weight_kind=weight_kind,  # type: ignore[arg-type]
        seed=seed,
    )
    c1, c2 = ce.generate_instance(spec)
    other_spec = ce.RandomInstanceSpec(
        item_count=n,
        cluster_count_range=(1, max(1, min(n, 6))),
        weight_kind=weight_kind,  # type: ignore[arg-type]
        seed=seed + 1_000_003,
    )
    other, _ = ce.generate_instance(other_spec)
    c3 = ce.Clustering(c1.items, dict(other.assignment), weighted=True)
    if identical_first_two:
        c2 = ce.Clustering(c1.items, dict(c1.assignment), weighted=True)
    return c1, c2, c3


def assert_metrics_close(a: ce.ItemMetrics, b: ce.ItemMetrics, tol: float, where: str = ""):
    for f in RATIO_FIELDS:
        x, y = getattr(a, f), getattr(b, f)
        assert abs(x - y) <= tol, f"{where}{f}: {x} vs {y}"
    for f in OPTIONAL_FIELDS:
        x, y = getattr(a, f), getattr(b, f)
        assert (x is None) == (y is None), f"{where}{f}: {x} vs {y}"
        if x is not None:
            assert abs(x - y) <= tol, f"{where}{f}: {x} vs {y}"


def assert_per_item_close(left, right, tol: float = 1e-9):
    """Compare two item -> (confusion, metrics) mappings."""
    assert left.keys() == right.keys()
    for i in left:
        ca, ma = left[i]
        cb, mb = right[i]
        for f in CONFUSION_FIELDS:
            x, y = getattr(ca, f), getattr(cb, f)
            assert math.isclose(x, y, rel_tol=tol, abs_tol=1e-12), f"{i}.{f}: {x} vs {y}"
        assert_metrics_close(ma, mb, tol, where=f"{i}.")


def assert_aggregates_close(a: ce.AggregateMetrics, b: ce.AggregateMetrics, tol: float = 1e-9):
    assert a.subject_kind == b.subject_kind
    assert a.subject_id == b.subject_id
    assert math.isclose(a.weight, b.weight, rel_tol=tol, abs_tol=1e-12)
    for f in ce.METRIC_FIELDS:
        x, y = getattr(a, f), getattr(b, f)
        assert abs(x - y) <= tol, f"{a.subject_kind}/{a.subject_id} {f}: {x} vs {y}"
