"""Readers and writers for the tab-separated input formats.

Clustering files are UTF-8, one item per line::

    item_id<TAB>cluster_id[<TAB>weight]

Slice files are::

    slice_name<TAB>item_id

Lines starting with ``#`` and blank lines are ignored in both formats.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable

from .aggregation import SliceSpec
from .core import Clustering, WeightedItemSet
from .errors import (
    DuplicateItemError,
    NonPositiveWeightError,
    ParseError,
)


def _data_lines(path: Path) -> Iterable[tuple[int, str]]:
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            yield lineno, line


def read_clustering(
    path: str | Path,
    *,
    has_weights: bool | None = None,
    default_weight: float = 1.0,
) -> Clustering:
    """Parse a clustering file into a validated-shape :class:`Clustering`.

    ``has_weights=None`` infers the column count from the first data line
    and then requires it to stay consistent. With a 2-column file every
    item gets ``default_weight`` and the clustering counts as unweighted.
    """
    path = Path(path)
    weights: dict[str, float] = {}
    assignment: dict[str, str] = {}
    expected: int | None = {True: 3, False: 2, None: None}[has_weights]
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if expected is None:
            if len(fields) not in (2, 3):
                raise ParseError(str(path), lineno, f"expected 2 or 3 tab-separated fields, got {len(fields)}")
            expected = len(fields)
        if len(fields) != expected:
            raise ParseError(
                str(path), lineno, f"expected {expected} tab-separated fields, got {len(fields)}"
            )
        item, cluster = fields[0], fields[1]
        if not item or not cluster:
            raise ParseError(str(path), lineno, "empty item or cluster id")
        if expected == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise ParseError(str(path), lineno, f"bad weight {fields[2]!r}") from None
        else:
            w = default_weight
        if item in assignment:
            raise DuplicateItemError(item, line=lineno)
        if expected == 3 and (not math.isfinite(w) or w <= 0.0):
            raise NonPositiveWeightError(item, w, line=lineno)
        assignment[item] = cluster
        weights[item] = w
    if not assignment:
        raise ParseError(str(path), 0, "no data lines")
    return Clustering(WeightedItemSet(weights), assignment, weighted=(expected == 3))


def write_clustering(clustering: Clustering, path: str | Path) -> None:
    """Write a clustering in the input format, items in sorted order.

    Used for report drill-downs and for dumping failing generated
    instances so they can be replayed through the CLI.
    """
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for item in clustering.items.sorted_items:
            cid = clustering.assignment[item]
            if clustering.weighted:
                fh.write(f"{item}\t{cid}\t{clustering.items.weight(item)!r}\n")
            else:
                fh.write(f"{item}\t{cid}\n")


def read_slices(path: str | Path) -> list[SliceSpec]:
    """Parse a slice file; rows with the same slice name accumulate."""
    path = Path(path)
    grouped: dict[str, set[str]] = {}
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(str(path), lineno, f"expected 2 tab-separated fields, got {len(fields)}")
        name, item = fields
        if not name or not item:
            raise ParseError(str(path), lineno, "empty slice name or item id")
        grouped.setdefault(name, set()).add(item)
    return [SliceSpec(name, frozenset(members)) for name, members in sorted(grouped.items())]
