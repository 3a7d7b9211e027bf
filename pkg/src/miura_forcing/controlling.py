"""Controlling sets: crease subsets that force every locally flat-foldable assignment.

A set is controlling exactly when its dual edges connect every cell of the grid.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .core import CreaseId, GridSize, check_crease


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1


def _components(size: GridSize, F: Iterable[CreaseId]) -> _DisjointSets:
    m, n = size
    ds = _DisjointSets(m * n)
    for e in F:
        (r1, c1), (r2, c2) = check_crease(size, e).cells()
        ds.union(r1 * n + c1, r2 * n + c2)
    return ds


def is_controlling(size: GridSize, F: Iterable[CreaseId]) -> bool:
    """True iff the cells are connected through the creases of F."""
    size = GridSize.of(*size)
    return _components(size, F).count == 1


def uncontrolled_component(size: GridSize, F: Iterable[CreaseId]) -> Optional[list[tuple[int, int]]]:
    """Cells of the component containing (0, 0) when F is not controlling.

    That component can be recolored independently of the rest, which is the
    certificate that F does not pin down every assignment.
    """
    size = GridSize.of(*size)
    ds = _components(size, F)
    if ds.count == 1:
        return None
    n = size.cols
    root = ds.find(0)
    return [(r, c) for r, c in size.cells() if ds.find(r * n + c) == root]


def comb_spanning_tree(size: GridSize) -> frozenset[CreaseId]:
    """First-row vertical creases plus every horizontal crease: a spanning tree of mn - 1 creases."""
    m, n = GridSize.of(*size)
    tree = {CreaseId("V", 0, c) for c in range(n - 1)}
    tree |= {CreaseId("H", r, c) for r in range(m - 1) for c in range(n)}
    return frozenset(tree)
