"""Bijection between locally flat-foldable assignments and 3-colorings of the dual grid."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    CreaseId,
    GridSize,
    MVAssignment,
    PartialMVAssignment,
    all_creases,
    is_locally_flat_foldable,
)


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


@dataclass(frozen=True)
class GridColoring:
    """Colors in {0, 1, 2} on the cells of an ``m x n`` grid, stored row-major."""

    size: GridSize
    colors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GridColoring":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("coloring must be a non-empty rectangular array")
        return cls(GridSize(len(rows), len(rows[0])), rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        return self.colors[r][c]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.colors]

    def shifted(self, k: int) -> "GridColoring":
        return GridColoring(self.size, tuple(tuple((x + k) % 3 for x in row) for row in self.colors))

    def anchored(self) -> "GridColoring":
        """Shift all colors so the top-left cell is 0."""
        return self.shifted(-self.colors[0][0])


def is_proper(K: GridColoring) -> bool:
    """Adjacent cells differ and colors lie in {0, 1, 2}; the anchor is not checked."""
    rows = K.colors
    m, n = K.size
    for r in range(m):
        row = rows[r]
        for c in range(n):
            x = row[c]
            if x not in (0, 1, 2):
                return False
            if c + 1 < n and row[c + 1] == x:
                return False
            if r + 1 < m and rows[r + 1][c] == x:
                return False
    return True


def is_valid_coloring(K: GridColoring) -> bool:
    return K.colors[0][0] == 0 and is_proper(K)


def require_valid(K: GridColoring) -> None:
    if not is_valid_coloring(K):
        raise PreconditionError("not a valid coloring (adjacent cells equal or top-left cell not 0)")


def edge_weight(K: GridColoring, e: CreaseId) -> int:
    """Color difference head - tail along the canonical direction, as +1/-1.

    Returns 0 if the two cells share a color.
    """
    tail, head = e.cells()
    d = (K[head] - K[tail]) % 3
    return (0, 1, -1)[d]


def boustrophedon_path(size: GridSize) -> list[tuple[int, int]]:
    """Cells right along row 0, down, left along row 1, down, ..."""
    m, n = size
    path = []
    for r in range(m):
        cols = range(n) if r % 2 == 0 else range(n - 1, -1, -1)
        path.extend((r, c) for c in cols)
    return path


def mv_to_coloring(a: PartialMVAssignment) -> GridColoring:
    """Color the cells by walking the boustrophedon path from color 0."""
    ok, bad = is_locally_flat_foldable(a)
    if not ok:
        raise PreconditionError(f"assignment is not locally flat-foldable at node {tuple(bad[0])}")
    m, n = a.size
    colors = [[0] * n for _ in range(m)]
    path = boustrophedon_path(a.size)
    for prev, cur in zip(path, path[1:]):
        (r0, c0), (r1, c1) = prev, cur
        if r0 == r1:
            e = CreaseId("V", r0, min(c0, c1))
        else:
            e = CreaseId("H", r0, c0)
        # every path step runs tail -> head under the canonical direction
        colors[r1][c1] = (colors[r0][c0] + a[e]) % 3
    return GridColoring(a.size, tuple(map(tuple, colors)))


def coloring_to_mv(K: GridColoring) -> MVAssignment:
    """Read every crease value off the canonical color differences."""
    require_valid(K)
    return MVAssignment(K.size, {e: edge_weight(K, e) for e in all_creases(K.size)})


def diagonal_coloring(size: GridSize) -> GridColoring:
    """Diagonal stripes ``K(r, c) = (r + c) mod 3``."""
    m, n = GridSize.of(*size)
    return GridColoring(GridSize(m, n), tuple(tuple((r + c) % 3 for c in range(n)) for r in range(m)))


def standard_coloring(size: GridSize) -> GridColoring:
    from .core import standard_assignment

    return mv_to_coloring(standard_assignment(GridSize.of(*size)))
