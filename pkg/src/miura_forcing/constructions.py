"""Constructive forcing sets: domino tilings for the standard assignment, and a
greedy two-rows-at-a-time construction for any valid coloring."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .coloring import GridColoring, require_valid
from .core import CreaseId, GridSize, all_creases, crease_between

Cell = tuple[int, int]


@dataclass(frozen=True)
class DominoTiling:
    size: GridSize
    dominoes: tuple[tuple[Cell, Cell], ...]
    uncovered: Optional[Cell] = None

    def creases(self) -> list[CreaseId]:
        """The crease crossed by each domino."""
        return sorted(crease_between(a, b) for a, b in self.dominoes)

    def is_valid(self) -> bool:
        seen = set()
        for a, b in self.dominoes:
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                return False
            seen.update((a, b))
        expect = set(self.size.cells()) - {self.uncovered}
        return len(seen) == 2 * len(self.dominoes) and seen == expect


def canonical_tiling(size: GridSize) -> DominoTiling:
    """Horizontal dominoes; if n is odd the last column is tiled vertically, and
    if m is odd as well the bottom-right cell is left out."""
    m, n = GridSize.of(*size)
    dominoes = []
    for r in range(m):
        for c in range(0, n - 1, 2):
            dominoes.append(((r, c), (r, c + 1)))
    uncovered = None
    if n % 2 == 1:
        for r in range(0, m - 1, 2):
            dominoes.append(((r, n - 1), (r + 1, n - 1)))
        if m % 2 == 1:
            uncovered = (m - 1, n - 1)
    return DominoTiling(GridSize(m, n), tuple(sorted(dominoes)), uncovered)


def flip(tiling: DominoTiling, r: int, c: int) -> Optional[DominoTiling]:
    """Rotate the two parallel dominoes covering the 2x2 block at (r, c), if any."""
    horiz = (((r, c), (r, c + 1)), ((r + 1, c), (r + 1, c + 1)))
    vert = (((r, c), (r + 1, c)), ((r, c + 1), (r + 1, c + 1)))
    have = set(tiling.dominoes)
    for old, new in ((horiz, vert), (vert, horiz)):
        if all(d in have for d in old):
            dominoes = tuple(sorted((have - set(old)) | set(new)))
            return DominoTiling(tiling.size, dominoes, tiling.uncovered)
    return None


def random_flips(tiling: DominoTiling, count: int, rng: random.Random) -> DominoTiling:
    """Apply ``count`` random successful flips."""
    m, n = tiling.size
    blocks = [(r, c) for r in range(m - 1) for c in range(n - 1)]
    done = 0
    for _ in range(100 * max(count, 1)):
        if done == count or not blocks:
            break
        out = flip(tiling, *rng.choice(blocks))
        if out is not None:
            tiling = out
            done += 1
    return tiling


def tiling_forcing_set(tiling: DominoTiling) -> frozenset[CreaseId]:
    """Creases crossed by the dominoes, plus one crease at the uncovered cell.

    Patterns with a single row or column have no nodes, so nothing propagates and
    every crease is returned.
    """
    m, n = tiling.size
    if m == 1 or n == 1:
        return frozenset(all_creases(tiling.size))
    F = set(tiling.creases())
    if tiling.uncovered is not None:
        r, c = tiling.uncovered
        # one of the creases bounding the uncovered cell, toward the grid interior
        F.add(CreaseId("V", r, c - 1) if c > 0 else CreaseId("V", r, c))
    return frozenset(F)


def domino_forcing_standard(size: GridSize) -> frozenset[CreaseId]:
    """Forcing set for the standard assignment from the canonical domino tiling."""
    return tiling_forcing_set(canonical_tiling(size))


def _block(K: GridColoring, a: Cell, b: Cell, a2: Cell, b2: Cell) -> CreaseId:
    """One edge forcing the new pair (a2, b2) given the forced pair (a, b).

    a-b, a-a2, b-b2 and a2-b2 are the four adjacencies of the 2x2 block; which
    side the forced pair is on does not matter.
    """
    if K[a2] == K[b] and K[b2] == K[a]:
        return crease_between(a2, b2)
    # 3-colored: pick the new vertex whose two block neighbours share a color
    if K[a] == K[b2]:
        return crease_between(a, a2)
    return crease_between(b, b2)


def greedy_forcing(K: GridColoring) -> frozenset[CreaseId]:
    """A forcing set of size ceil(mn/2), built in one pass over 2x2 blocks.

    Rows are handled in pairs, left to right.  For odd m the last row is covered
    by blocks whose forced pair is the row above; with odd n its last cell is
    forced by the vertical edge from above.  Single-row or single-column grids
    need every crease.
    """
    require_valid(K)
    m, n = K.size
    if m == 1 or n == 1:
        return frozenset(all_creases(K.size))
    F: list[CreaseId] = []
    for p in range(m // 2):
        top, bot = 2 * p, 2 * p + 1
        if p == 0:
            F.append(CreaseId("H", 0, 0))
            first = 0
        else:
            F.append(_block(K, (top - 1, 0), (top - 1, 1), (top, 0), (top, 1)))
            F.append(_block(K, (top, 0), (top, 1), (bot, 0), (bot, 1)))
            first = 1
        for c in range(first, n - 1):
            F.append(_block(K, (top, c), (bot, c), (top, c + 1), (bot, c + 1)))
    if m % 2 == 1:
        r = m - 1
        for c in range(0, n, 2):
            if c + 1 < n:
                F.append(_block(K, (r - 1, c), (r - 1, c + 1), (r, c), (r, c + 1)))
            else:
                F.append(CreaseId("H", r - 1, c))
    assert len(F) == len(set(F))
    return frozenset(F)
