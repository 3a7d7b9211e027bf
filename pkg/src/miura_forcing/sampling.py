"""Random valid colorings (equivalently, random locally flat-foldable assignments).

For narrow grids the sampler is exactly uniform: count completions row by row
with a transfer matrix over proper row colorings, then draw rows top-down in
proportion to those counts.  Grids that are wide in both directions fall back to
a cell-by-cell random fill; that fallback is not uniform.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .coloring import GridColoring
from .core import GridSize

EXACT_MAX_WIDTH = 8


@lru_cache(maxsize=None)
def row_states(n: int) -> tuple[tuple[int, ...], ...]:
    """All proper colorings of a path of n cells, in lexicographic order."""
    return tuple(s for s in product(range(3), repeat=n) if all(s[i] != s[i + 1] for i in range(n - 1)))


@lru_cache(maxsize=None)
def _transitions(n: int) -> tuple[tuple[int, ...], ...]:
    states = row_states(n)
    return tuple(
        tuple(j for j, t in enumerate(states) if all(a != b for a, b in zip(s, t))) for s in states
    )


@lru_cache(maxsize=64)
def _completion_counts(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """counts[r][s] = number of ways to color rows r..m-1 given row r is state s."""
    trans = _transitions(n)
    ns = len(row_states(n))
    counts = [None] * m
    counts[m - 1] = (1,) * ns
    for r in range(m - 2, -1, -1):
        nxt = counts[r + 1]
        counts[r] = tuple(sum(nxt[j] for j in trans[s]) for s in range(ns))
    return tuple(counts)


def count_colorings(size: GridSize) -> int:
    """Number of valid colorings (top-left fixed to 0), by transfer matrix."""
    m, n = size
    if n > m:
        m, n = n, m
    states = row_states(n)
    counts = _completion_counts(m, n)
    return sum(counts[0][i] for i, s in enumerate(states) if s[0] == 0)


def _weighted_choice(rng: random.Random, options, weights):
    total = sum(weights)
    x = rng.randrange(total)
    for o, w in zip(options, weights):
        if x < w:
            return o
        x -= w
    raise AssertionError("weights exhausted")


def _exact_rows(rng: random.Random, m: int, n: int) -> list[tuple[int, ...]]:
    states = row_states(n)
    trans = _transitions(n)
    counts = _completion_counts(m, n)
    first = [i for i, s in enumerate(states) if s[0] == 0]
    cur = _weighted_choice(rng, first, [counts[0][i] for i in first])
    rows = [states[cur]]
    for r in range(1, m):
        opts = trans[cur]
        cur = _weighted_choice(rng, opts, [counts[r][j] for j in opts])
        rows.append(states[cur])
    return rows


def _walk_rows(rng: random.Random, m: int, n: int) -> list[list[int]]:
    # each cell sees at most two colored neighbours, so a choice always exists
    rows = [[0] * n for _ in range(m)]
    for r in range(m):
        for c in range(n):
            if r == 0 and c == 0:
                continue
            banned = set()
            if c > 0:
                banned.add(rows[r][c - 1])
            if r > 0:
                banned.add(rows[r - 1][c])
            rows[r][c] = rng.choice([x for x in range(3) if x not in banned])
    return rows


def random_coloring(size: GridSize, rng: random.Random | int | None = None) -> GridColoring:
    """A random valid coloring; exactly uniform when min(m, n) <= 8."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    m, n = GridSize.of(*size)
    if n <= EXACT_MAX_WIDTH:
        rows = _exact_rows(rng, m, n)
    elif m <= EXACT_MAX_WIDTH:
        cols = _exact_rows(rng, n, m)
        rows = [[cols[c][r] for c in range(n)] for r in range(m)]
    else:
        rows = _walk_rows(rng, m, n)
    return GridColoring(GridSize(m, n), tuple(tuple(row) for row in rows))
