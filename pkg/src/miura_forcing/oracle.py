"""Brute-force references and difference-graph diagnostics.

Everything here is exponential and guarded by size limits; it exists to certify
the fast algorithms on small grids.  None of it uses the auxiliary digraph
except :func:`difference_graph`, which orients its curves by it on purpose.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .coloring import GridColoring, edge_weight, require_valid
from .core import CreaseId, GridSize, NodeId, all_creases, crease_between

MAX_ENUM_CELLS = 20
MAX_SUBSET_CELLS = 9


class SizeGuardError(RuntimeError):
    """An exponential routine was asked to run on a grid above its size guard."""


def _guard(size: GridSize, limit: int, allow_large: bool, what: str) -> None:
    cells = size.rows * size.cols
    if cells > limit and not allow_large:
        raise SizeGuardError(f"{what} refuses {size.rows}x{size.cols} ({cells} cells > {limit}); pass allow_large")


def _constrained_colorings(size: GridSize, fixed: dict[CreaseId, int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Valid colorings (top-left 0) whose canonical edge weights match ``fixed``.

    Plain backtracking in row-major order, colors tried 0, 1, 2.
    """
    m, n = size
    cells = [(r, c) for r in range(m) for c in range(n)]
    grid = [[-1] * n for _ in range(m)]
    # per cell, the already-placed neighbours and the weight constraint on the edge
    checks: list[list[tuple[int, int, Optional[int], bool]]] = []
    for r, c in cells:
        lst = []
        for nb, e in (((r, c - 1), CreaseId("V", r, c - 1)), ((r - 1, c), CreaseId("H", r - 1, c))):
            if nb[0] < 0 or nb[1] < 0:
                continue
            tail, _ = e.cells()
            lst.append((nb[0], nb[1], fixed.get(e), tail == (r, c)))
        checks.append(lst)

    def fits(k: int, x: int) -> bool:
        for nr, nc, w, self_is_tail in checks[k]:
            y = grid[nr][nc]
            if y == x:
                return False
            if w is not None:
                d = (y - x) % 3 if self_is_tail else (x - y) % 3
                if d != w % 3:
                    return False
        return True

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        for x in ((0,) if k == 0 else (0, 1, 2)):
            if fits(k, x):
                grid[r][c] = x
                yield from rec(k + 1)
        grid[r][c] = -1

    yield from rec(0)


def enumerate_colorings(size: GridSize, allow_large: bool = False) -> Iterator[GridColoring]:
    """Every valid coloring, each once, in lexicographic row-major order."""
    size = GridSize.of(*size)
    _guard(size, MAX_ENUM_CELLS, allow_large, "enumerate_colorings")
    for rows in _constrained_colorings(size, {}):
        yield GridColoring(size, rows)


def brute_is_forcing(K: GridColoring, F: Iterable[CreaseId], allow_large: bool = False) -> bool:
    """True iff K is the only valid coloring with K's color differences on F."""
    require_valid(K)
    _guard(K.size, MAX_ENUM_CELLS, allow_large, "brute_is_forcing")
    fixed = {e: edge_weight(K, e) for e in F}
    count = 0
    for _ in _constrained_colorings(K.size, fixed):
        count += 1
        if count > 1:
            return False
    return True


def difference_masks(K: GridColoring, allow_large: bool = False) -> list[int]:
    """For each other valid coloring, the bitmask (over ``all_creases`` order) of
    creases whose color difference differs from K's.  F forces K iff F meets
    every mask."""
    creases = all_creases(K.size)
    mine = [edge_weight(K, e) for e in creases]
    masks = []
    for other in enumerate_colorings(K.size, allow_large):
        if other == K:
            continue
        mask = 0
        for i, e in enumerate(creases):
            if edge_weight(other, e) != mine[i]:
                mask |= 1 << i
        masks.append(mask)
    return sorted(masks, key=lambda x: (x.bit_count(), x))


def brute_min_forcing(K: GridColoring, allow_large: bool = False) -> frozenset[CreaseId]:
    """Lexicographically first smallest forcing set, by increasing-size subset search."""
    require_valid(K)
    _guard(K.size, MAX_SUBSET_CELLS, allow_large, "brute_min_forcing")
    creases = all_creases(K.size)
    masks = difference_masks(K, allow_large=True)
    for k in range(len(creases) + 1):
        for subset in combinations(range(len(creases)), k):
            bits = 0
            for i in subset:
                bits |= 1 << i
            if all(bits & mk for mk in masks):
                return frozenset(creases[i] for i in subset)
    raise AssertionError("the full crease set is always forcing")


def brute_is_controlling(size: GridSize, F: Iterable[CreaseId], allow_large: bool = False) -> bool:
    """F forces every valid coloring (direct definition)."""
    F = list(F)
    return all(brute_is_forcing(K, F, allow_large) for K in enumerate_colorings(size, allow_large))


# --- difference graphs and uniform curves -----------------------------------

@dataclass(frozen=True)
class DifferenceGraph:
    """Per-cell shift type of K2 relative to K1 and the uniform curves separating them.

    ``types[r][c]`` is 0, +1 or -1 with ``K2 = K1 + type (mod 3)``.
    ``curves`` are arc paths (lists of creases) oriented as directed cycles of the
    auxiliary digraph of K1; boundary-to-boundary curves start and end at the
    outer node.
    """

    size: GridSize
    types: tuple[tuple[int, ...], ...]
    polyomino: tuple[tuple[int, ...], ...]
    hubs: tuple[NodeId, ...]
    curves: tuple[tuple[CreaseId, ...], ...]


def _corner_arcs(i: int, j: int) -> dict[str, CreaseId]:
    return {
        "N": CreaseId("V", i - 1, j - 1),
        "S": CreaseId("V", i, j - 1),
        "W": CreaseId("H", i - 1, j - 1),
        "E": CreaseId("H", i - 1, j),
    }


def _label_polyominoes(types) -> list[list[int]]:
    m, n = len(types), len(types[0])
    label = [[-1] * n for _ in range(m)]
    nxt = 0
    for r in range(m):
        for c in range(n):
            if label[r][c] >= 0:
                continue
            label[r][c] = nxt
            queue = deque([(r, c)])
            while queue:
                a, b = queue.popleft()
                for x, y in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
                    if 0 <= x < m and 0 <= y < n and label[x][y] < 0 and types[x][y] == types[a][b]:
                        label[x][y] = nxt
                        queue.append((x, y))
            nxt += 1
    return label


def difference_graph(K1: GridColoring, K2: GridColoring) -> DifferenceGraph:
    """Polyomino typing of K2 against K1 with hubs smoothed into uniform curves.

    A hub where three types meet is smoothed around the two squares of different
    types (the same-type diagonal stays connected).  A two-type hub can go either
    way; it is always smoothed around its north-west and south-east squares.
    """
    from .digraph import build_aux_digraph

    if K1.size != K2.size:
        raise ValueError(f"size mismatch: {K1.size} vs {K2.size}")
    require_valid(K1)
    require_valid(K2)
    m, n = K1.size
    types = tuple(tuple((0, 1, -1)[(K2[r, c] - K1[r, c]) % 3] for c in range(n)) for r in range(m))
    label = _label_polyominoes(types)

    def t(cell):
        return types[cell[0]][cell[1]]

    boundary = {e for e in all_creases(K1.size) if t(e.cells()[0]) != t(e.cells()[1])}
    link: dict[CreaseId, list[CreaseId]] = {e: [] for e in boundary}
    hubs = []
    for i in range(1, m):
        for j in range(1, n):
            arcs = _corner_arcs(i, j)
            here = {d: e for d, e in arcs.items() if e in boundary}
            nw, ne, sw, se = (i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j)
            if len(here) == 2:
                a, b = here.values()
                link[a].append(b)
                link[b].append(a)
                continue
            if not here:
                continue
            if len(here) != 4 or (t(nw) != t(se) and t(ne) != t(sw)):
                raise AssertionError(f"corner {(i, j)} breaks the diagonal rule; colorings invalid?")
            hubs.append(NodeId(i, j))
            # wrap the north-west and south-east squares unless they are the
            # same-type diagonal of a three-type hub
            if t(ne) == t(sw):
                pairs = (("N", "W"), ("S", "E"))
            else:
                pairs = (("N", "E"), ("S", "W"))
            for p, q in pairs:
                link[arcs[p]].append(arcs[q])
                link[arcs[q]].append(arcs[p])

    H = build_aux_digraph(K1)
    curves = []
    seen: set[CreaseId] = set()

    def walk(start: CreaseId) -> list[CreaseId]:
        chain = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [e for e in link[cur] if e != prev and e not in seen]
            if not nxt:
                return chain
            prev, cur = cur, nxt[0]
            seen.add(cur)
            chain.append(cur)

    ordered = sorted(boundary)
    # open curves first (they touch the outer node), then closed ones
    starts = [e for e in ordered if len(link[e]) < 2] + ordered
    for e in starts:
        if e in seen:
            continue
        chain = walk(e)
        curves.append(_orient_chain(H, chain))
    return DifferenceGraph(
        K1.size,
        types,
        tuple(tuple(row) for row in label),
        tuple(hubs),
        tuple(tuple(c) for c in curves),
    )


def _orient_chain(H, chain: list[CreaseId]) -> list[CreaseId]:
    """Order a chain of arcs head-to-tail along its direction in H."""
    arcs = [H.arc(H.index_of(e)) for e in chain]
    if len(chain) == 1:
        return chain
    # the first arc must share its head with the second arc's tail
    if arcs[0][1] not in arcs[1]:
        chain = chain[::-1]
        arcs = arcs[::-1]
    for (a, b), (c, d) in zip(arcs, arcs[1:]):
        if b != c:
            raise AssertionError(f"curve is not a directed path in H at {chain}")
    if arcs[-1][1] != arcs[0][0]:
        raise AssertionError("curve does not close up in H")
    return chain


def curve_sides(size: GridSize, curve: Iterable[CreaseId]) -> tuple[set, set]:
    """The two cell regions separated by a curve.

    A cell's side is the parity of curve crossings on any grid path from the
    tail cell of the first arc.  Parity rather than flood fill, because a curve
    may touch itself at a smoothed hub and pinch a region into diagonal pieces.
    """
    curve = list(curve)
    cut = set(curve)
    m, n = size
    start = curve[0].cells()[0]
    side = {start: 0}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if 0 <= nb[0] < m and 0 <= nb[1] < n:
                want = side[(x, y)] ^ (crease_between((x, y), nb) in cut)
                if nb not in side:
                    side[nb] = want
                    queue.append(nb)
                elif side[nb] != want:
                    raise AssertionError("curve is not closed")
    near = {c for c, p in side.items() if p == 0}
    return near, set(side) - near


def shift_side(K: GridColoring, cells: set, d: int) -> GridColoring:
    """Add d to the colors of ``cells`` and re-anchor the top-left cell at 0."""
    m, n = K.size
    rows = tuple(tuple((K[r, c] + (d if (r, c) in cells else 0)) % 3 for c in range(n)) for r in range(m))
    return GridColoring(K.size, rows).anchored()


def flip_across_curve(K: GridColoring, curve: Iterable[CreaseId]) -> GridColoring:
    """The coloring obtained by shifting one side of a uniform curve so every
    crossing difference changes sign.  Raises if the curve is not uniform in K."""
    curve = list(curve)
    near, far = curve_sides(K.size, curve)
    steps = set()
    for e in curve:
        a, b = e.cells()
        if a not in near:
            a, b = b, a
        steps.add((K[b] - K[a]) % 3)
    if len(steps) != 1:
        raise ValueError("curve is not uniform in K")
    (w,) = steps
    # crossing step w becomes w + d; it must become -w, so d = w (mod 3)
    return shift_side(K, far, w)
