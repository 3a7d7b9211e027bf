"""The auxiliary planar multidigraph on square corners and forcing-set verification.

Geometry is in screen coordinates: row index grows downward, column index to the
right.  Corner ``(i, j)`` is the top-left corner of cell ``(i, j)``.  Corners with
``1 <= i <= m-1`` and ``1 <= j <= n-1`` are interior nodes; every other corner is
merged into a single outer node.

Each crease is dual to exactly one grid segment (arc):

* ``H(r, c)`` -> segment from corner ``(r+1, c)`` (left end) to ``(r+1, c+1)`` (right end)
* ``V(r, c)`` -> segment from corner ``(r, c+1)`` (top end) to ``(r+1, c+1)`` (bottom end)

An arc's direction is stored as +1 (first end -> second end), -1 (reverse) or 0
(undirected).  Going clockwise around a square means left-to-right along its top,
down its right side, right-to-left along its bottom and up its left side.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import GridColoring, require_valid
from .core import CreaseId, GridSize, PartialMVAssignment, all_creases, crease_index


class NotFullyDirectedError(ValueError):
    pass


def corner_node(size: GridSize, i: int, j: int) -> int:
    m, n = size
    if 1 <= i <= m - 1 and 1 <= j <= n - 1:
        return (i - 1) * (n - 1) + (j - 1)
    return (m - 1) * (n - 1)


def node_corner(size: GridSize, v: int) -> Optional[tuple[int, int]]:
    """Inverse of :func:`corner_node`; ``None`` for the outer node."""
    m, n = size
    if v == (m - 1) * (n - 1):
        return None
    return v // (n - 1) + 1, v % (n - 1) + 1


def arc_ends(size: GridSize, e: CreaseId) -> tuple[int, int]:
    if e.kind == "H":
        return corner_node(size, e.r + 1, e.c), corner_node(size, e.r + 1, e.c + 1)
    return corner_node(size, e.r, e.c + 1), corner_node(size, e.r + 1, e.c + 1)


def clockwise_sign(e: CreaseId, square: tuple[int, int]) -> int:
    """Direction of e's arc when oriented clockwise around one of its two squares."""
    if e.kind == "H":
        # bottom side of the upper square runs right-to-left
        return -1 if square == (e.r, e.c) else 1
    # right side of the left square runs downward
    return 1 if square == (e.r, e.c) else -1


@dataclass(frozen=True)
class AuxDigraph:
    """Arc ``i`` is dual to ``creases[i]``; node ``outer`` stands for the boundary."""

    size: GridSize
    creases: tuple[CreaseId, ...]
    ends: tuple[tuple[int, int], ...]
    direction: tuple[int, ...]

    @property
    def num_nodes(self) -> int:
        return self.size.num_nodes + 1

    @property
    def outer(self) -> int:
        return self.size.num_nodes

    @property
    def num_arcs(self) -> int:
        return len(self.creases)

    @property
    def fully_directed(self) -> bool:
        return all(self.direction)

    def arc(self, i: int) -> Optional[tuple[int, int]]:
        """``(tail, head)`` of arc ``i``, or ``None`` if undirected."""
        d = self.direction[i]
        u, v = self.ends[i]
        if d == 0:
            return None
        return (u, v) if d > 0 else (v, u)

    def arcs(self) -> list[tuple[int, int]]:
        if not self.fully_directed:
            raise NotFullyDirectedError("digraph has undirected arcs")
        return [self.arc(i) for i in range(self.num_arcs)]

    def index_of(self, e: CreaseId) -> int:
        return crease_index(self.size, e)

    def degrees(self) -> tuple[list[int], list[int]]:
        indeg = [0] * self.num_nodes
        outdeg = [0] * self.num_nodes
        for i in range(self.num_arcs):
            a = self.arc(i)
            if a is not None:
                outdeg[a[0]] += 1
                indeg[a[1]] += 1
        return indeg, outdeg

    def with_directions(self, direction: Iterable[int]) -> "AuxDigraph":
        return AuxDigraph(self.size, self.creases, self.ends, tuple(direction))


def _skeleton(size: GridSize) -> tuple[tuple[CreaseId, ...], tuple[tuple[int, int], ...]]:
    creases = tuple(all_creases(size))
    return creases, tuple(arc_ends(size, e) for e in creases)


def build_aux_digraph(K: GridColoring) -> AuxDigraph:
    """Orient each arc clockwise around square s_i when K(s_j) = K(s_i) + 1."""
    require_valid(K)
    creases, ends = _skeleton(K.size)
    colors = K.colors
    direction = []
    for e in creases:
        (r1, c1), (r2, c2) = a, b = e.cells()
        s_i = a if (colors[r2][c2] - colors[r1][c1]) % 3 == 1 else b
        direction.append(clockwise_sign(e, s_i))
    return AuxDigraph(K.size, creases, ends, tuple(direction))


def mv_direction(e: CreaseId, mv: int) -> int:
    """Arc direction implied by a crease value.

    With canonical cells (tail, head), +1 means K(head) = K(tail) + 1, so the
    arc runs clockwise around the tail; -1 means clockwise around the head.
    """
    tail, head = e.cells()
    return clockwise_sign(e, tail if mv > 0 else head)


def build_partial_digraph(S: PartialMVAssignment) -> AuxDigraph:
    creases, ends = _skeleton(S.size)
    direction = tuple(mv_direction(e, S[e]) if e in S else 0 for e in creases)
    return AuxDigraph(S.size, creases, ends, direction)


def check_eulerian(H: AuxDigraph) -> bool:
    """Every interior node has in-degree 2 and out-degree 2."""
    if not H.fully_directed:
        raise NotFullyDirectedError("check_eulerian needs a fully directed digraph")
    indeg, outdeg = H.degrees()
    return all(indeg[v] == 2 and outdeg[v] == 2 for v in range(H.outer))


def find_cycle(num_nodes: int, arcs: list[tuple[int, int, int]]) -> Optional[list[int]]:
    """Find a directed cycle, or ``None`` if the graph is acyclic.

    ``arcs`` holds ``(arc_id, tail, head)``.  Returns arc ids in cycle order.
    Iterative DFS, so recursion depth never limits the graph size.
    """
    out: list[list[tuple[int, int]]] = [[] for _ in range(num_nodes)]
    for k, u, v in arcs:
        if u == v:
            return [k]
        out[u].append((k, v))
    state = [0] * num_nodes  # 0 new, 1 on stack, 2 done
    via = [-1] * num_nodes  # arc used to enter the node
    parent = [-1] * num_nodes
    for root in range(num_nodes):
        if state[root]:
            continue
        state[root] = 1
        stack = [(root, iter(out[root]))]
        while stack:
            u, it = stack[-1]
            for k, v in it:
                if state[v] == 0:
                    state[v] = 1
                    via[v], parent[v] = k, u
                    stack.append((v, iter(out[v])))
                    break
                if state[v] == 1:
                    cycle = [k]
                    w = u
                    while w != v:
                        cycle.append(via[w])
                        w = parent[w]
                    cycle.reverse()
                    return cycle
            else:
                state[u] = 2
                stack.pop()
    return None


def is_forcing(K: GridColoring, F: Iterable[CreaseId]) -> tuple[bool, Optional[list[CreaseId]]]:
    """Decide whether F forces K: the digraph minus F's arcs must be acyclic.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness lists the
    creases dual to a directed cycle (a uniform curve of K) in order.
    """
    H = build_aux_digraph(K)
    removed = {H.index_of(e) for e in F}
    arcs = [(i, *H.arc(i)) for i in range(H.num_arcs) if i not in removed]
    cycle = find_cycle(H.num_nodes, arcs)
    if cycle is None:
        return True, None
    return False, [H.creases[i] for i in cycle]


def cycle_is_uniform(K: GridColoring, cycle: list[CreaseId]) -> bool:
    """Color difference across every arc of a directed cycle is the same.

    Walking the cycle, measure K(right square) - K(left square) at each arc.
    """
    H = build_aux_digraph(K)
    diffs = set()
    for e in cycle:
        i = H.index_of(e)
        a, b = e.cells()
        # the square that the arc runs clockwise around is on its right
        right = a if clockwise_sign(e, a) == H.direction[i] else b
        left = b if right == a else a
        diffs.add((K[left] - K[right]) % 3)
    return len(diffs) <= 1
