"""Completing a partial MV assignment to a locally flat-foldable one.

Pipeline: orient the arcs of the given creases in the auxiliary digraph, fix the
in/out imbalance they cause with a unit-capacity circulation on the remaining
arcs, orient whatever is still free cycle by cycle, read a coloring off the
resulting Eulerian orientation and convert it back to creases.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .coloring import GridColoring, coloring_to_mv, PreconditionError
from .core import MVAssignment, NodeId, PartialMVAssignment
from .digraph import AuxDigraph, build_partial_digraph, check_eulerian, clockwise_sign, node_corner


@dataclass(frozen=True)
class FlowNetwork:
    """Unit-capacity undirected arcs plus a supply (+) / demand (-) per node.

    Each pre-directed arc contributes one unit of demand at its tail and one unit
    of supply at its head, so a node's supply is (directed in) - (directed out).
    """

    num_nodes: int
    undirected: tuple[tuple[int, int, int], ...]  # (arc index, end0, end1)
    supply: tuple[int, ...]


@dataclass(frozen=True)
class Infeasible:
    """No consistent extension exists.

    ``nodes`` is one side of a saturated cut: interior nodes whose combined
    imbalance cannot be routed out.  Falsy, so ``if result:`` reads naturally.
    """

    nodes: tuple[NodeId, ...] = ()
    outer: bool = False
    excess: int = 0

    def __bool__(self):
        return False


def build_flow_network(H: AuxDigraph) -> FlowNetwork:
    supply = [0] * H.num_nodes
    undirected = []
    for i in range(H.num_arcs):
        a = H.arc(i)
        if a is None:
            undirected.append((i, *H.ends[i]))
        else:
            supply[a[0]] -= 1
            supply[a[1]] += 1
    return FlowNetwork(H.num_nodes, tuple(undirected), tuple(supply))


class _MaxFlow:
    """Edmonds-Karp on an explicit residual graph (edges stored in pairs)."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        e = len(self.head)
        self.head += [v, u]
        self.cap += [cap, rev_cap]
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def run(self, s: int, t: int) -> int:
        total = 0
        while True:
            via = [-1] * self.n
            via[s] = -2
            queue = deque([s])
            while queue and via[t] == -1:
                u = queue.popleft()
                for e in self.adj[u]:
                    v = self.head[e]
                    if self.cap[e] > 0 and via[v] == -1:
                        via[v] = e
                        queue.append(v)
            if via[t] == -1:
                return total
            push = None
            v = t
            while v != s:
                e = via[v]
                push = self.cap[e] if push is None else min(push, self.cap[e])
                v = self.head[e ^ 1]
            v = t
            while v != s:
                e = via[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.head[e ^ 1]
            total += push

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def solve_circulation(net: FlowNetwork, size=None) -> dict[int, tuple[int, int]] | Infeasible:
    """Orient a subset of the undirected arcs to cancel every node's imbalance.

    Reduced to max flow: a super source feeds supply nodes, demand nodes drain to
    a super sink, and each undirected arc is a pair of opposite unit arcs.  The
    result maps arc index -> (tail, head) for arcs carrying one unit of net flow.
    """
    n = net.num_nodes
    s, t = n, n + 1
    flow = _MaxFlow(n + 2)
    # an undirected unit arc: one residual edge of capacity 1 each way
    edges = [(i, u, v, flow.add(u, v, 1, 1)) for i, u, v in net.undirected if u != v]
    need = 0
    for v, b in enumerate(net.supply):
        if b > 0:
            flow.add(s, v, b)
            need += b
        elif b < 0:
            flow.add(v, t, -b)
    got = flow.run(s, t)
    if got < need:
        side = flow.reachable(s) - {s}
        outer = n - 1 in side
        nodes = ()
        if size is not None:
            nodes = tuple(NodeId(*node_corner(size, v)) for v in sorted(side) if v != n - 1)
        return Infeasible(nodes, outer, need - got)
    oriented = {}
    for i, u, v, e in edges:
        # residual cap 0 forward means one unit went u -> v; 2 means v -> u
        if flow.cap[e] == 0:
            oriented[i] = (u, v)
        elif flow.cap[e] == 2:
            oriented[i] = (v, u)
    return oriented


def veblen_orient(num_nodes: int, residual: list[tuple[int, int, int]]) -> dict[int, tuple[int, int]]:
    """Split an even-degree multigraph into simple cycles and direct each one.

    ``residual`` holds ``(arc index, end0, end1)``.  Walks always take the lowest
    unused arc index, so the orientation is deterministic.
    """
    inc: list[list[tuple[int, int]]] = [[] for _ in range(num_nodes)]
    for i, u, v in sorted(residual):
        inc[u].append((i, v))
        if u != v:
            inc[v].append((i, u))
    for v in range(num_nodes):
        deg = sum(2 if w == v else 1 for _, w in inc[v])
        if deg % 2:
            raise AssertionError(f"node {v} has odd residual degree {deg}")
    used: set[int] = set()
    ptr = [0] * num_nodes
    oriented: dict[int, tuple[int, int]] = {}

    def next_arc(u: int):
        lst = inc[u]
        while ptr[u] < len(lst) and lst[ptr[u]][0] in used:
            ptr[u] += 1
        return lst[ptr[u]] if ptr[u] < len(lst) else None

    for i, u0, _ in sorted(residual):
        if i in used:
            continue
        # walk from u0; whenever a node repeats, peel off the simple cycle
        path_nodes = [u0]
        path_arcs: list[tuple[int, int, int]] = []
        pos = {u0: 0}
        u = u0
        while True:
            step = next_arc(u)
            if step is None:
                break
            j, w = step
            used.add(j)
            path_arcs.append((j, u, w))
            if w in pos:
                k = pos[w]
                for arc, a, b in path_arcs[k:]:
                    oriented[arc] = (a, b)
                for x in path_nodes[k + 1:]:
                    del pos[x]
                del path_nodes[k + 1:]
                del path_arcs[k:]
                u = w
            else:
                pos[w] = len(path_nodes)
                path_nodes.append(w)
                u = w
            if not path_arcs and next_arc(u) is None:
                break
        assert not path_arcs
    return oriented


def coloring_from_orientation(H: AuxDigraph) -> GridColoring:
    """Invert the coloring -> digraph construction: an arc clockwise around s_i
    means K(s_j) = K(s_i) + 1.  Raises if the orientation admits no coloring."""
    if not check_eulerian(H):
        raise PreconditionError("orientation is not Eulerian")
    m, n = H.size
    colors: list[list[Optional[int]]] = [[None] * n for _ in range(m)]
    colors[0][0] = 0
    nbrs: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {}
    for i, e in enumerate(H.creases):
        a, b = e.cells()
        d = H.direction[i]
        # step from a to b: +1 if the arc runs clockwise around a
        step = 1 if clockwise_sign(e, a) == d else -1
        nbrs.setdefault(a, []).append((b, step))
        nbrs.setdefault(b, []).append((a, -step))
    queue = deque([(0, 0)])
    while queue:
        a = queue.popleft()
        for b, step in nbrs.get(a, ()):
            want = (colors[a[0]][a[1]] + step) % 3
            if colors[b[0]][b[1]] is None:
                colors[b[0]][b[1]] = want
                queue.append(b)
            elif colors[b[0]][b[1]] != want:
                raise PreconditionError(f"orientation is inconsistent around cell {b}")
    return GridColoring(H.size, tuple(tuple(row) for row in colors))


def complete_partial(S: PartialMVAssignment) -> MVAssignment | Infeasible:
    """A locally flat-foldable assignment agreeing with S, or :class:`Infeasible`."""
    H = build_partial_digraph(S)
    net = build_flow_network(H)
    flow = solve_circulation(net, H.size)
    if isinstance(flow, Infeasible):
        return flow
    direction = list(H.direction)
    for i, (u, v) in flow.items():
        direction[i] = 1 if H.ends[i] == (u, v) else -1
    residual = [(i, *H.ends[i]) for i in range(H.num_arcs) if direction[i] == 0]
    for i, (u, v) in veblen_orient(H.num_nodes, residual).items():
        direction[i] = 1 if H.ends[i][0] == u else -1
    K = coloring_from_orientation(H.with_directions(direction))
    out = coloring_to_mv(K)
    assert all(out[e] == v for e, v in S.values.items())
    return out
