"""Exact minimum forcing sets via minimum feedback arc sets of the auxiliary digraph."""
from __future__ import annotations

from .coloring import GridColoring, require_valid
from .core import CreaseId
from .digraph import AuxDigraph, NotFullyDirectedError, build_aux_digraph
from .fas import DEFAULT_SOLVER, Solver

ForcingSet = frozenset  # of CreaseId


def min_feedback_arc_set(H: AuxDigraph, solver: Solver = DEFAULT_SOLVER) -> frozenset[int]:
    """Indices of a minimum set of arcs whose removal leaves H acyclic."""
    if not H.fully_directed:
        raise NotFullyDirectedError("feedback arc sets need a fully directed digraph")
    return solver(H.num_nodes, H.arcs())


def min_forcing_set(K: GridColoring, solver: Solver = DEFAULT_SOLVER) -> frozenset[CreaseId]:
    """A minimum forcing set for K: the creases crossing a minimum feedback arc set."""
    require_valid(K)
    H = build_aux_digraph(K)
    return frozenset(H.creases[i] for i in min_feedback_arc_set(H, solver))
