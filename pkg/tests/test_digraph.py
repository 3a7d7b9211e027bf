import random
from itertools import product

import pytest
from hypothesis import given

from miura_forcing.coloring import coloring_to_mv, diagonal_coloring, standard_coloring
from miura_forcing.core import CreaseId, GridSize, all_creases
from miura_forcing.digraph import (
    NotFullyDirectedError,
    arc_ends,
    build_aux_digraph,
    build_partial_digraph,
    check_eulerian,
    corner_node,
    cycle_is_uniform,
    find_cycle,
    is_forcing,
    node_corner,
)
from miura_forcing.oracle import enumerate_colorings

from conftest import colorings, sizes


@given(sizes(1, 6))
def test_corner_numbering(size):
    m, n = size
    outer = (m - 1) * (n - 1)
    for v in range(outer):
        assert corner_node(size, *node_corner(size, v)) == v
    assert node_corner(size, outer) is None
    assert corner_node(size, 0, 0) == outer


def test_one_row_arcs_are_loops():
    size = GridSize(1, 4)
    assert all(len(set(arc_ends(size, e))) == 1 for e in all_creases(size))


@given(colorings(1, 6))
def test_aux_digraph_eulerian(K):
    H = build_aux_digraph(K)
    assert H.fully_directed and check_eulerian(H)


@given(colorings(1, 6))
def test_partial_digraph_of_total_matches(K):
    assert build_partial_digraph(coloring_to_mv(K)) == build_aux_digraph(K)


def _eulerian_orientations(size):
    H = build_partial_digraph(coloring_to_mv(standard_coloring(size)))
    out = []
    for dirs in product((1, -1), repeat=H.num_arcs):
        G = H.with_directions(dirs)
        if check_eulerian(G):
            out.append(dirs)
    return out


def test_2x2_orientation_bijection():
    size = GridSize(2, 2)
    from_colorings = {build_aux_digraph(K).direction for K in enumerate_colorings(size)}
    assert len(from_colorings) == 6
    assert from_colorings == set(_eulerian_orientations(size))


def test_eulerian_needs_full_direction():
    from miura_forcing.core import PartialMVAssignment

    H = build_partial_digraph(PartialMVAssignment(GridSize(2, 2), {}))
    with pytest.raises(NotFullyDirectedError):
        check_eulerian(H)
    with pytest.raises(NotFullyDirectedError):
        H.arcs()


def test_find_cycle_basic():
    assert find_cycle(3, [(0, 0, 1), (1, 1, 2)]) is None
    assert find_cycle(2, [(7, 1, 1)]) == [7]
    cyc = find_cycle(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)])
    assert sorted(cyc) == [0, 1, 2]


def test_find_cycle_deep_path():
    n = 50_000
    arcs = [(i, i, i + 1) for i in range(n - 1)]
    assert find_cycle(n, arcs) is None
    assert len(find_cycle(n, arcs + [(n, n - 1, 0)])) == n


def test_empty_set_not_forcing_1x2():
    K = standard_coloring(GridSize(1, 2))
    ok, witness = is_forcing(K, [])
    assert not ok and witness == [CreaseId("V", 0, 0)]


def test_all_creases_forcing():
    K = diagonal_coloring(GridSize(4, 5))
    assert is_forcing(K, all_creases(K.size)) == (True, None)


@given(colorings(2, 6))
def test_witness_is_uniform_cycle(K):
    rng = random.Random(len(K.colors))
    F = [e for e in all_creases(K.size) if rng.random() < 0.3]
    ok, witness = is_forcing(K, F)
    if not ok:
        assert not set(witness) & set(F)
        assert cycle_is_uniform(K, witness)
        H = build_aux_digraph(K)
        arcs = [H.arc(H.index_of(e)) for e in witness]
        for (_, v), (u, _) in zip(arcs, arcs[1:] + arcs[:1]):
            assert v == u
