import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from miura_forcing.fas import (
    branch_and_bound_fas,
    brute_force_fas,
    is_acyclic,
    lp_fas,
    strongly_connected_components,
)


@st.composite
def digraphs(draw, max_nodes=6, max_arcs=10):
    n = draw(st.integers(1, max_nodes))
    arcs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_arcs))
    return n, arcs


def test_scc_labels():
    comp = strongly_connected_components(5, [(0, 1), (1, 0), (1, 2), (3, 4), (4, 3)])
    assert comp[0] == comp[1] != comp[2]
    assert comp[3] == comp[4] != comp[0]


def test_acyclic():
    assert is_acyclic(3, [(0, 1), (1, 2), (0, 2)])
    assert not is_acyclic(3, [(0, 1), (1, 0)])
    assert not is_acyclic(1, [(0, 0)])


@pytest.mark.parametrize("solver", [lp_fas, branch_and_bound_fas])
@given(g=digraphs())
def test_matches_brute_force(solver, g):
    n, arcs = g
    got = solver(n, arcs)
    assert is_acyclic(n, [a for i, a in enumerate(arcs) if i not in got])
    assert len(got) == len(brute_force_fas(n, arcs))


def test_parallel_arcs_and_loops():
    arcs = [(0, 1), (1, 0), (1, 0), (2, 2)]
    assert lp_fas(3, arcs) == frozenset({0, 3})


def test_bb_is_lexicographically_first():
    # two disjoint 2-cycles; each can be broken by either of its arcs
    arcs = [(0, 1), (1, 0), (2, 3), (3, 2)]
    assert branch_and_bound_fas(4, arcs) == frozenset({0, 2})


def test_tournament_exact():
    rng = random.Random(3)
    n = 6
    arcs = [(i, j) if rng.random() < 0.5 else (j, i) for i in range(n) for j in range(i + 1, n)]
    k = len(brute_force_fas(n, arcs))
    assert len(lp_fas(n, arcs)) == k == len(branch_and_bound_fas(n, arcs))
