import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from miura_forcing.coloring import diagonal_coloring, edge_weight, is_valid_coloring, standard_coloring
from miura_forcing.core import CreaseId, GridSize, all_creases
from miura_forcing.digraph import build_aux_digraph, cycle_is_uniform, is_forcing
from miura_forcing.oracle import (
    SizeGuardError,
    brute_is_forcing,
    brute_min_forcing,
    curve_sides,
    difference_graph,
    enumerate_colorings,
    flip_across_curve,
)

COLS_3x4 = list(enumerate_colorings(GridSize(3, 4)))


def test_enumeration_small():
    assert [K.colors for K in enumerate_colorings(GridSize(1, 2))] == [((0, 1),), ((0, 2),)]
    assert sum(1 for _ in enumerate_colorings(GridSize(2, 2))) == 6
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_colorings(GridSize(1, n))) == 2 ** (n - 1)


def test_enumeration_order_and_validity():
    cols = [K.colors for K in enumerate_colorings(GridSize(3, 3))]
    assert cols == sorted(cols) and len(set(cols)) == len(cols)
    assert all(is_valid_coloring(K) for K in enumerate_colorings(GridSize(3, 3)))


def test_size_guards():
    with pytest.raises(SizeGuardError):
        next(enumerate_colorings(GridSize(5, 5)))
    with pytest.raises(SizeGuardError):
        brute_min_forcing(standard_coloring(GridSize(2, 5)))
    assert len(brute_min_forcing(standard_coloring(GridSize(2, 5)), allow_large=True)) == 5


def test_brute_forcing_trivial_cases():
    K = diagonal_coloring(GridSize(2, 3))
    assert brute_is_forcing(K, all_creases(K.size))
    assert not brute_is_forcing(K, [])
    std = standard_coloring(GridSize(2, 3))
    from miura_forcing.constructions import domino_forcing_standard

    assert brute_is_forcing(std, domino_forcing_standard(std.size))


def test_brute_min_sizes():
    assert len(brute_min_forcing(standard_coloring(GridSize(1, 2)))) == 1
    for K in enumerate_colorings(GridSize(2, 2)):
        assert len(brute_min_forcing(K)) == 2
    assert len(brute_min_forcing(diagonal_coloring(GridSize(2, 3)))) == 3


def test_identical_pair_has_no_curves():
    K = diagonal_coloring(GridSize(3, 4))
    D = difference_graph(K, K)
    assert D.curves == () and D.hubs == ()
    assert {x for row in D.polyomino for x in row} == {0}


def test_flip_along_diagonal_curve():
    K1 = diagonal_coloring(GridSize(4, 4))
    # the anti-diagonal staircase separating cells with r + c <= 1 from the rest
    curve = [CreaseId("V", 0, 1), CreaseId("H", 0, 1), CreaseId("V", 1, 0), CreaseId("H", 1, 0)]
    near, far = curve_sides(K1.size, curve)
    assert near == {(0, 0), (0, 1), (1, 0)}
    K2 = flip_across_curve(K1, curve)
    assert is_valid_coloring(K2)
    D = difference_graph(K1, K2)
    assert len(D.curves) == 1 and set(D.curves[0]) == set(curve)


def test_size_mismatch():
    with pytest.raises(ValueError):
        difference_graph(diagonal_coloring(GridSize(2, 2)), diagonal_coloring(GridSize(2, 3)))


@given(st.integers(0, 10**6))
def test_curves_uniform_and_directed(seed):
    rng = random.Random(seed)
    K1, K2 = rng.sample(COLS_3x4, 2)
    D = difference_graph(K1, K2)
    assert D.curves
    H = build_aux_digraph(K1)
    used = set()
    for curve in D.curves:
        assert not used & set(curve)
        used |= set(curve)
        assert cycle_is_uniform(K1, list(curve)) and cycle_is_uniform(K2, list(curve))
        assert len({edge_weight(K1, e) for e in curve}) <= 2
        assert all(edge_weight(K1, e) != edge_weight(K2, e) for e in curve)
        arcs = [H.arc(H.index_of(e)) for e in curve]
        for (_, v), (u, _) in zip(arcs, arcs[1:] + arcs[:1]):
            assert v == u
    # curves cover exactly the creases on which the two colorings disagree
    assert used == {e for e in all_creases(K1.size) if edge_weight(K1, e) != edge_weight(K2, e)}


@given(st.integers(0, 10**6))
def test_hub_diagonal_rule(seed):
    rng = random.Random(seed)
    K1, K2 = rng.sample(COLS_3x4, 2)
    D = difference_graph(K1, K2)
    t = D.types
    for i, j in D.hubs:
        nw, ne, sw, se = t[i - 1][j - 1], t[i - 1][j], t[i][j - 1], t[i][j]
        assert nw == se or ne == sw


@given(st.integers(0, 10**6))
def test_flipping_any_curve_stays_valid(seed):
    rng = random.Random(seed)
    K1, K2 = rng.sample(COLS_3x4, 2)
    for curve in difference_graph(K1, K2).curves:
        K3 = flip_across_curve(K1, curve)
        assert is_valid_coloring(K3) and K3 != K1


@pytest.mark.parametrize("seed", range(8))
def test_forcing_sets_cross_every_curve(seed):
    rng = random.Random(seed)
    K = rng.choice(COLS_3x4)
    F = brute_min_forcing(K, allow_large=True)
    for K2 in COLS_3x4:
        if K2 == K:
            continue
        for curve in difference_graph(K, K2).curves:
            assert F & set(curve)


@pytest.mark.parametrize("seed", range(8))
def test_one_edge_per_curve_rules_out_other(seed):
    rng = random.Random(seed)
    K1, K2 = rng.sample(COLS_3x4, 2)
    F = {rng.choice(curve) for curve in difference_graph(K1, K2).curves}
    assert any(edge_weight(K1, e) != edge_weight(K2, e) for e in F)


def test_brute_and_fast_agree_2x2_subsets():
    from itertools import combinations

    creases = all_creases(GridSize(2, 2))
    for K in enumerate_colorings(GridSize(2, 2)):
        for k in range(5):
            for F in combinations(creases, k):
                assert is_forcing(K, F)[0] == brute_is_forcing(K, F)
