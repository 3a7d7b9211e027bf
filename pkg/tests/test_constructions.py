import random

import pytest
from hypothesis import given

from miura_forcing.coloring import GridColoring, coloring_to_mv, standard_coloring
from miura_forcing.constructions import (
    DominoTiling,
    _block,
    canonical_tiling,
    domino_forcing_standard,
    flip,
    greedy_forcing,
    random_flips,
    tiling_forcing_set,
)
from miura_forcing.core import MOUNTAIN, CreaseId, GridSize, all_creases, crease_between
from miura_forcing.digraph import is_forcing
from miura_forcing.min_forcing import min_forcing_set
from miura_forcing.oracle import brute_is_forcing, enumerate_colorings

from conftest import colorings

SMALL = [(m, n) for m in range(1, 9) for n in range(1, 9)]


def _ceil_half(size):
    return (size.rows * size.cols + 1) // 2


@pytest.mark.parametrize("m,n", SMALL)
def test_domino_forcing(m, n):
    size = GridSize(m, n)
    F = domino_forcing_standard(size)
    assert is_forcing(standard_coloring(size), F)[0]
    if m > 1 and n > 1:
        assert len(F) == _ceil_half(size)


def test_domino_4x6_is_mountain_zigzags():
    size = GridSize(4, 6)
    F = domino_forcing_standard(size)
    assert F == {CreaseId("V", r, c) for r in range(4) for c in (0, 2, 4)}
    a = coloring_to_mv(standard_coloring(size))
    assert all(a[e] == MOUNTAIN for e in F)


def test_domino_4x5_uses_last_column_middle_toes():
    size = GridSize(4, 5)
    F = domino_forcing_standard(size)
    assert len(F) == 10
    last = {CreaseId("H", 0, 4), CreaseId("H", 2, 4)}
    assert last <= F
    a = coloring_to_mv(standard_coloring(size))
    assert all(a[e] == MOUNTAIN for e in last)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 5), (5, 5), (5, 7)])
def test_odd_odd_either_extra_crease(m, n):
    size = GridSize(m, n)
    K = standard_coloring(size)
    tiling = canonical_tiling(size)
    base = set(tiling.creases())
    assert len(base) == (m * n - 1) // 2
    for extra in (CreaseId("V", m - 1, n - 2), CreaseId("H", m - 2, n - 1)):
        assert is_forcing(K, base | {extra})[0]
    assert not is_forcing(K, base)[0]


@pytest.mark.parametrize("m,n", [(2, 2), (2, 4), (3, 4), (4, 4), (4, 6), (6, 6)])
def test_domino_is_minimum_for_even(m, n):
    size = GridSize(m, n)
    assert len(domino_forcing_standard(size)) == len(min_forcing_set(standard_coloring(size)))


def test_canonical_tiling_valid():
    for m, n in SMALL:
        assert canonical_tiling(GridSize(m, n)).is_valid()


def test_flip_rotates_block():
    t = canonical_tiling(GridSize(2, 2))
    f = flip(t, 0, 0)
    assert f.dominoes == (((0, 0), (1, 0)), ((0, 1), (1, 1)))
    assert flip(f, 0, 0) == t
    assert flip(canonical_tiling(GridSize(2, 4)), 0, 1) is None


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 7) for n in range(2, 7)])
def test_flipped_tilings_still_force(m, n):
    size = GridSize(m, n)
    K = standard_coloring(size)
    rng = random.Random(m * 10 + n)
    for _ in range(50):
        t = random_flips(canonical_tiling(size), rng.randint(1, 6), rng)
        assert t.is_valid()
        assert is_forcing(K, tiling_forcing_set(t))[0]


def test_invalid_tiling_detected():
    bad = DominoTiling(GridSize(2, 2), (((0, 0), (1, 1)), ((0, 1), (1, 0))))
    assert not bad.is_valid()


@given(colorings(2, 7))
def test_greedy_size_and_forcing(K):
    F = greedy_forcing(K)
    assert len(F) == _ceil_half(K.size)
    assert is_forcing(K, F)[0]


@pytest.mark.parametrize("size", [(3, 3), (3, 5), (2, 5)])
def test_greedy_exhaustive_vs_oracle(size):
    for K in enumerate_colorings(GridSize(*size)):
        assert brute_is_forcing(K, greedy_forcing(K))


def test_greedy_one_row():
    K = standard_coloring(GridSize(1, 4))
    assert greedy_forcing(K) == frozenset(all_creases(K.size))


@pytest.mark.parametrize("forced", ["top", "left", "bottom", "right"])
def test_block_rule_any_forced_pair(forced):
    """The block edge plus the forced pair's edge pins a 2x2 block, whichever side is forced."""
    pairs = {
        "top": ((0, 0), (0, 1), (1, 0), (1, 1)),
        "left": ((0, 0), (1, 0), (0, 1), (1, 1)),
        "bottom": ((1, 0), (1, 1), (0, 0), (0, 1)),
        "right": ((0, 1), (1, 1), (0, 0), (1, 0)),
    }
    a, b, a2, b2 = pairs[forced]
    for K in enumerate_colorings(GridSize(2, 2)):
        e = _block(K, a, b, a2, b2)
        assert brute_is_forcing(K, {crease_between(a, b), e})


def test_greedy_rejects_invalid():
    from miura_forcing.coloring import PreconditionError

    with pytest.raises(PreconditionError):
        greedy_forcing(GridColoring.from_rows([[0, 0], [1, 2]]))
