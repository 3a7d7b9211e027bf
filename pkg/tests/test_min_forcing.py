import pytest
from hypothesis import given

from miura_forcing.coloring import coloring_to_mv, diagonal_coloring, standard_coloring
from miura_forcing.core import GridSize, PartialMVAssignment
from miura_forcing.digraph import NotFullyDirectedError, build_aux_digraph, build_partial_digraph, is_forcing
from miura_forcing.fas import branch_and_bound_fas, lp_fas
from miura_forcing.min_forcing import min_feedback_arc_set, min_forcing_set

from conftest import colorings


@given(colorings(1, 5))
def test_min_set_is_forcing(K):
    F = min_forcing_set(K)
    assert is_forcing(K, F)[0]
    # removing any crease breaks it
    for e in F:
        assert not is_forcing(K, F - {e})[0]


@given(colorings(2, 4))
def test_solvers_agree_on_size(K):
    assert len(min_forcing_set(K, lp_fas)) == len(min_forcing_set(K, branch_and_bound_fas))


def test_one_by_n_needs_everything():
    K = standard_coloring(GridSize(1, 5))
    assert len(min_forcing_set(K)) == 4


def test_1x1_empty():
    assert min_forcing_set(standard_coloring(GridSize(1, 1))) == frozenset()


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (4, 6), (6, 6)])
def test_known_sizes(m, n):
    size = GridSize(m, n)
    assert len(min_forcing_set(standard_coloring(size))) == (m * n + 1) // 2
    assert len(min_forcing_set(diagonal_coloring(size))) == m + n - 2


def test_fas_needs_direction():
    H = build_partial_digraph(PartialMVAssignment(GridSize(2, 2), {}))
    with pytest.raises(NotFullyDirectedError):
        min_feedback_arc_set(H)


def test_deterministic():
    K = diagonal_coloring(GridSize(5, 5))
    assert min_forcing_set(K) == min_forcing_set(K)
    H = build_aux_digraph(K)
    assert min_feedback_arc_set(H) == min_feedback_arc_set(H)
