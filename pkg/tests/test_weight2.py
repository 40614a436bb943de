"""Weight-2 snake construction over the row/column grid."""

from fractions import Fraction
from math import comb

import pytest

from lrmgray.weight2 import (
    RowCol,
    build_weight2,
    cyclic_size_bound,
    graph_neighbors,
    rowcol_to_word,
    word_to_rowcol,
)
from lrmgray.words import Word, transition_index, validate_code

from conftest import OPTIMAL_N5_W2_TRANSITIONS, OPTIMAL_N5_W2_WORDS


def _all_cells(n):
    return [RowCol(k, l) for k in range(1, (n - 1) // 2 + 1) for l in range(n)]


def test_rowcol_word_round_trip():
    for n in (5, 7, 9, 11, 13):
        for rc in _all_cells(n):
            word = rowcol_to_word(rc, n)
            assert word.weight == 2
            assert word_to_rowcol(word) == rc


def test_rowcol_covers_every_weight2_word():
    for n in (5, 7, 9):
        words = {str(rowcol_to_word(rc, n)) for rc in _all_cells(n)}
        assert len(words) == comb(n, 2)


def test_rowcol_rejects_out_of_grid():
    with pytest.raises(ValueError):
        rowcol_to_word(RowCol(3, 0), 5)  # rows stop at (n-1)/2
    with pytest.raises(ValueError):
        rowcol_to_word(RowCol(0, 0), 5)
    with pytest.raises(ValueError):
        word_to_rowcol(Word.parse("11100"))


def test_grid_neighbors_are_transition_adjacent():
    """Every listed grid edge is one forward window rewrite away."""
    for n in (5, 7, 9, 11):
        for rc in _all_cells(n):
            v = rowcol_to_word(rc, n)
            for other in graph_neighbors(rc, n):
                u = rowcol_to_word(other, n)
                assert transition_index(v, u) is not None, (n, rc, other)


def test_neighbor_degrees():
    # row 1 cells see one neighbor, interior rows two, the top row two
    n = 9
    assert len(graph_neighbors(RowCol(1, 0), n)) == 1
    assert len(graph_neighbors(RowCol(2, 3), n)) == 2
    assert len(graph_neighbors(RowCol(4, 5), n)) == 2


def test_build_matches_the_pinned_cycle():
    code = build_weight2(5)
    assert tuple(str(w) for w in code.words) == OPTIMAL_N5_W2_WORDS
    assert code.transitions == OPTIMAL_N5_W2_TRANSITIONS
    assert code.cyclic


@pytest.mark.parametrize("n", (3, 5, 7, 9, 11, 13, 15))
def test_build_covers_all_pairs(n):
    code = build_weight2(n)
    assert code.size == comb(n, 2)
    report = validate_code(code, expect_constant_weight=True, expect_cyclic=code.cyclic)
    assert report.ok, report.failures
    assert code.cyclic == (n in (3, 5))


def test_build_rejects_even_or_tiny_n():
    with pytest.raises(ValueError):
        build_weight2(6)
    with pytest.raises(ValueError):
        build_weight2(1)


def test_open_snake_cannot_close():
    """For n >= 7 no single rewrite returns the last word to the first."""
    code = build_weight2(7)
    assert transition_index(code.words[-1], code.words[0]) is None


def test_cyclic_size_bound_pinned():
    seven = cyclic_size_bound(7)
    assert (seven.min_uncovered, seven.max_cyclic_size) == (1, 20)
    assert seven.efficiency_bound == Fraction(20, 21)
    eleven = cyclic_size_bound(11)
    assert (eleven.min_uncovered, eleven.max_cyclic_size) == (6, 49)


def test_cyclic_size_bound_domain():
    with pytest.raises(ValueError):
        cyclic_size_bound(5)
    with pytest.raises(ValueError):
        cyclic_size_bound(8)
