"""Sliding-window demodulation."""

import pytest
from hypothesis import given, strategies as st

from lrmgray.lrm import (
    LrmParams,
    demodulate,
    induced_permutation,
    is_realizable_word,
    word_from_charges,
)
from lrmgray.words import Word


def test_induced_permutation_ranks_largest_first():
    assert induced_permutation((5, 9, 1)) == (2, 1, 3)
    assert induced_permutation((3, 1)) == (1, 2)
    assert induced_permutation((1, 3)) == (2, 1)


def test_induced_permutation_rejects_ties():
    with pytest.raises(ValueError):
        induced_permutation((4, 4))
    with pytest.raises(ValueError):
        induced_permutation(())


def test_params_validation():
    LrmParams(1, 2, 6)
    LrmParams(2, 4, 6)
    with pytest.raises(ValueError):
        LrmParams(4, 2, 6)  # s > t
    with pytest.raises(ValueError):
        LrmParams(4, 4, 6)  # s does not divide n
    with pytest.raises(ValueError):
        LrmParams(0, 2, 6)


def test_demodulate_window_count_and_wrap():
    params = LrmParams(1, 2, 4)
    perms = demodulate((0, 3, 1, 2), params)
    assert len(perms) == 4
    # last window wraps: (values[3], values[0]) = (2, 0)
    assert perms[3] == (1, 2)
    with pytest.raises(ValueError):
        demodulate((0, 3, 1), params)


def test_demodulate_wider_windows_step_s():
    params = LrmParams(2, 3, 6)
    perms = demodulate((0, 5, 2, 4, 1, 3), params)
    assert len(perms) == 3


@st.composite
def distinct_adjacent_levels(draw):
    n = draw(st.integers(2, 10))
    levels = [0]
    for _ in range(n - 1):
        step = draw(st.integers(-5, 5).filter(lambda x: x != 0))
        levels.append(levels[-1] + step)
    if levels[-1] == levels[0]:
        levels[-1] += 1
    return tuple(levels)


@given(distinct_adjacent_levels())
def test_word_from_charges_matches_pairwise_demodulation(levels):
    """Route one: direct comparisons; route two: window permutations."""
    n = len(levels)
    v = word_from_charges(levels)
    perms = demodulate(levels, LrmParams(1, 2, n))
    assert all(v.bit(p) == (1 if perms[p] == (1, 2) else 0) for p in range(n))


def test_word_from_charges_rejects_adjacent_ties():
    with pytest.raises(ValueError):
        word_from_charges((0, 0, 1))
    with pytest.raises(ValueError):
        word_from_charges((0, 1, 2, 0))  # the wrap pair (index 3, 0) ties


def test_realizable_words_are_the_ambient_ones():
    assert is_realizable_word(Word.parse("10100"))
    assert not is_realizable_word(Word(5, 0))
    assert not is_realizable_word(Word(5, 31))
