"""Color counting: closed form against brute force."""

from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from lrmgray.colors import (
    REASON_COLOR_BALANCE,
    REASON_DIVISIBILITY,
    REASON_PRIME_WEIGHT,
    color,
    color_count_formula,
    color_counts_bruteforce,
    color_imbalance,
    cyclic_size_condition,
    is_prime,
    moebius,
    optimal_cyclic_feasible,
    totient,
)
from lrmgray.words import Word, constant_weight_successors


def test_totient_small_values():
    assert [totient(x) for x in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_moebius_small_values():
    assert [moebius(x) for x in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_primality():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    assert {x for x in range(2, 50) if is_prime(x)} == primes
    assert not is_prime(1)


def test_color_examples():
    assert color(Word.parse("11000")) == 1
    assert color(Word.parse("01001")) == 5 % 5


@given(st.integers(2, 12), st.data())
def test_color_advances_by_one_per_move(n, data):
    mask = data.draw(st.integers(1, (1 << n) - 2))
    v = Word(n, mask)
    for _, u in constant_weight_successors(v):
        assert (color(u) - color(v)) % n == 1


@pytest.mark.parametrize("n", range(2, 13))
def test_formula_matches_bruteforce(n):
    for w in range(1, n):
        brute = color_counts_bruteforce(n, w)
        assert tuple(color_count_formula(n, w, a) for a in range(n)) == brute.counts


def test_formula_totals_to_binomial():
    for n in range(2, 15):
        for w in range(1, n):
            assert sum(color_count_formula(n, w, a) for a in range(n)) == comb(n, w)


def test_imbalance_agrees_with_counts():
    for n in range(2, 15):
        for w in range(1, n):
            counts = color_counts_bruteforce(n, w).counts
            assert color_imbalance(n, w) == counts[0] - counts[1]


def test_imbalance_pinned_value():
    assert color_imbalance(12, 6) == -2


def test_uniform_histogram_when_coprime():
    for n in range(2, 15):
        for w in range(1, n):
            if gcd(n, w) == 1:
                assert color_counts_bruteforce(n, w).uniform


def test_cyclic_size_condition():
    assert cyclic_size_condition(5, 10)
    assert not cyclic_size_condition(6, 15)
    with pytest.raises(ValueError):
        cyclic_size_condition(5, 0)


def test_feasibility_collects_every_obstruction():
    v = optimal_cyclic_feasible(6, 2)
    assert v.status == "ruled_out"
    assert set(v.reason_tags) == {
        REASON_DIVISIBILITY,
        REASON_PRIME_WEIGHT,
        REASON_COLOR_BALANCE,
    }


def test_feasibility_pinned_verdicts():
    twelve_six = optimal_cyclic_feasible(12, 6)
    assert twelve_six.status == "ruled_out"
    assert twelve_six.reason_tags == (REASON_COLOR_BALANCE,)

    four_two = optimal_cyclic_feasible(4, 2)
    assert four_two.status == "ruled_out"
    assert REASON_PRIME_WEIGHT in four_two.reason_tags

    assert optimal_cyclic_feasible(5, 2).status == "possible"
    assert optimal_cyclic_feasible(11, 3).status == "possible"


def test_parameter_validation():
    with pytest.raises(ValueError):
        color_count_formula(5, 0, 0)
    with pytest.raises(ValueError):
        color_counts_bruteforce(5, 5)
    with pytest.raises(ValueError):
        optimal_cyclic_feasible(1, 1)
