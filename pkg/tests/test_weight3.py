"""Weight-3 gap-vector tour and the single-track lift."""

from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from lrmgray.oracle import reverify
from lrmgray.weight3 import (
    Config,
    Move,
    admissible_residue_class,
    apply_move,
    build_weight3,
    canonical_configurations,
    canonicalize,
    config_cycle,
    config_cycle_length,
    configuration,
    is_admissible,
    is_canonical,
    lift,
    lift_rank,
    realize_path,
)
from lrmgray.words import (
    Word,
    apply_transition,
    cyclic_shift,
    efficiency,
    is_single_track,
    rank,
    validate_code,
)


@st.composite
def weight3_words(draw, min_n: int = 7, max_n: int = 24):
    n = draw(st.integers(min_n, max_n))
    picks = draw(st.sets(st.integers(0, n - 1), min_size=3, max_size=3))
    return Word.from_positions(n, sorted(picks))


def test_configuration_gaps_sum_to_n():
    v = Word.parse("101000100")
    cfg = configuration(v)
    assert cfg == Config(2, 4, 3)
    assert sum(cfg) == 9


def test_configuration_needs_weight_3():
    with pytest.raises(ValueError):
        configuration(Word.parse("110000"))


@given(weight3_words())
def test_canonicalize_picks_the_unique_rotation(v):
    cfg = configuration(v)
    rotations = {cfg, Config(cfg.d2, cfg.d0, cfg.d1), Config(cfg.d1, cfg.d2, cfg.d0)}
    canonical = {rot for rot in rotations if is_canonical(rot, v.n)}
    if len(canonical) == 1:
        assert canonicalize(v) == canonical.pop()
    else:
        with pytest.raises(ValueError):
            canonicalize(v)


def test_equally_spaced_words_have_no_canonical_form():
    with pytest.raises(ValueError):
        canonicalize(Word.parse("100100100"))


def test_canonical_configurations_count():
    for n in range(4, 40):
        expected = ((n - 1) * (n - 2) - (2 if n % 3 == 0 else 0)) // 6
        assert len(canonical_configurations(n)) == expected, n


def test_apply_move_shifts_the_gap_vector():
    v = Word.parse("110100000")  # gaps (1, 2, 6) from position 0
    assert canonicalize(v) == Config(1, 2, 6)
    assert canonicalize(apply_move(v, Move.PUSH_LAST)) == Config(1, 3, 5)
    assert canonicalize(apply_move(v, Move.PUSH_MIDDLE)) == Config(2, 1, 6)


def test_apply_move_rejects_leaving_the_canonical_region():
    v = Word.parse("110100000")
    # PUSH_FIRST would need d0 = 0
    with pytest.raises(ValueError):
        apply_move(v, Move.PUSH_FIRST)


@pytest.mark.parametrize("n", range(9, 41))
def test_tour_is_closed_distinct_and_canonical(n):
    path = config_cycle(n)
    assert path.closed
    assert len(set(path.steps)) == len(path.steps)
    assert all(is_canonical(cfg, n) for cfg in path.steps)
    assert len(path.steps) == config_cycle_length(n)
    deltas = {move.delta for move in Move}
    for i, cfg in enumerate(path.steps):
        nxt = path.steps[(i + 1) % len(path.steps)]
        delta = (nxt.d0 - cfg.d0, nxt.d1 - cfg.d1, nxt.d2 - cfg.d2)
        assert delta in deltas, (n, i, delta)


def test_tour_length_closed_form_pinned():
    assert config_cycle_length(9) == 9
    assert config_cycle_length(10) == 12
    assert config_cycle_length(11) == 15
    assert config_cycle_length(12) == 15
    assert config_cycle_length(13) == 18
    assert config_cycle_length(103) == 1653


def test_tour_domain():
    with pytest.raises(ValueError):
        config_cycle(8)
    with pytest.raises(ValueError):
        config_cycle_length(8)


@pytest.mark.parametrize("n", (9, 10, 11, 12, 13, 17, 20))
def test_realized_path_ends_one_third_rotated(n):
    path = realize_path(n)
    third = config_cycle_length(n) // 3
    assert path.shift == third
    v = path.words[0]
    for j in path.transitions:
        v = apply_transition(v, j)
    assert v == cyclic_shift(path.words[0], third)
    # every word sits on its own necklace: distinct canonical gap vectors
    assert len({canonicalize(w) for w in path.words}) == len(path.words)


def test_realize_path_rejects_foreign_seed():
    with pytest.raises(ValueError):
        realize_path(11, seed=Word.parse("10101000000"))


def test_lift_n11_is_optimal_single_track():
    path = realize_path(11)
    code = lift(path.words, path.shift)
    assert code.size == 165 == comb(11, 3)
    assert validate_code(code, expect_constant_weight=True, expect_cyclic=True).ok
    assert is_single_track(code)
    assert efficiency(code) == 1
    assert reverify(code).ok


def test_lift_rejects_bad_shift():
    path = realize_path(10)
    with pytest.raises(ValueError, match="gcd"):
        lift(path.words, path.shift)


def test_lift_rejects_duplicate_necklaces():
    path = realize_path(11)
    words = path.words[:-1] + (cyclic_shift(path.words[0], 5),)
    with pytest.raises(ValueError):
        lift(words, path.shift)


def test_lift_rank_matches_materialized_rank():
    path = realize_path(13)
    code = lift(path.words, path.shift)
    for i in (0, 1, 77, code.size - 1):
        v = code.words[i]
        assert lift_rank(path.words, path.shift, v) == i == rank(code, v)
    # gaps (1, 4, 8) sit on a necklace the tour never visits at n=13
    skipped = Word.from_positions(13, (0, 1, 5))
    assert skipped not in set(code.words)
    with pytest.raises(KeyError):
        lift_rank(path.words, path.shift, skipped)


def test_build_weight3_errors_name_the_gcd():
    with pytest.raises(ValueError, match=r"gcd\(9, 3\)"):
        build_weight3(9)
    with pytest.raises(ValueError, match=r"gcd\(10, 4\)"):
        build_weight3(10)
    with pytest.raises(ValueError):
        build_weight3(8)


def test_admissibility_matches_direct_gcd():
    for n in range(9, 201):
        direct = gcd(n, config_cycle_length(n) // 3) == 1
        assert is_admissible(n) == direct, n
    assert not is_admissible(4)


def test_admissible_residue_classes():
    assert admissible_residue_class(25) == "7, 11 (mod 18)"  # 25 = 18 + 7
    assert admissible_residue_class(13) == "13, 31, 49, 67 (mod 90)"
    assert admissible_residue_class(27) is None  # admissible but in no family
    assert is_admissible(27)
    assert config_cycle_length(27) // 3 == 34


@pytest.mark.parametrize("n", (11, 12, 13, 15, 17))
def test_build_weight3_validates(n):
    code = build_weight3(n)
    assert code.size == n * config_cycle_length(n)
    assert validate_code(code, expect_constant_weight=True, expect_cyclic=True).ok
    assert is_single_track(code)
