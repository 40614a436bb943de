"""Cyclic single-track weight-3 codes built by lifting a necklace path.

A weight-3 word with full period is determined, up to rotation, by its
cyclic gap vector (d0, d1, d2): the distances between consecutive 1s.
Exactly one rotation of the gap vector satisfies d1 <= floor(n/3) < d2,
which makes that rotation a canonical name for the word's necklace.
Three constant-weight transitions act on gap vectors:

* push the middle 1:  (d0, d1, d2) -> (d0+1, d1-1, d2)
* push the last 1:    (d0, d1, d2) -> (d0, d1+1, d2-1)
* push the first 1:   (d0, d1, d2) -> (d0-1, d1, d2+1)

``config_cycle`` drives a closed tour through distinct canonical gap
vectors using only these moves; ``realize_path`` replays the tour on
actual words starting from 1110...0.  Because a closed tour must use the
three move kinds equally often, the replay ends at the start word rotated
by one third of the tour length.  When that rotation amount is coprime to
n, concatenating n progressively rotated copies of the replayed path
yields a cyclic code covering n distinct words per necklace, and its bit
columns are all rotations of each other (a single-track code).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import NamedTuple, Sequence

from .words import (
    GrayCode,
    Word,
    apply_transition,
    cyclic_shift,
    necklace_canonical_rep,
    transition_index,
)

__all__ = [
    "Config",
    "Move",
    "ConfigPath",
    "NecklacePath",
    "configuration",
    "is_canonical",
    "canonicalize",
    "canonical_configurations",
    "apply_move",
    "config_cycle",
    "config_cycle_length",
    "realize_path",
    "lift",
    "lift_rank",
    "build_weight3",
    "is_admissible",
    "admissible_residue_class",
]


class Config(NamedTuple):
    """Cyclic gaps between consecutive 1s of a weight-3 word; sums to n."""

    d0: int
    d1: int
    d2: int


class Move(Enum):
    """The three constant-weight transitions, named by which 1 they slide."""

    PUSH_FIRST = (-1, 0, 1)
    PUSH_MIDDLE = (1, -1, 0)
    PUSH_LAST = (0, 1, -1)

    @property
    def delta(self) -> tuple[int, int, int]:
        return self.value


_DELTA_TO_MOVE = {move.value: move for move in Move}


def configuration(v: Word) -> Config:
    """Gap vector anchored at the lowest-index 1."""
    if v.weight != 3:
        raise ValueError(f"word {v} does not have weight 3")
    a, b, c = v.ones
    return Config((b - a) % v.n, (c - b) % v.n, (a - c) % v.n)


def is_canonical(cfg: Config, n: int) -> bool:
    d0, d1, d2 = cfg
    if d0 < 1 or d1 < 1 or d2 < 1 or d0 + d1 + d2 != n:
        return False
    return d1 <= n // 3 < d2


def canonicalize(v: Word) -> Config:
    """The unique rotation of the gap vector with d1 <= floor(n/3) < d2.

    Exists and is unique exactly for full-period words; the equally spaced
    words on 3 | n (gap vector (n/3, n/3, n/3)) have no canonical form.
    """
    cfg = configuration(v)
    rotations = (
        cfg,
        Config(cfg.d2, cfg.d0, cfg.d1),
        Config(cfg.d1, cfg.d2, cfg.d0),
    )
    matches = [rot for rot in rotations if is_canonical(rot, v.n)]
    if len(matches) != 1:
        raise ValueError(f"word {v} has no canonical gap vector (not full-period?)")
    return matches[0]


def canonical_configurations(n: int) -> list[Config]:
    """All canonical gap vectors for length n, one per full-period necklace."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    m = n // 3
    out = []
    for d1 in range(1, m + 1):
        for d0 in range(1, n - m - d1):
            out.append(Config(d0, d1, n - d0 - d1))
    return out


def apply_move(v: Word, move: Move) -> Word:
    """Slide one 1 of v so its canonical gap vector changes by move.delta.

    The move is invalid when the target vector is not canonical (a gap
    would close to zero, or the d1/d2 constraints would break).
    """
    cfg = canonicalize(v)
    target = Config(*(a + b for a, b in zip(cfg, move.delta)))
    if not is_canonical(target, v.n):
        raise ValueError(f"move {move.name} from {tuple(cfg)} leaves the canonical region")
    anchor = _anchor(v, cfg)
    if move is Move.PUSH_FIRST:
        j = anchor
    elif move is Move.PUSH_MIDDLE:
        j = (anchor + cfg.d0) % v.n
    else:
        j = (anchor + cfg.d0 + cfg.d1) % v.n
    return apply_transition(v, j)


def _anchor(v: Word, cfg: Config) -> int:
    """The 1 position from which the gaps read exactly as cfg."""
    a, b, c = v.ones
    n = v.n
    for first, second, third in ((a, b, c), (b, c, a), (c, a, b)):
        if ((second - first) % n, (third - second) % n) == (cfg.d0, cfg.d1):
            return first
    raise AssertionError(f"gap vector {cfg} does not fit word {v}")


@dataclass(frozen=True)
class ConfigPath:
    n: int
    steps: tuple[Config, ...]
    closed: bool = True


def _next_config(cfg: Config, n: int) -> Move:
    """Successor rule for the canonical-region tour.

    Picture the canonical region as columns indexed by d1 (1 .. floor(n/3))
    with d0 growing downward.  The tour runs along the top row to the
    highest column divisible by 3, then repeats: zigzag down through a
    column pair (d1 = 3k+2, 3k+3), slide along the bottom boundary
    (d2 = floor(n/3) + 1) into column 3k+1, climb it, and step into the
    next pair.  The climb of column 1 ends the tour back at (1, 1, n-2).
    """
    d0, d1, d2 = cfg
    m = n // 3
    top = 3 * (m // 3)
    if d0 == 1 and d1 < top:
        return Move.PUSH_LAST
    if d1 % 3 == 0:
        return Move.PUSH_MIDDLE
    if d1 % 3 == 2:
        return Move.PUSH_LAST if d2 > m + 1 else Move.PUSH_MIDDLE
    # d1 % 3 == 1: climbing a column
    if d0 > 2:
        return Move.PUSH_FIRST
    if d1 > 1:
        return Move.PUSH_MIDDLE  # top of a climb: enter the next column pair
    return Move.PUSH_FIRST  # (2, 1, n-3): final step closes the tour


def config_cycle(n: int) -> ConfigPath:
    """The closed tour of canonical gap vectors starting at (1, 1, n-2)."""
    if n < 9:
        raise ValueError(f"need n >= 9, got {n}")
    start = Config(1, 1, n - 2)
    steps: list[Config] = []
    seen: set[Config] = set()
    cfg = start
    for _ in range(n * n):
        if cfg in seen:
            raise AssertionError(f"tour for n={n} revisits {tuple(cfg)}")
        if not is_canonical(cfg, n):
            raise AssertionError(f"tour for n={n} left the canonical region at {tuple(cfg)}")
        steps.append(cfg)
        seen.add(cfg)
        move = _next_config(cfg, n)
        cfg = Config(*(a + b for a, b in zip(cfg, move.delta)))
        if cfg == start:
            return ConfigPath(n, tuple(steps), closed=True)
    raise AssertionError(f"tour for n={n} did not close")


# (coefficient of n, constant) in length = (n*n - b*n + c) / 6, keyed by n mod 9
_LENGTH_COEFFS = {
    0: (5, 18),
    1: (5, 22),
    2: (5, 24),
    3: (7, 30),
    4: (7, 30),
    5: (7, 28),
    6: (9, 36),
    7: (9, 32),
    8: (9, 26),
}


def config_cycle_length(n: int) -> int:
    """Closed form for len(config_cycle(n).steps); always a multiple of 3."""
    if n < 9:
        raise ValueError(f"need n >= 9, got {n}")
    b, c = _LENGTH_COEFFS[n % 9]
    value = n * n - b * n + c
    if value % 6:
        raise ArithmeticError(f"length formula not integral at n={n}")
    return value // 6


@dataclass(frozen=True)
class NecklacePath:
    """A realized tour: one word per necklace, transitions, and the end shift."""

    n: int
    words: tuple[Word, ...]
    transitions: tuple[int, ...]
    shift: int


def realize_path(n: int, seed: Word | None = None) -> NecklacePath:
    """Replay the canonical tour on actual words.

    The seed must have gap vector (1, 1, n-2), i.e. be a rotation of
    1110...0.  The returned transitions include the closing step, which
    lands on the seed rotated right by a third of the tour length.
    """
    path = config_cycle(n)
    if seed is None:
        seed = Word.from_positions(n, (0, 1, 2))
    if seed.n != n:
        raise ValueError(f"seed length {seed.n} != n {n}")
    if canonicalize(seed) != Config(1, 1, n - 2):
        raise ValueError(f"seed {seed} does not have gap vector (1, 1, {n - 2})")
    ones = set(seed.ones)
    anchor = next(p for p in seed.ones if (p + 1) % n in ones and (p + 2) % n in ones)

    words: list[Word] = []
    transitions: list[int] = []
    v = seed
    steps = path.steps
    for i, cfg in enumerate(steps):
        nxt = steps[(i + 1) % len(steps)]
        move = _DELTA_TO_MOVE[(nxt.d0 - cfg.d0, nxt.d1 - cfg.d1, nxt.d2 - cfg.d2)]
        if move is Move.PUSH_FIRST:
            j = anchor
            anchor = (anchor + 1) % n
        elif move is Move.PUSH_MIDDLE:
            j = (anchor + cfg.d0) % n
        else:
            j = (anchor + cfg.d0 + cfg.d1) % n
        words.append(v)
        transitions.append(j)
        v = apply_transition(v, j)

    shift = len(steps) // 3
    if v != cyclic_shift(seed, shift):
        raise AssertionError(f"tour replay for n={n} did not end at the expected rotation")
    return NecklacePath(n, tuple(words), tuple(transitions), shift)


def lift(words: Sequence[Word], shift: int) -> GrayCode:
    """Concatenate n rotated copies of a necklace path into a cyclic code.

    Requirements: the words are representatives of pairwise distinct
    full-period necklaces, consecutive words differ by one transition, the
    first word rotated by ``shift`` is one transition past the last word,
    and gcd(shift, n) = 1 so the n copies are pairwise disjoint.
    """
    if not words:
        raise ValueError("empty necklace path")
    n = words[0].n
    if any(word.n != n for word in words):
        raise ValueError("words have mixed lengths")
    g = gcd(shift % n, n)
    if g != 1:
        raise ValueError(f"single-track lift unavailable: gcd({n}, {shift}) = {g} != 1")
    full = (1 << n) - 1
    reps = set()
    for word in words:
        # one pass over the rotations: least mask names the necklace, and
        # meeting the original mid-turn means the period is proper
        mask = word.mask
        least = mask
        m = mask
        for _ in range(n - 1):
            m = ((m << 1) | (m >> (n - 1))) & full
            if m == mask:
                raise ValueError(f"word {word} is not full-period")
            if m < least:
                least = m
        reps.add(least)
    if len(reps) != len(words):
        raise ValueError("words are not representatives of distinct necklaces")

    base: list[int] = []
    for i in range(len(words) - 1):
        j = transition_index(words[i], words[i + 1])
        if j is None:
            raise ValueError(f"words {i} and {i + 1} are not one transition apart")
        base.append(j)
    seam = transition_index(words[-1], cyclic_shift(words[0], shift))
    if seam is None:
        raise ValueError(f"no transition from the last word to the first rotated by {shift}")
    base.append(seam)

    out_words: list[Word] = []
    out_transitions: list[int] = []
    for copy in range(n):
        offset = (copy * shift) % n
        if offset:
            out_words.extend(
                Word(n, ((word.mask << offset) | (word.mask >> (n - offset))) & full)
                for word in words
            )
        else:
            out_words.extend(words)
        out_transitions.extend((j + offset) % n for j in base)
    w = words[0].weight
    return GrayCode(
        n=n, w=w, words=tuple(out_words), transitions=tuple(out_transitions), cyclic=True
    )


def lift_rank(words: Sequence[Word], shift: int, v: Word) -> int:
    """Index of v in lift(words, shift) without materializing the code.

    Decomposes v as (copy index, offset in the path) by necklace lookup:
    find the path word sharing v's necklace, read off the rotation, and
    invert the per-copy shift mod n.
    """
    n = words[0].n
    by_rep = {necklace_canonical_rep(word): i for i, word in enumerate(words)}
    rep = necklace_canonical_rep(v)
    if rep not in by_rep:
        raise KeyError(f"word {v} is not on any necklace of the path")
    i = by_rep[rep]
    rotation = next(r for r in range(n) if cyclic_shift(words[i], r) == v)
    copy = (rotation * pow(shift, -1, n)) % n
    return copy * len(words) + i


def build_weight3(n: int) -> GrayCode:
    """The cyclic single-track weight-3 code of size n * config_cycle_length(n).

    Defined for admissible n: the tour shift (a third of the tour length)
    must be coprime to n, otherwise the rotated copies collide.
    """
    if n < 9:
        raise ValueError(f"need n >= 9, got {n}")
    length = config_cycle_length(n)
    shift = length // 3
    g = gcd(n, shift)
    if g != 1:
        raise ValueError(f"single-track lift unavailable: gcd({n}, {shift}) = {g} != 1")
    path = realize_path(n)
    return lift(path.words, path.shift)


def is_admissible(n: int) -> bool:
    """True when the lift precondition gcd(n, tour_length/3) = 1 holds."""
    if n < 9:
        return False
    return gcd(n, config_cycle_length(n) // 3) == 1


# Residue classes of n that are always admissible, with their moduli.
_RESIDUE_CLASSES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (18, (7, 11)),
    (90, (13, 31, 49, 67)),
    (126, (5, 23, 41, 59, 95, 113)),
    (198, (1, 19, 37, 73, 91, 109, 127, 145, 163, 181)),
    (234, (17, 35, 53, 71, 89, 107, 125, 161, 179, 197, 215, 233)),
)


def admissible_residue_class(n: int) -> str | None:
    """The first known-admissible residue family containing n, if any.

    These families certify admissibility without computing the tour
    length; membership in none of them proves nothing (n = 27 is
    admissible but belongs to no family).
    """
    for modulus, residues in _RESIDUE_CLASSES:
        if n % modulus in residues:
            return f"{', '.join(str(r) for r in residues)} (mod {modulus})"
    return None
