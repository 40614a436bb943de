"""Demodulating charge levels into permutation windows and binary words.

A cell stores an integer (or real) charge.  A window of ``t`` consecutive
cells, read every ``s`` positions around the ring, induces the permutation
ranking its charges in descending order.  For windows of size two the
permutation [1,2] means "first cell higher", [2,1] the opposite, which is
how a charge ring encodes one bit per position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Word


def induced_permutation(window: Sequence[float]) -> tuple[int, ...]:
    """One-line permutation ranking the window entries, largest first.

    Entry i (1-based value) of the result is the 1-based position of the
    i-th largest charge.  Ties are a hard error: equal charges in one
    window cannot be ranked.
    """
    if len(window) < 1:
        raise ValueError("empty window")
    if len(set(window)) != len(window):
        raise ValueError(f"window has equal entries: {tuple(window)}")
    order = sorted(range(len(window)), key=lambda i: -window[i])
    return tuple(i + 1 for i in order)


@dataclass(frozen=True)
class LrmParams:
    """Window step s, window size t, ring size n (s divides n, s <= t <= n)."""

    s: int
    t: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.s <= self.t <= self.n:
            raise ValueError(f"need 1 <= s <= t <= n, got {self}")
        if self.n % self.s:
            raise ValueError(f"window step {self.s} must divide ring size {self.n}")


def demodulate(values: Sequence[float], params: LrmParams) -> list[tuple[int, ...]]:
    """The n/s window permutations read at positions 0, s, 2s, ..."""
    if len(values) != params.n:
        raise ValueError(f"expected {params.n} charge values, got {len(values)}")
    out = []
    for p in range(0, params.n, params.s):
        window = [values[(p + k) % params.n] for k in range(params.t)]
        out.append(induced_permutation(window))
    return out


def word_from_charges(values: Sequence[int | float]) -> Word:
    """Bit p is 1 exactly when charge p exceeds charge p+1 (mod n)."""
    n = len(values)
    if n < 2:
        raise ValueError("need at least two charge values")
    mask = 0
    for p in range(n):
        a, b = values[p], values[(p + 1) % n]
        if a == b:
            raise ValueError(f"adjacent charges equal at positions {p}, {(p + 1) % n}")
        if a > b:
            mask |= 1 << p
    return Word(n, mask)


def is_realizable_word(v: Word) -> bool:
    """A bit string is demodulable iff it is neither all-zero nor all-one."""
    return 0 < v.mask < (1 << v.n) - 1
