"""Integer charge levels driven by push-to-the-top rewrites.

A length-n word is stored in n memory cells as relative charge: bit p
reads 1 exactly when cell p holds more charge than cell p+1 (mod n).
The only write primitive is raising one cell above both neighbours.
Pushing cell j+1 when the word has a 1 at j and a 0 at j+1 turns that
window from 10 into 01 — the constant-weight transition — so traversing
a Gray code never needs a block erase.

``realize`` picks concrete integer levels whose cyclic differences are
all +1 on ascents and -floor((n-w)/w) or one deeper on descents (the
mirror image when 1s outnumber 0s).  Every push then moves one such
difference pair without changing the multiset of differences, which caps
the push height at ceil(n / min(w, n-w)) and keeps the level range from
drifting lap after lap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lrm import LrmParams, demodulate, word_from_charges
from .words import GrayCode, Word, is_ambient

__all__ = [
    "ChargeState",
    "TraversalStats",
    "realize",
    "push_cell",
    "push_transition",
    "jump_bound",
    "traverse",
]


@dataclass(frozen=True)
class ChargeState:
    """Integer charge per cell; cyclically adjacent cells never tie."""

    n: int
    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n != len(self.levels):
            raise ValueError(f"{len(self.levels)} levels for n={self.n}")
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        for p in range(self.n):
            q = (p + 1) % self.n
            if self.levels[p] == self.levels[q]:
                raise ValueError(f"cells {p} and {q} hold equal charge")

    def word(self) -> Word:
        return word_from_charges(self.levels)


def _mirror(v: Word) -> Word:
    """Reverse the cell order and swap 0s with 1s."""
    return Word.parse("".join("0" if ch == "1" else "1" for ch in reversed(str(v))))


def _ascending_levels(v: Word) -> tuple[int, ...]:
    """Levels for a word with 2w <= n: ascents +1, descents -(base) or one deeper.

    The n-w rises of +1 must be paid back by the w falls, so falls are
    -floor((n-w)/w), with the remainder spread as one extra unit on the
    lowest-indexed 1 cells.  The sum telescopes to 0 around the cycle.
    """
    n, w = v.n, v.weight
    base, extra = divmod(n - w, w)
    deep = set(v.ones[:extra])
    levels = [0]
    for p in range(n - 1):
        if v.bit(p):
            levels.append(levels[-1] - base - (1 if p in deep else 0))
        else:
            levels.append(levels[-1] + 1)
    closing = (-base - (1 if n - 1 in deep else 0)) if v.bit(n - 1) else 1
    if levels[-1] + closing != 0:
        raise AssertionError(f"levels for {v} do not close around the cycle")
    return tuple(levels)


def realize(v: Word) -> ChargeState:
    """Integer levels with cell 0 at charge 0 that read back as v."""
    if not is_ambient(v):
        raise ValueError(f"word {v} has no charge realization")
    n = v.n
    if 2 * v.weight <= n:
        state = ChargeState(n, _ascending_levels(v))
    else:
        base = _ascending_levels(_mirror(v))
        state = ChargeState(n, tuple(base[(n - p) % n] for p in range(n)))
    if state.word() != v:
        raise AssertionError(f"levels {state.levels} do not realize {v}")
    return state


def push_cell(state: ChargeState, cell: int) -> ChargeState:
    """Raise one cell just above its higher neighbour.

    Legal exactly when the cell sits below both neighbours, i.e. the word
    has a 1 at cell-1 and a 0 at cell; the rewrite turns that window into
    01 without touching any other bit.
    """
    n = state.n
    if not 0 <= cell < n:
        raise ValueError(f"cell {cell} out of range for n={n}")
    left = state.levels[(cell - 1) % n]
    here = state.levels[cell]
    right = state.levels[(cell + 1) % n]
    if not (left > here and here < right):
        raise ValueError(f"cell {cell} is not below both neighbours; push is not constant-weight")
    lifted = max(left, right) + 1
    return ChargeState(n, state.levels[:cell] + (lifted,) + state.levels[cell + 1 :])


def push_transition(state: ChargeState, j: int) -> ChargeState:
    """Apply the window rewrite at (j, j+1) by pushing cell j+1."""
    return push_cell(state, (j + 1) % state.n)


def jump_bound(n: int, w: int) -> int:
    """Largest possible single-push rise for a weight-w traversal."""
    if not 1 <= w <= n - 1:
        raise ValueError(f"need 1 <= w <= n-1, got n={n}, w={w}")
    m = min(w, n - w)
    return -(-n // m)


@dataclass(frozen=True)
class TraversalStats:
    steps: int
    max_jump: int
    max_level: int
    jump_bound: int
    diff_multiset_preserved: bool


def _difference_multiset(levels: tuple[int, ...]) -> tuple[int, ...]:
    n = len(levels)
    return tuple(sorted(levels[(p + 1) % n] - levels[p] for p in range(n)))


def _demodulated_word(state: ChargeState, params: LrmParams) -> Word:
    """Read the word through the window demodulator (not raw comparisons)."""
    perms = demodulate(state.levels, params)
    return Word.parse("".join("1" if perm == (1, 2) else "0" for perm in perms))


def traverse(code: GrayCode, laps: int = 1) -> TraversalStats:
    """Drive a code's transitions on real levels, checking every read-back.

    Each step pushes one cell and demodulates the new levels; a mismatch
    with the expected codeword raises.  Returns the largest jump and
    level reached, the jump cap for this (n, w), and whether the multiset
    of adjacent differences survived every step.
    """
    if laps < 1:
        raise ValueError(f"need laps >= 1, got {laps}")
    if code.size == 0:
        raise ValueError("cannot traverse an empty code")
    if not code.cyclic and laps != 1:
        raise ValueError("laps > 1 needs a cyclic code")
    weights = {word.weight for word in code.words}
    if len(weights) != 1:
        raise ValueError("traversal needs a constant-weight code")
    (w,) = weights
    n = code.n
    params = LrmParams(1, 2, n)

    state = realize(code.words[0])
    if _demodulated_word(state, params) != code.words[0]:
        raise AssertionError("realized levels do not demodulate to the start word")
    base_diffs = _difference_multiset(state.levels)
    bound = jump_bound(n, w)
    max_jump = 0
    max_level = max(state.levels)
    preserved = True

    steps = laps * len(code.transitions)
    for step in range(steps):
        j = code.transitions[step % len(code.transitions)]
        cell = (j + 1) % n
        before = state.levels[cell]
        state = push_cell(state, cell)
        max_jump = max(max_jump, state.levels[cell] - before)
        max_level = max(max_level, state.levels[cell])
        expected = code.words[(step + 1) % code.size]
        got = _demodulated_word(state, params)
        if got != expected:
            raise ValueError(f"step {step}: levels read back as {got}, expected {expected}")
        if _difference_multiset(state.levels) != base_diffs:
            preserved = False
    return TraversalStats(
        steps=steps,
        max_jump=max_jump,
        max_level=max_level,
        jump_bound=bound,
        diff_multiset_preserved=preserved,
    )
