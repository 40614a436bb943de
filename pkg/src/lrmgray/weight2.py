"""Weight-2 codes for odd n: full coverage of the pair space.

A weight-2 word is a pair of 1 positions; for odd n every pair has a
unique description v_{k,l} with 1s at l and l+k where 1 <= k <= (n-1)/2.
Constant-weight transitions act on (k, l) like moves on a grid whose rows
are the gap values k, which the builder snakes through row pair by row
pair.  The resulting code always covers all C(n,2) words; it closes into
a cycle only for n = 3 and n = 5, and for larger n no cyclic code can
cover everything, by the uncovered-count bound below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .words import GrayCode, Word, constant_weight_successors

__all__ = [
    "RowCol",
    "rowcol_to_word",
    "word_to_rowcol",
    "graph_neighbors",
    "build_weight2",
    "BoundReport",
    "cyclic_size_bound",
]


@dataclass(frozen=True)
class RowCol:
    """Grid coordinates of a weight-2 word: gap k (row), first position l (column)."""

    k: int
    l: int


def _check_odd(n: int, minimum: int) -> None:
    if n < minimum or n % 2 == 0:
        raise ValueError(f"need odd n >= {minimum}, got {n}")


def rowcol_to_word(rc: RowCol, n: int) -> Word:
    _check_odd(n, 3)
    if not 1 <= rc.k <= (n - 1) // 2:
        raise ValueError(f"row {rc.k} out of range for n={n}")
    if not 0 <= rc.l < n:
        raise ValueError(f"column {rc.l} out of range for n={n}")
    return Word.from_positions(n, (rc.l, rc.l + rc.k))


def word_to_rowcol(v: Word) -> RowCol:
    _check_odd(v.n, 3)
    if v.weight != 2:
        raise ValueError(f"word {v} does not have weight 2")
    a, b = v.ones
    k = (b - a) % v.n
    if k <= (v.n - 1) // 2:
        return RowCol(k, a)
    return RowCol(v.n - k, b)


def graph_neighbors(rc: RowCol, n: int) -> list[RowCol]:
    """Grid coordinates reachable by one constant-weight transition.

    Row 1 words have their two 1s adjacent, so only the trailing 1 can
    move and there is a single neighbor.  The top row (n-1)/2 wraps onto
    itself a half-turn along, because pushing its trailing 1 re-enters
    the same gap value read from the other endpoint.
    """
    _check_odd(n, 5)
    half = (n - 1) // 2
    k, l = rc.k, rc.l
    if not 1 <= k <= half or not 0 <= l < n:
        raise ValueError(f"{rc} out of range for n={n}")
    if k == 1:
        return [RowCol(2, l)]
    if k < half:
        return [RowCol(k + 1, l), RowCol(k - 1, (l + 1) % n)]
    return [RowCol(half - 1, (l + 1) % n), RowCol(half, (l + (n + 1) // 2) % n)]


def build_weight2(n: int) -> GrayCode:
    """Snake through the whole pair grid, one word per pair of positions.

    Odd rows walk down into the next row; even rows walk back a column at
    a time until a sentinel column is hit, which drops the path into the
    next row pair.  The top row, when odd-valued, is covered by repeated
    half-turn wraps.  The code is cyclic exactly when the final word has
    a transition back to the first (n = 3 and n = 5).
    """
    _check_odd(n, 3)
    half = (n - 1) // 2
    total = comb(n, 2)
    words: list[Word] = []
    transitions: list[int] = []
    k, l = 1, 0
    for step in range(total):
        words.append(rowcol_to_word(RowCol(k, l), n))
        if step == total - 1:
            break
        if k % 2 == 1 and k < half:
            transitions.append((l + k) % n)
            k += 1
        elif k % 2 == 1:
            # odd top row: wrap half a turn along the same row
            transitions.append((l + k) % n)
            l = (l + (n + 1) // 2) % n
        elif l != (n - k // 2) % n:
            transitions.append(l)
            k -= 1
            l = (l + 1) % n
        else:
            # sentinel column of an even row: drop to the next row pair
            transitions.append((l + k) % n)
            k += 1
    cyclic = False
    for j, succ in constant_weight_successors(words[-1]):
        if succ == words[0]:
            transitions.append(j)
            cyclic = True
            break
    return GrayCode(n=n, w=2, words=tuple(words), transitions=tuple(transitions), cyclic=cyclic)


@dataclass(frozen=True)
class BoundReport:
    n: int
    min_uncovered: int
    max_cyclic_size: int
    efficiency_bound: Fraction


def cyclic_size_bound(n: int) -> BoundReport:
    """How much of the pair space any cyclic weight-2 code must miss.

    A cyclic code that enters row k of the grid must spend whole column
    cycles there; accounting rows top-down shows at least
    (n-3)(n-5)/8 pairs stay uncovered, which caps the efficiency near 3/4
    for large n.
    """
    _check_odd(n, 7)
    uncovered = (n - 3) * (n - 5) // 8
    best = comb(n, 2) - uncovered
    return BoundReport(n, uncovered, best, Fraction(best, comb(n, 2)))
