"""Binary codewords on a circular index space and the window-rewrite transition.

Conventions used everywhere in this package:

* A codeword is a length-``n`` bit string.  Index 0 is the *leftmost*
  character of every textual rendering, and all index arithmetic is mod n.
* The ambient space of demodulable words excludes the all-zero and the
  all-one string (neither can arise from distinct charge levels).
* The elementary transition ``apply_transition(v, j)`` overwrites the
  two-bit window at positions (j, j+1 mod n) with "01".  When the window
  held "10" this slides one 1 a single place to the right and the weight
  is preserved; those are the only moves a constant-weight code may use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Mapping


@dataclass(frozen=True, repr=False)
class Word:
    """An n-bit codeword. ``mask`` bit k is the character at index k."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"word length must be at least 2, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        mask = 0
        for k, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << k
        return cls(len(text), mask)

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int]) -> "Word":
        mask = 0
        for p in positions:
            mask |= 1 << (p % n)
        return cls(n, mask)

    def bit(self, k: int) -> int:
        return (self.mask >> (k % self.n)) & 1

    @cached_property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> k) & 1 for k in range(self.n))

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def ones(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.n) if (self.mask >> k) & 1)

    def __str__(self) -> str:
        return "".join("1" if (self.mask >> k) & 1 else "0" for k in range(self.n))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    # Order words like their textual renderings (index 0 compares first).
    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.bits < other.bits

    def __le__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.bits <= other.bits

    def __gt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.bits > other.bits

    def __ge__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.bits >= other.bits


def is_ambient(v: Word) -> bool:
    """True when v is neither all-zero nor all-one."""
    return 0 < v.mask < (1 << v.n) - 1


def apply_transition(v: Word, j: int) -> Word:
    """Overwrite the window at (j, j+1 mod n) with "01"."""
    if not 0 <= j < v.n:
        raise ValueError(f"transition index {j} out of range for n={v.n}")
    if not is_ambient(v):
        raise ValueError(f"word {v} is outside the ambient space")
    mask = (v.mask & ~(1 << j)) | (1 << ((j + 1) % v.n))
    return Word(v.n, mask)


def transition_index(u: Word, v: Word) -> int | None:
    """The unique j with apply_transition(u, j) == v, or None.

    Uniqueness holds whenever u != v: the positions outside the window are
    copied verbatim, so two distinct window placements producing the same
    changed word would force the word to be unchanged.
    """
    if u.n != v.n:
        return None
    for j in range(u.n):
        if apply_transition(u, j) == v:
            return j
    return None


def constant_weight_successors(v: Word) -> list[tuple[int, Word]]:
    """All (j, result) moves that keep the weight: windows holding "10"."""
    if not is_ambient(v):
        raise ValueError(f"word {v} is outside the ambient space")
    out = []
    for j in range(v.n):
        if v.bit(j) == 1 and v.bit(j + 1) == 0:
            out.append((j, apply_transition(v, j)))
    return out


def cyclic_shift(v: Word, m: int) -> Word:
    """Rotate right by m: bit k of the result is bit (k - m) mod n of v."""
    m %= v.n
    if m == 0:
        return v
    full = (1 << v.n) - 1
    mask = ((v.mask << m) | (v.mask >> (v.n - m))) & full
    return Word(v.n, mask)


def is_full_period(v: Word) -> bool:
    """True when no rotation by 0 < m < n fixes v."""
    for d in range(1, v.n):
        if v.n % d == 0 and cyclic_shift(v, d) == v:
            return False
    return True


def necklace_canonical_rep(v: Word) -> Word:
    """The textually least rotation of v."""
    return min(cyclic_shift(v, m) for m in range(v.n))


@dataclass(frozen=True)
class GrayCode:
    """A sequence of codewords joined by recorded transitions.

    ``transitions[i]`` takes ``words[i]`` to ``words[i+1]``; a cyclic code
    carries one transition per word, the last returning to ``words[0]``.
    Construction does not validate; see validate_code.
    """

    n: int
    w: int | None
    words: tuple[Word, ...]
    transitions: tuple[int, ...]
    cyclic: bool

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def _index(self) -> Mapping[Word, int]:
        return {word: i for i, word in enumerate(self.words)}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[tuple[int, str], ...]
    checked_properties: tuple[str, ...]
    details: Mapping[str, object] = field(default_factory=dict)


def validate_code(
    code: GrayCode,
    expect_constant_weight: bool = False,
    expect_cyclic: bool = False,
) -> ValidationReport:
    """Check the recorded structure of a code.

    Failures are (position, reason) pairs; position -1 flags a structural
    problem not tied to one step.  Weight constancy is only enforced when
    requested, so mixed-weight sequences are valid as plain Gray codes.
    """
    failures: list[tuple[int, str]] = []
    checked = ["shape", "ambient_membership", "distinctness", "step_adjacency"]
    words = code.words
    count = len(words)

    if count == 0:
        return ValidationReport(False, ((-1, "code has no words"),), tuple(checked))

    for i, word in enumerate(words):
        if word.n != code.n:
            failures.append((i, f"word length {word.n} != code n {code.n}"))
    expected_transitions = count if code.cyclic else count - 1
    if len(code.transitions) != expected_transitions:
        failures.append(
            (-1, f"expected {expected_transitions} transitions, got {len(code.transitions)}")
        )
    if failures:
        return ValidationReport(False, tuple(failures), tuple(checked))

    for i, word in enumerate(words):
        if not is_ambient(word):
            failures.append((i, f"word {word} outside the ambient space"))

    seen: dict[Word, int] = {}
    for i, word in enumerate(words):
        if word in seen:
            failures.append((i, f"duplicate of word at position {seen[word]}"))
        else:
            seen[word] = i

    for i, j in enumerate(code.transitions):
        target = words[(i + 1) % count]
        if not 0 <= j < code.n:
            failures.append((i, f"transition index {j} out of range"))
            continue
        got = apply_transition(words[i], j)
        if got != target:
            failures.append((i, f"transition {j} gives {got}, expected {target}"))

    if expect_constant_weight:
        checked.append("constant_weight")
        w = code.w if code.w is not None else words[0].weight
        for i, word in enumerate(words):
            if word.weight != w:
                failures.append((i, f"weight {word.weight} != {w}"))

    if expect_cyclic:
        checked.append("cyclic_closure")
        if not code.cyclic:
            failures.append((-1, "code is not marked cyclic"))

    return ValidationReport(not failures, tuple(failures), tuple(checked))


def efficiency(code: GrayCode) -> Fraction:
    """Exact fraction of the constant-weight space the code covers."""
    w = code.w
    weights = {word.weight for word in code.words}
    if w is None:
        if len(weights) != 1:
            raise ValueError("efficiency needs a constant-weight code")
        w = weights.pop()
    elif weights != {w}:
        raise ValueError(f"code words do not all have weight {w}")
    return Fraction(code.size, comb(code.n, w))


def is_single_track(code: GrayCode) -> bool:
    """True when every bit column is a cyclic rotation of column 0.

    Columns are read down the word sequence; the comparison uses the
    doubled-string trick, so each column costs O(size) to test.
    """
    cols = []
    for c in range(code.n):
        cols.append("".join("1" if word.bit(c) else "0" for word in code.words))
    doubled = cols[0] + cols[0]
    return all(len(col) == len(cols[0]) and col in doubled for col in cols)


def rank(code: GrayCode, v: Word) -> int:
    """Index of v in the code; KeyError when absent."""
    try:
        return code._index[v]
    except KeyError:
        raise KeyError(f"word {v} is not in the code") from None


def next_word(code: GrayCode, v: Word) -> Word:
    """Successor of v in code order (wrapping for cyclic codes)."""
    i = rank(code, v)
    if not code.cyclic and i == code.size - 1:
        raise ValueError("last word of a non-cyclic code has no successor")
    return code.words[(i + 1) % code.size]
