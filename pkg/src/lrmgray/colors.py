"""The color invariant and what it rules out for cyclic constant-weight codes.

The color of a word is the sum of its 1 positions mod n.  Every
constant-weight transition advances the color by exactly 1, so a cyclic
code must have length divisible by n, and a cyclic code covering all of
the weight-w space forces every color class to have the same size.
Counting words per color class has a closed form obtained by Mobius
inversion over the subgroup lattice of the rotation group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .words import Word

# Reason tags used by feasibility verdicts.
REASON_DIVISIBILITY = "divisibility"
REASON_PRIME_WEIGHT = "prime-weight"
REASON_COLOR_BALANCE = "color-balance"

_BRUTE_FORCE_CAP = 10**7


def _factorize(x: int) -> list[tuple[int, int]]:
    """Prime factorization as (p, exponent) pairs, trial division."""
    if x < 1:
        raise ValueError(f"cannot factor {x}")
    out = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if x > 1:
        out.append((x, 1))
    return out


def totient(x: int) -> int:
    result = 1
    for p, e in _factorize(x):
        result *= p ** (e - 1) * (p - 1)
    return result


def moebius(x: int) -> int:
    factors = _factorize(x)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def is_prime(x: int) -> bool:
    return x >= 2 and _factorize(x) == [(x, 1)]


def _divisors(x: int) -> list[int]:
    out = [1]
    for p, e in _factorize(x):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def color(v: Word) -> int:
    """Sum of the 1 positions, mod n."""
    return sum(v.ones) % v.n


@dataclass(frozen=True)
class ColorHistogram:
    n: int
    w: int
    counts: tuple[int, ...]

    @property
    def uniform(self) -> bool:
        return len(set(self.counts)) == 1


def color_counts_bruteforce(n: int, w: int) -> ColorHistogram:
    """Count weight-w words per color by enumerating position sets."""
    _check_nw(n, w)
    if comb(n, w) > _BRUTE_FORCE_CAP:
        raise ValueError(f"C({n},{w}) = {comb(n, w)} exceeds the enumeration cap")
    counts = [0] * n
    for positions in combinations(range(n), w):
        counts[sum(positions) % n] += 1
    return ColorHistogram(n, w, tuple(counts))


def color_count_formula(n: int, w: int, a: int) -> int:
    """Number of weight-w words of color a, by the closed form.

    The sum runs over the common divisors d of n and w; each term weighs a
    binomial on the d-fold quotient ring by a sign and a ratio of totients
    keyed to gcd(d, a).  The total is always divisible by n.
    """
    _check_nw(n, w)
    a %= n
    total = 0
    for d in _divisors(gcd(n, w)):
        dd = d // gcd(d, a)  # gcd(d, 0) == d, so a == 0 collapses to dd == 1
        mu = moebius(dd)
        if mu == 0:
            continue
        sign = -1 if (w + w // d) % 2 else 1
        total += sign * (totient(d) // totient(dd)) * mu * comb(n // d, w // d)
    if total % n:
        raise ArithmeticError(f"count sum {total} not divisible by n={n}")
    return total // n


def color_imbalance(n: int, w: int) -> int:
    """Count of color 0 minus count of color 1, in closed form.

    Equals color_count_formula(n, w, 0) - color_count_formula(n, w, 1);
    the d=1 term cancels, so coprime (n, w) always gives 0.
    """
    _check_nw(n, w)
    total = 0
    for d in _divisors(gcd(n, w)):
        sign = -1 if (w + w // d) % 2 else 1
        total += sign * (totient(d) - moebius(d)) * comb(n // d, w // d)
    if total % n:
        raise ArithmeticError(f"difference sum {total} not divisible by n={n}")
    return total // n


def cyclic_size_condition(n: int, size: int) -> bool:
    """Necessary length condition for a cyclic code: n divides the size."""
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    return size % n == 0


@dataclass(frozen=True)
class FeasibilityVerdict:
    n: int
    w: int
    status: str  # "possible" or "ruled_out"
    reasons: tuple[tuple[str, str], ...]

    @property
    def reason_tags(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self.reasons)


def optimal_cyclic_feasible(n: int, w: int) -> FeasibilityVerdict:
    """Screen (n, w) for a cyclic code covering the whole weight-w space.

    Three necessary conditions are checked; any failure rules the pair
    out.  "possible" only means no obstruction here fires, not that such
    a code exists.
    """
    _check_nw(n, w)
    reasons: list[tuple[str, str]] = []
    total = comb(n, w)
    if total % n:
        reasons.append(
            (REASON_DIVISIBILITY, f"full size C({n},{w}) = {total} is not divisible by n = {n}")
        )
    if is_prime(w) and gcd(n, w) != 1:
        reasons.append(
            (REASON_PRIME_WEIGHT, f"weight {w} is prime and gcd({n}, {w}) = {gcd(n, w)} != 1")
        )
    counts = tuple(color_count_formula(n, w, a) for a in range(n))
    if len(set(counts)) > 1:
        reasons.append(
            (
                REASON_COLOR_BALANCE,
                f"color classes are uneven (min {min(counts)}, max {max(counts)})",
            )
        )
    status = "ruled_out" if reasons else "possible"
    return FeasibilityVerdict(n, w, status, tuple(reasons))


def _check_nw(n: int, w: int) -> None:
    if n < 2 or not 1 <= w <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= w <= n-1, got n={n}, w={w}")
