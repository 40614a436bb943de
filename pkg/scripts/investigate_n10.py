#!/usr/bin/env python3
"""Why n=10, w=3 has no single-track lift, and what can be salvaged."""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from math import comb, gcd

from lrmgray import (
    GrayCode,
    build_weight3,
    config_cycle_length,
    cyclic_shift,
    efficiency,
    is_single_track,
    longest_code,
    realize_path,
    validate_code,
)


def report_lift_obstruction() -> None:
    """Show that the block-lift construction cannot work at n=10."""
    n = 10
    length = config_cycle_length(n)
    shift = length // 3
    print(f"necklace tour length N'({n}) = {length}, per-lap shift = {shift}")
    print(f"gcd({n}, {shift}) = {gcd(n, shift)}  (lift needs 1)")
    try:
        build_weight3(n)
    except ValueError as exc:
        print(f"build_weight3({n}) -> ValueError: {exc}")
    else:
        print("build_weight3(10) unexpectedly succeeded")
        sys.exit(1)
    # The obstruction is not specific to this tour: every weight-3 necklace
    # at n=10 is full-period (gcd(10, 3) = 1), so a full-coverage closed tour
    # visits all 12 of them exactly once, and closure forces the three push
    # kinds to tie at 12/3 = 4 each.  Any such tour therefore shifts by 4,
    # and gcd(10, 4) = 2 kills the lift no matter how the tour is routed.
    necklaces = comb(n, 3) // n
    print(f"full-period necklaces at n=10: {necklaces}; any closed tour that")
    print("covers them all shifts by 4, so no lift-based optimal code exists.")


def build_five_block_fallback() -> GrayCode:
    """Assemble the 60-word cyclic code from five shifted copies of the tour."""
    n = 10
    base = realize_path(n)
    shift = len(base.words) // 3  # 4
    copies = n // gcd(n, shift)  # 5 laps close the loop: 5 * 4 = 20 = 0 mod 10
    words = []
    transitions = []
    for copy in range(copies):
        offset = copy * shift % n
        for word in base.words:
            words.append(cyclic_shift(word, offset))
        for j in base.transitions:
            transitions.append((j + offset) % n)
    return GrayCode(n=n, w=3, words=tuple(words), transitions=tuple(transitions), cyclic=True)


def report_fallback() -> None:
    """Validate the fallback code and report what it does and does not give."""
    code = build_five_block_fallback()
    report = validate_code(code)
    print(f"five-block fallback: {len(code.words)} words, cyclic, "
          f"valid={report.ok}")
    if not report.ok:
        for index, message in report.failures:
            print(f"  failure at {index}: {message}")
        sys.exit(1)
    print(f"  single_track = {is_single_track(code)}")
    print(f"  efficiency   = {efficiency(code)}  "
          f"({len(code.words)} of {comb(code.n, code.w)} words)")


def report_search(budget: int) -> None:
    """Run the exhaustive search under a node budget and report honestly."""
    t0 = time.perf_counter()
    result = longest_code(10, 3, cyclic=True, budget=budget)
    elapsed = time.perf_counter() - t0
    print(f"oracle search n=10 w=3 cyclic, budget={budget:,} node expansions:")
    print(f"  best cycle found = {result.best_length}")
    print(f"  exhausted        = {result.exhausted}")
    print(f"  nodes expanded   = {result.nodes_expanded:,}")
    print(f"  wall time        = {elapsed:.1f}s")
    if not result.exhausted:
        print("  (budget hit; the question of the true optimum stays open)")
    upper = comb(10, 3)
    print(f"  constructive lower bound 60 vs counting upper bound {upper}")
    assert result.best_length % 10 == 0 or result.best_length == 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=5_000_000,
                        help="node-expansion budget for the search phase")
    parser.add_argument("--skip-search", action="store_true",
                        help="only report the obstruction and the fallback")
    args = parser.parse_args(argv)

    print("=" * 64)
    report_lift_obstruction()
    print("=" * 64)
    report_fallback()
    print("=" * 64)
    if not args.skip_search:
        report_search(args.budget)
        print("=" * 64)
    assert Fraction(60, comb(10, 3)) == Fraction(1, 2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
