#!/usr/bin/env python3
"""Tabulate how close each construction gets to the counting bound."""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from math import comb

from lrmgray import (
    build_weight2,
    build_weight3,
    config_cycle_length,
    cyclic_size_bound,
    efficiency,
    is_admissible,
    longest_code,
)


def weight2_table(max_n: int, budget: int) -> None:
    """Weight 2: snake coverage, cyclic bound, and the exhaustive optimum."""
    print("weight 2, odd n (path construction covers every word):")
    print(f"{'n':>4} {'C(n,2)':>7} {'snake':>6} {'bound':>6} "
          f"{'optimum':>8} {'nodes':>12} {'secs':>7}")
    for n in range(3, max_n + 1, 2):
        code = build_weight2(n)
        # below n=7 the snake closes into a cycle, so the bound is trivial
        cap = comb(n, 2) if n < 7 else cyclic_size_bound(n).max_cyclic_size
        t0 = time.perf_counter()
        result = longest_code(n, 2, cyclic=True, budget=budget)
        elapsed = time.perf_counter() - t0
        best = str(result.best_length) if result.exhausted else f">={result.best_length}?"
        print(f"{n:>4} {comb(n, 2):>7} {len(code.words):>6} "
              f"{cap:>6} {best:>8} "
              f"{result.nodes_expanded:>12,} {elapsed:>7.1f}")
    print("the color advances by one per move, so a cyclic length must be a")
    print("multiple of n; C(n,2) = n(n-1)/2 is such a multiple only for odd n,")
    print("which is why the even-n table below cannot reach full coverage.")


def weight2_even_table(max_n: int, budget: int) -> None:
    """Weight 2, even n: exhaustive cyclic optimum only."""
    print("weight 2, even n:")
    print(f"{'n':>4} {'C(n,2)':>7} {'optimum':>8} {'nodes':>12} {'secs':>7}")
    for n in range(4, max_n + 1, 2):
        t0 = time.perf_counter()
        result = longest_code(n, 2, cyclic=True, budget=budget)
        elapsed = time.perf_counter() - t0
        best = str(result.best_length) if result.exhausted else f">={result.best_length}?"
        print(f"{n:>4} {comb(n, 2):>7} {best:>8} "
              f"{result.nodes_expanded:>12,} {elapsed:>7.1f}")


def weight3_table(max_n: int) -> None:
    """Weight 3: single-track lift size against C(n,3), admissible n only."""
    print("weight 3, single-track lift (admissible n):")
    print(f"{'n':>4} {'N*(n)':>6} {'size':>8} {'C(n,3)':>9} "
          f"{'efficiency':>16} {'decimal':>9}")
    worst = Fraction(1)
    for n in range(9, max_n + 1):
        if not is_admissible(n):
            continue
        size = n * config_cycle_length(n)
        ratio = Fraction(size, comb(n, 3))
        worst = min(worst, ratio)
        print(f"{n:>4} {config_cycle_length(n):>6} {size:>8} {comb(n, 3):>9} "
              f"{str(ratio):>16} {float(ratio):>9.6f}")
    print(f"minimum ratio in range: {worst} = {float(worst):.6f}")


def spot_check(n: int) -> None:
    """Cross-check one tabulated weight-3 row against the built artifact."""
    code = build_weight3(n)
    assert len(code.words) == n * config_cycle_length(n)
    assert efficiency(code) == Fraction(len(code.words), comb(n, 3))
    print(f"spot check n={n}: built code has {len(code.words)} words, "
          f"efficiency {efficiency(code)}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n2", type=int, default=9,
                        help="largest n for the exhaustive weight-2 tables "
                             "(n=10 takes ~4s, n=11 ~80s)")
    parser.add_argument("--max-n3", type=int, default=60,
                        help="largest n for the weight-3 lift table")
    parser.add_argument("--budget", type=int, default=200_000_000,
                        help="node budget per exhaustive search")
    args = parser.parse_args(argv)

    weight2_table(args.max_n2, args.budget)
    print()
    weight2_even_table(args.max_n2, args.budget)
    print()
    weight3_table(args.max_n3)
    print()
    spot_check(13)
    return 0


if __name__ == "__main__":
    sys.exit(main())
