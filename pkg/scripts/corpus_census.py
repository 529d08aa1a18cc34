#!/usr/bin/env python3
"""Census of the exhaustive support corpus.

For each (s, n) bound, count how many multisets of non-empty subsets pass
the radical-support check, and how the verdict splits by cycle length of
the returned counterexample.
"""

import argparse
import time
from collections import Counter
from itertools import combinations_with_replacement

from radsup.selftest import all_multidegrees
from radsup.support import Support, is_radical_support


def census(max_s: int, n: int) -> None:
    subsets = all_multidegrees(n)
    print(f"n = {n}: {len(subsets)} non-empty subsets")
    total_radical = total = 0
    for s in range(1, max_s + 1):
        start = time.perf_counter()
        radical = 0
        count = 0
        cycle_lengths: Counter = Counter()
        for combo in combinations_with_replacement(subsets, s):
            count += 1
            verdict = is_radical_support(Support(n, combo))
            if verdict.is_radical_support:
                radical += 1
            else:
                cycle_lengths[verdict.cycle.k] += 1
        elapsed = time.perf_counter() - start
        total += count
        total_radical += radical
        lengths = ", ".join(f"k={k}: {v}" for k, v in sorted(cycle_lengths.items()))
        print(
            f"  s = {s}: {radical}/{count} radical ({elapsed:.2f}s)"
            + (f"; counterexample cycles {lengths}" if lengths else "")
        )
    print(f"total: {total_radical}/{total} radical supports")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-s", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()
    for n in range(1, args.max_n + 1):
        census(args.max_s, n)


if __name__ == "__main__":
    main()
