"""Timing the two enumeration kernels against each other.

Both kernels walk every subset mask of the ground set, so runtime scales
as 2^(n*p+m); the compiled one exists purely to push the exhaustive
oracle range up.  Run with the package installed:

    python3 benchmarks/bench_oracle.py [--max-ground 20]
"""

import argparse
import importlib
import time

from blockcheb import _subsetcount_py


def _time(fn, n, p, m, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(n, p, m)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-ground", type=int, default=20,
                        help="largest n*p+m to enumerate (pure Python "
                        "walks 2^ground masks, so keep this modest)")
    args = parser.parse_args()

    try:
        compiled = importlib.import_module("blockcheb._subsetcount")
    except ImportError:
        print("compiled kernel unavailable; nothing to compare")
        return 1

    configs = [(n, p, m) for n, p, m in
               ((3, 2, 2), (4, 2, 2), (3, 3, 3), (4, 3, 2), (4, 4, 0),
                (5, 3, 3), (6, 3, 2), (5, 4, 2))
               if n * p + m <= args.max_ground]

    print(f"{'config':>14} {'ground':>6} {'compiled':>12} "
          f"{'pure python':>12} {'speedup':>8}")
    for n, p, m in configs:
        fast, fast_counts = _time(compiled.count_intersecting_by_size, n, p, m)
        slow, slow_counts = _time(_subsetcount_py.count_intersecting_by_size,
                                  n, p, m, repeats=1)
        if list(fast_counts) != list(slow_counts):
            print(f"MISMATCH at n={n} p={p} m={m}")
            return 1
        print(f"{f'n={n} p={p} m={m}':>14} {n * p + m:>6} "
              f"{fast * 1e3:>10.2f}ms {slow * 1e3:>10.2f}ms "
              f"{slow / fast:>7.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
