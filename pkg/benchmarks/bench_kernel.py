#!/usr/bin/env python3
"""Compare the compiled truncated-sum kernel against its pure-Python twin.

Runs nested_sum_checkpoints on a few representative compositions, checks
that the two implementations agree to a handful of ulps, and reports
per-call wall time plus the speedup.  Exits cleanly when the compiled
module is unavailable so the script still works on a pure install.
"""

import argparse
import math
import time

from izeta._kernel_py import nested_sum_checkpoints as python_kernel

try:
    from izeta._kernel import nested_sum_checkpoints as compiled_kernel
except ImportError:
    compiled_kernel = None

CASES = [
    ((2,), 1_000_000, True),
    ((3, 1), 500_000, True),
    ((2, 1, 1), 200_000, True),
    ((2, 1, 1), 200_000, False),
    ((4, 3, 2, 1), 100_000, True),
]


def time_call(fn, args, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return result, best


def ulp_distance(a, b):
    if a == b:
        return 0
    return abs(a - b) / math.ulp(max(abs(a), abs(b)))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per case (best is kept)")
    args = parser.parse_args()

    if compiled_kernel is None:
        print("compiled kernel not built; nothing to compare")
        return

    print(f"{'exponents':>14} {'M':>9} {'strict':>6} "
          f"{'compiled':>10} {'python':>10} {'speedup':>8}")
    speedups = []
    for exponents, m_max, strict in CASES:
        call = (exponents, m_max, strict)
        fast, t_fast = time_call(compiled_kernel, call, args.repeat)
        slow, t_slow = time_call(python_kernel, call, args.repeat)
        for a, b in zip(fast, slow):
            ulps = ulp_distance(a, b)
            assert ulps <= 4, (exponents, m_max, strict, a, b, ulps)
        speedups.append(t_slow / t_fast)
        print(f"{str(exponents):>14} {m_max:>9} {str(strict):>6} "
              f"{t_fast:>9.4f}s {t_slow:>9.4f}s {speedups[-1]:>7.1f}x")
    print(f"checkpoint values agree to <= 4 ulps on every case; "
          f"median speedup {sorted(speedups)[len(speedups) // 2]:.1f}x")


if __name__ == "__main__":
    main()
