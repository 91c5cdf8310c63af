#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the three hot kernels (border_table, occurrences, frontier_length)
over generated prefixes and reports per-backend timings plus speedup.
The two backends are imported directly, bypassing the import-time
selection in wordlab.kernels, so both are always measured.

Usage: python3 benchmarks/bench_kernels.py [--length N] [--repeat R]
"""

import argparse
import statistics
import time

from wordlab import _fallback, wordgen

try:
    from wordlab import _speedups
except ImportError:
    _speedups = None


def _time(fn, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return min(samples), statistics.median(samples)


def _workloads(length):
    tm = wordgen.get_preset("thue-morse").prefix(length)
    fib = wordgen.get_preset("fibonacci").prefix(length)
    needle = fib[37 : 37 + 12]
    windows = [tm[i : i + 64] for i in range(0, length - 64, 61)]
    return [
        ("border_table", lambda mod: mod.border_table(tm)),
        ("occurrences", lambda mod: mod.occurrences(needle, fib)),
        (
            "frontier_length x%d" % len(windows),
            lambda mod: [mod.frontier_length(w) for w in windows],
        ),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=1 << 16, help="prefix length")
    parser.add_argument("--repeat", type=int, default=20, help="timing repetitions")
    args = parser.parse_args()

    print(f"prefix length {args.length}, best of {args.repeat} runs")
    header = f"{'kernel':<24} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in _workloads(args.length):
        pure_best, _ = _time(lambda: call(_fallback), args.repeat)
        if _speedups is None:
            print(f"{name:<24} {pure_best * 1e3:>10.3f} {'n/a':>14} {'n/a':>8}")
            continue
        fast_best, _ = _time(lambda: call(_speedups), args.repeat)
        ratio = pure_best / fast_best if fast_best else float("inf")
        print(
            f"{name:<24} {pure_best * 1e3:>10.3f} {fast_best * 1e3:>14.3f} "
            f"{ratio:>7.1f}x"
        )
    if _speedups is None:
        print("\ncompiled backend not built; showing fallback only")


if __name__ == "__main__":
    main()
