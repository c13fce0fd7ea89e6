#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension.

Usage, from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py

Three workloads, chosen to mirror where the library actually spends time:

* a longest-palindromic-suffix sweep over successive prefixes, the access
  pattern of iterated palindromic closure;
* minimal period of a long closure image, the per-word cost of the
  materialized enumeration;
* the arithmetic enumeration scan at order 18.

The compiled column is skipped when the extension is not built.
"""
from __future__ import annotations

import timeit

from sturmian._kernels import _pure
from sturmian.palindromization import fibonacci_directive_prefix, psi

try:
    from sturmian._kernels import _speedups
except ImportError:
    _speedups = None

SWEEP_PREFIXES = 2000
SCAN_ORDER = 18


def workloads(word: str) -> list[tuple[str, int, object]]:
    def lps_sweep(mod):
        return sum(mod.lps_length(word[:k]) for k in range(1, SWEEP_PREFIXES + 1))

    def period(mod):
        return mod.min_period(word)

    def scan(mod):
        return mod.arith_scan(SCAN_ORDER, 0, False)[0]

    # (label, timeit number, callable taking the backend module)
    return [
        (f"lps_length sweep, {SWEEP_PREFIXES} prefixes", 1, lps_sweep),
        (f"min_period, |w| = {len(word)}", 20, period),
        (f"arith_scan, order {SCAN_ORDER}", 3, scan),
    ]


def best_seconds(fn, mod, number: int) -> float:
    timer = timeit.Timer(lambda: fn(mod))
    return min(timer.repeat(repeat=3, number=number)) / number


def main() -> None:
    word = psi(fibonacci_directive_prefix(20))
    print(f"input: image of the order-20 alternating directive, {len(word)} letters")
    if _speedups is None:
        print("compiled extension not built; timing the pure backend only")
    header = f"{'workload':<38}{'pure':>12}"
    if _speedups is not None:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)
    for label, number, fn in workloads(word):
        expect = fn(_pure)
        pure_time = best_seconds(fn, _pure, number)
        row = f"{label:<38}{pure_time:>11.4f}s"
        if _speedups is not None:
            # Guard against the two backends drifting apart.
            if fn(_speedups) != expect:
                raise SystemExit(f"backend mismatch on {label!r}")
            c_time = best_seconds(fn, _speedups, number)
            row += f"{c_time:>11.4f}s{pure_time / c_time:>9.0f}x"
        print(row)


if __name__ == "__main__":
    main()
