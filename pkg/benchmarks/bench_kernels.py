#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Runs the image and theorem scans over growing coordinate boxes at rank
(2|3) and reports wall time per backend.  The scans are the hot loops of
the verify subcommand; everything else in the package is cold path.

Usage: python benchmarks/bench_kernels.py [--full] [--p P]
"""

from __future__ import annotations

import argparse
import time

from glmn_weights import kernels
from glmn_weights.serganova import order_v1, order_v2


def steps_of(order):
    return tuple((s.i, s.j) for s in order.steps)


def time_scan(backend, fn_name, args):
    fn = getattr(backend, fn_name)
    t0 = time.perf_counter()
    total, failures = fn(*args)
    elapsed = time.perf_counter() - t0
    assert not failures, f"{fn_name} reported failures"
    return elapsed, total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include larger boxes")
    parser.add_argument("--p", type=int, default=2, help="modulus (prime)")
    ns = parser.parse_args()

    M, N = 2, 3
    s1 = steps_of(order_v1(M))
    s2 = steps_of(order_v2(M))
    radii = (1, 2, 3) if not ns.full else (1, 2, 3, 4, 6)

    if not kernels.compiled_available():
        print("compiled backend not built; timing the pure backend only\n")

    header = f"{'scan':<10} {'box':>7} {'weights':>9} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    scans = (
        ("image", "scan_image", lambda lo, hi: (M, N, ns.p, lo, hi, s1, 20)),
        ("theorem", "scan_theorem", lambda lo, hi: (M, N, ns.p, lo, hi, s1, 20)),
        ("trace", "scan_trace", lambda lo, hi: (M, N, ns.p, lo, hi, s1, s2, 20)),
    )
    for label, fn_name, make_args in scans:
        for r in radii:
            args = make_args(-r, r)
            weights = (2 * r + 1) ** (M + N)
            t_pure, _ = time_scan(kernels.pure, fn_name, args)
            if kernels.compiled_available():
                t_comp, _ = time_scan(kernels.compiled, fn_name, args)
                print(
                    f"{label:<10} {-r}:{r:<5} {weights:>9} {t_pure:>10.4f} "
                    f"{t_comp:>13.4f} {t_pure / t_comp:>7.1f}x"
                )
            else:
                print(f"{label:<10} {-r}:{r:<5} {weights:>9} {t_pure:>10.4f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
