"""Compare the compiled kernel against the pure-Python twin on the two hot
paths: per-operator equation checks and brute-force enumeration slices.

Usage: python benchmarks/bench_kernels.py [--slice N]
"""

import argparse
import random
import time

from hopfeq import kernels


def bench_equation_checks(impl, n, p, count, rng):
    code = impl.EQ_HOPF
    mats = [[rng.randrange(p) for _ in range(n ** 4)] for _ in range(count)]
    t0 = time.perf_counter()
    hits = sum(1 for m in mats if impl.equation_holds_mod(m, n, p, code))
    dt = time.perf_counter() - t0
    return dt, hits


def bench_enumeration_slice(impl, n, p, stop):
    t0 = time.perf_counter()
    hits = impl.solutions_in_range_mod(n, p, impl.EQ_HOPF, 0, stop)
    dt = time.perf_counter() - t0
    return dt, len(hits)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--slice", type=int, default=65536,
                        help="candidates scanned in the enumeration benchmark")
    parser.add_argument("--checks", type=int, default=2000,
                        help="random operators for the check benchmark")
    args = parser.parse_args()

    backends = kernels.backends()
    print(f"active backend: {kernels.BACKEND}; available: {sorted(backends)}")

    print(f"\nhopf check, {args.checks} random 4x4 operators over F_5:")
    results = {}
    for name, impl in sorted(backends.items()):
        rng = random.Random(0)
        dt, hits = bench_equation_checks(impl, 2, 5, args.checks, rng)
        results[name] = dt
        print(f"  {name:8} {dt:8.3f} s   ({args.checks / dt:9.0f} ops/s, {hits} hits)")
    if len(results) == 2:
        print(f"  speedup: {results['python'] / results['cython']:.1f}x")

    print(f"\nenumeration slice, first {args.slice} candidates (n=2, F_2):")
    results = {}
    for name, impl in sorted(backends.items()):
        dt, hits = bench_enumeration_slice(impl, 2, 2, args.slice)
        results[name] = dt
        print(f"  {name:8} {dt:8.3f} s   ({args.slice / dt:9.0f} cands/s, {hits} solutions)")
    if len(results) == 2:
        print(f"  speedup: {results['python'] / results['cython']:.1f}x")


if __name__ == "__main__":
    main()
