#!/usr/bin/env python3
"""Benchmark: compiled modular kernel vs the pure-Python fallback.

Times the three operations that dominate the library's runtime (determinant,
rank, and prefix-rank sweeps over F_p) on interpolation-sized matrices, plus
one end-to-end zero-locus test on the 29-point degree-14 case, where the
120x120 determinants make the difference visible.

Run:  python benchmarks/bench_linalg.py [--trials 5]
"""

import argparse
import time

from fatlocus import _purecore
from fatlocus.fields import DEFAULT_PRIME, CounterRng

try:
    from fatlocus import _modcore
except ImportError:
    _modcore = None


def _random_matrix(rng, rows, cols, p):
    return [[rng.draw_below(p) for _ in range(cols)] for _ in range(rows)]


def _time(fn, *args, trials):
    best = float("inf")
    for _ in range(trials):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(trials):
    p = DEFAULT_PRIME
    rng = CounterRng(5150)
    sizes = [(15, 15), (45, 45), (120, 120), (134, 120)]
    print(f"{'operation':<26} {'shape':<10} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for rows, cols in sizes:
        m = _random_matrix(rng, rows, cols, p)
        cases = [("rank", lambda core, mm=m: core.rank(mm, p))]
        if rows == cols:
            cases.append(("det", lambda core, mm=m: core.det(mm, p)))
        cases.append(("prefix_ranks", lambda core, mm=m: core.prefix_ranks(mm, p)))
        for name, call in cases:
            t_pure = _time(call, _purecore, trials=trials)
            if _modcore is None:
                print(f"{name:<26} {rows}x{cols:<6} {t_pure * 1e3:>10.2f}ms {'-':>12} {'-':>9}")
                continue
            t_comp = _time(call, _modcore, trials=trials)
            print(
                f"{name:<26} {rows}x{cols:<6} {t_pure * 1e3:>10.2f}ms "
                f"{t_comp * 1e3:>10.2f}ms {t_pure / t_comp:>8.1f}x"
            )


def bench_zero_locus(trials):
    import importlib
    import os

    from fatlocus import atlas

    rec = atlas.gen_a30_dual()
    cfg = rec.configuration().without([atlas.A30_MARKED_INDEX])

    def run():
        from fatlocus.interpolation import zero_locus_test

        v = zero_locus_test(cfg, 14, 13, trials=3, seed=7)
        assert v.probably_zero

    import fatlocus.linalg as linalg

    results = {}
    for forced in ("", "1"):
        os.environ["FATLOCUS_PURE"] = forced
        importlib.reload(linalg)
        label = linalg.BACKEND
        results[label] = _time(run, trials=trials)
    os.environ.pop("FATLOCUS_PURE", None)
    importlib.reload(linalg)
    print()
    print("zero-locus test, 29 points, (d, m) = (14, 13), 3 trials of det(120x120):")
    for label, t in results.items():
        print(f"  {label:<9} {t * 1e3:9.1f}ms")
    if len(results) == 2:
        pure, comp = results.get("pure"), results.get("compiled")
        if pure and comp:
            print(f"  speedup  {pure / comp:8.1f}x")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=5)
    args = ap.parse_args()
    if _modcore is None:
        print("compiled kernel not built; timing the fallback only")
    bench_kernels(args.trials)
    bench_zero_locus(max(2, args.trials // 2))


if __name__ == "__main__":
    main()
