#!/usr/bin/env python3
"""Benchmark the jit kernels against their pure-Python fallbacks.

The fallbacks are the same functions un-jitted (each numba dispatcher keeps
its original under .py_func; with PATHCOVER_PURE=1 the package runs them
directly). Usage:

    python benchmarks/bench_kernels.py [--sizes 12,14,16] [--repeat 3]
"""

import argparse
import time

import numpy as np

from pathcover import _kernels
from pathcover.generators import petersen_ring, random_cubic


def masks_of(g):
    m = np.zeros(g.n, np.int64)
    for u in range(g.n):
        for w in g.adj[u]:
            m[u] |= np.int64(1) << w
    return m


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="12,14,16")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"kernel backend: {_kernels.backend()}")
    if _kernels.backend() == "pure":
        print("PATHCOVER_PURE is set: timing the pure lane only\n")

    rows = []
    for n in sizes:
        g = random_cubic(n, seed=1)
        m = masks_of(g)
        out = np.empty(2 * n, np.int32)

        def run_dp(fn=_kernels.min_cover_dp, m=m, n=n, out=out):
            fn(m, n, out)

        jit_t = timeit(run_dp, args.repeat)
        pure_dp = _kernels.pure_variant(_kernels.min_cover_dp)
        pure_t = timeit(lambda: pure_dp(m, n, out), 1 if n > 14 else args.repeat)
        rows.append(("min_cover_dp", n, jit_t, pure_t))

    ring = petersen_ring(2)
    m = masks_of(ring)
    out = np.empty(ring.n, np.int32)
    jit_t = timeit(lambda: _kernels.ham_search(m, ring.n, False, 10**8, out), args.repeat)
    pure_ham = _kernels.pure_variant(_kernels.ham_search)
    pure_t = timeit(lambda: pure_ham(m, ring.n, False, 10**8, out), 1)
    rows.append(("ham_search(ring20)", ring.n, jit_t, pure_t))

    print(f"{'kernel':<22}{'n':>4}{'jit (s)':>12}{'pure (s)':>12}{'speedup':>10}")
    for name, n, jt, pt in rows:
        sp = pt / jt if jt > 0 else float("inf")
        print(f"{name:<22}{n:>4}{jt:>12.4f}{pt:>12.4f}{sp:>9.1f}x")


if __name__ == "__main__":
    main()
