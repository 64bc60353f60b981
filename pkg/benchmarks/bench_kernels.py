#!/usr/bin/env python3
"""Compare the numba and numpy backends on the two hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Containment is timed over a fixed batch of random graphs; the branch and
bound over a few oracle instances. JIT compilation is excluded by a warm-up
call per kernel.
"""

import argparse
import time

import numpy as np

from intervalminors import OrderedBipartiteGraph, kernels
from intervalminors._accel import HAVE_NUMBA

BNB_CASES = [(4, 4, 2, 3), (4, 5, 2, 3), (5, 5, 3, 3), (4, 6, 2, 4), (5, 5, 4, 4)]


def random_batch(rng, n, pmax):
    batch = []
    for _ in range(n):
        p, q = (int(x) for x in rng.integers(4, pmax + 1, size=2))
        mask = rng.random((p, q)) < rng.uniform(0.4, 0.9)
        g = OrderedBipartiteGraph(p, q, frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(mask))))
        k = int(rng.integers(2, 4))
        batch.append((g, k, int(rng.integers(k, 6))))
    return batch


def time_containment(batch, backend, repeat):
    for g, k, l in batch[:3]:
        kernels.contains_kl_masks(g.rows, g.cols, g.p, g.q, k, l, backend=backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for g, k, l in batch:
            kernels.contains_kl_masks(g.rows, g.cols, g.p, g.q, k, l, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def time_bnb(case, backend, repeat):
    kernels.branch_and_bound(2, 2, 2, 2, -1, (), backend)
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value, _, _, nodes = kernels.branch_and_bound(*case, -1, (), backend)
        best = min(best, time.perf_counter() - t0)
    return best, value, nodes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--graphs", type=int, default=300)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    batch = random_batch(rng, args.graphs, 24)
    print(f"containment, {len(batch)} random graphs (parts 4..24, best of {args.repeat})")
    t_np = time_containment(batch, "numpy", args.repeat)
    t_nb = time_containment(batch, "numba", args.repeat)
    print(f"  numpy {t_np * 1e3:9.1f} ms   numba {t_nb * 1e3:9.1f} ms   speedup {t_np / t_nb:6.1f}x")

    print(f"\nbranch and bound from an empty incumbent (best of {args.repeat})")
    print(f"  {'p,q,k,l':<10} {'value':>5} {'nodes':>9} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for case in BNB_CASES:
        t_np, v_np, n_np = time_bnb(case, "numpy", args.repeat)
        t_nb, v_nb, n_nb = time_bnb(case, "numba", args.repeat)
        assert (v_np, n_np) == (v_nb, n_nb), "backends disagree"
        label = ",".join(map(str, case))
        print(f"  {label:<10} {v_nb:>5} {n_nb:>9} {t_np:>9.3f} {t_nb:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
