#!/usr/bin/env python3
"""Benchmark: compiled contraction kernel vs the pure-numpy fallback.

Times the raw edge-major contraction and an end-to-end spectral solve on
a few hypergraph sizes, and checks that both kernels agree bitwise.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from abctensor import _kernels_py
from abctensor import generators as gen
from abctensor.spectral import SolveOptions, spectral_radius
from abctensor.tensor import TensorOperator, Weighting

try:
    from abctensor import _kernels as _kernels_c

    HAVE_C = bool(getattr(_kernels_c, "COMPILED", False))
except ImportError:
    _kernels_c = None
    HAVE_C = False


def time_contract(kernel, op, x, repeat):
    out = np.zeros(op.n)
    best = float("inf")
    for _ in range(repeat):
        out[:] = 0.0
        t0 = time.perf_counter()
        kernel.contract(op._edge_idx, op.weights, x, out)
        best = min(best, time.perf_counter() - t0)
    return best, out.copy()


def time_solve(op, repeat):
    best = float("inf")
    rho = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        est = spectral_radius(op, opts=SolveOptions())
        best = min(best, time.perf_counter() - t0)
        rho = est.rho
    return best, rho


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not HAVE_C:
        print("compiled kernel not available; showing pure-numpy numbers only")

    cases = [
        ("hypertree m=50 k=3", gen.random_hypertree(50, 3, seed=1)),
        ("hypertree m=200 k=4", gen.random_hypertree(200, 4, seed=2)),
        ("hypertree m=1000 k=3", gen.random_hypertree(1000, 3, seed=3)),
        ("complete n=12 k=3", gen.complete(12, 3)),
    ]
    rng = np.random.default_rng(0)
    print(f"{'case':24s} {'contract pure':>14s} {'contract cyx':>14s} {'speedup':>8s}  bitwise")
    for name, G in cases:
        op = TensorOperator.from_weighting(G, Weighting.ABC)
        x = rng.uniform(0.5, 1.5, size=G.n)
        t_py, out_py = time_contract(_kernels_py, op, x, args.repeat)
        if HAVE_C:
            t_c, out_c = time_contract(_kernels_c, op, x, args.repeat)
            same = np.array_equal(out_py, out_c)
            print(f"{name:24s} {t_py * 1e6:>11.1f} us {t_c * 1e6:>11.1f} us {t_py / t_c:>7.1f}x  {same}")
        else:
            print(f"{name:24s} {t_py * 1e6:>11.1f} us {'-':>14s} {'-':>8s}")

    print()
    G = gen.random_hypertree(200, 4, seed=2)
    idx = TensorOperator.from_weighting(G, Weighting.ABC)._edge_idx
    w = TensorOperator.from_weighting(G, Weighting.ABC).weights
    for label, kernel in [("pure", _kernels_py)] + ([("compiled", _kernels_c)] if HAVE_C else []):
        op = TensorOperator(G=G, weights=w, _edge_idx=idx)
        import abctensor.tensor as tensor_mod

        saved = tensor_mod._kernels
        tensor_mod._kernels = kernel
        try:
            t, rho = time_solve(op, max(1, args.repeat // 2))
        finally:
            tensor_mod._kernels = saved
        print(f"solve hypertree m=200 k=4 [{label:8s}] {t * 1e3:8.1f} ms  rho={rho:.12f}")


if __name__ == "__main__":
    main()
