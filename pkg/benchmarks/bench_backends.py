#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot kernels (SIR Monte Carlo batch, betweenness) on synthetic
graphs and verifies both backends return identical results while timing.

    python benchmarks/bench_backends.py [--n 2000] [--avg-degree 8]
        [--runs 200] [--bc-n 400]
"""

import argparse
import time

import numpy as np

from cyclerank import _kernels_py
from cyclerank.graph import build_graph

try:
    from cyclerank import _kernels as compiled
except ImportError:
    compiled = None


def synthetic_graph(n, avg_degree, seed):
    rng = np.random.default_rng(seed)
    p = avg_degree / (n - 1)
    width = len(str(n - 1))
    labels = [f"{i:0{width}d}" for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return build_graph(labels, edges)


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def bench_sir(args):
    g = synthetic_graph(args.n, args.avg_degree, seed=1)
    seeds = list(range(0, g.n, max(1, g.n // 20)))[:20]
    kernel_args = (g.indptr, g.indices, seeds, 0.08, 0.5, args.runs, 42, False)
    rows = []
    (counts_py, _), t_py = timed(_kernels_py.sir_runs, *kernel_args)
    rows.append(("python", t_py))
    if compiled is not None:
        (counts_c, _), t_c = timed(compiled.sir_runs, *kernel_args)
        assert np.array_equal(np.asarray(counts_c), np.asarray(counts_py)), \
            "backends disagree"
        rows.append(("compiled", t_c))
    print(f"\nSIR kernel: n={g.n} m={g.m} runs={args.runs}")
    report(rows, args.runs)


def bench_bc(args):
    g = synthetic_graph(args.bc_n, args.avg_degree, seed=2)
    rows = []
    bc_py, t_py = timed(_kernels_py.brandes_bc, g.indptr, g.indices)
    rows.append(("python", t_py))
    if compiled is not None:
        bc_c, t_c = timed(compiled.brandes_bc, g.indptr, g.indices)
        assert bc_c.tobytes() == bc_py.tobytes(), "backends disagree"
        rows.append(("compiled", t_c))
    print(f"\nBetweenness kernel: n={g.n} m={g.m}")
    report(rows, 1)


def report(rows, per):
    base = rows[0][1]
    for name, t in rows:
        speedup = f"{base / t:6.1f}x" if t > 0 else "   inf"
        print(f"  {name:10s} {t * 1000:10.1f} ms  {t * 1000 / per:8.3f} ms/unit"
              f"  speedup vs python {speedup}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2000, help="SIR graph size")
    ap.add_argument("--avg-degree", type=float, default=8.0)
    ap.add_argument("--runs", type=int, default=200, help="SIR runs")
    ap.add_argument("--bc-n", type=int, default=400, help="betweenness graph size")
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; benchmarking python backend only")
    bench_sir(args)
    bench_bc(args)


if __name__ == "__main__":
    main()
