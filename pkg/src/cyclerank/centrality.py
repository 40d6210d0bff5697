"""Classic centrality benchmarks: degree, coreness (k-shell), betweenness."""

from __future__ import annotations

import numpy as np

from .backend import kernels
from .graph import Graph
from .ranking import RankResult

__all__ = ["dc_scores", "coreness_scores", "core_numbers", "bc_scores"]


def dc_scores(g: Graph) -> RankResult:
    """Degree centrality."""
    return RankResult.from_scores("dc", g.degrees.astype(np.float64), g.labels)


def core_numbers(g: Graph) -> np.ndarray:
    """k-shell index per node via bucketed peeling (Batagelj-Zaversnik).

    Isolated nodes get 0; a node's shell is the largest k such that it
    survives iterated removal of all nodes with degree < k.
    """
    n = g.n
    deg = g.degrees.copy()
    max_deg = int(deg.max(initial=0))
    bin_start = np.zeros(max_deg + 2, dtype=np.int64)
    for d in deg:
        bin_start[d + 1] += 1
    np.cumsum(bin_start, out=bin_start)
    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    fill = bin_start[:-1].copy()
    for v in range(n):
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    core = deg.copy()
    for idx in range(n):
        v = vert[idx]
        for u in g.neighbors(v):
            u = int(u)
            if core[u] > core[v]:
                du = core[u]
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bin_start[du] += 1
                core[u] -= 1
    return core.astype(np.int64)


def coreness_scores(g: Graph) -> RankResult:
    return RankResult.from_scores(
        "coreness", core_numbers(g).astype(np.float64), g.labels)


def bc_scores(g: Graph) -> RankResult:
    """Exact betweenness; each unordered pair counted once, endpoints excluded,
    disconnected pairs contribute nothing."""
    scores = kernels.brandes_bc(g.indptr, g.indices)
    return RankResult.from_scores("bc", scores, g.labels)
