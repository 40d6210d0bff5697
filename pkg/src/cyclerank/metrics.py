"""Rank-comparison and seed-quality metrics.

kendall_tau ships two variants: "paper" evaluates 2(Nc - Nd) / (N(N-1))
with tied pairs counted in neither Nc nor Nd; "tie-corrected" is the
standard tau-b normalization (Nc - Nd) / sqrt((n0 - n1)(n0 - n2)). Pair
counts come from an O(N log N) merge count, exact integers either way.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph
from .ranking import RankResult

__all__ = [
    "EvalReport",
    "DispersionUndefinedError",
    "kendall_tau",
    "pair_counts",
    "individuation",
    "initializing_cost",
    "seed_dispersion",
]

GAMMA_DECIMALS = 9  # score-equality resolution for individuation


class DispersionUndefinedError(ValueError):
    """No seed pair shares a component, so mean distance is undefined."""


@dataclass(frozen=True)
class EvalReport:
    metric: str
    value: float
    meta: dict = field(default_factory=dict)


def _merge_count_inversions(values: list[float]) -> int:
    """Strict inversions (i < j with values[i] > values[j]) by merge sort."""
    n = len(values)
    work = list(values)
    buf = [0.0] * n
    inversions = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if work[j] < work[i]:
                    inversions += mid - i
                    buf[k] = work[j]
                    j += 1
                else:
                    buf[k] = work[i]
                    i += 1
                k += 1
            buf[k:hi] = work[i:mid] if i < mid else work[j:hi]
            work[lo:hi] = buf[lo:hi]
        width *= 2
    return inversions


def _tie_term(values) -> int:
    counts = Counter(values)
    return sum(t * (t - 1) // 2 for t in counts.values())


def pair_counts(x, y) -> tuple[int, int, int, int, int]:
    """(Nc, Nd, n1, n2, n3): concordant, discordant, and tie pair counts."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(x)
    if len(y) != n:
        raise ValueError("score vectors differ in length")
    order = np.lexsort((y, x))
    y_sorted = y[order].tolist()
    nd = _merge_count_inversions(y_sorted)
    n0 = n * (n - 1) // 2
    n1 = _tie_term(x.tolist())
    n2 = _tie_term(y.tolist())
    n3 = _tie_term(zip(x.tolist(), y.tolist()))
    nc = n0 - n1 - n2 + n3 - nd
    return nc, nd, n1, n2, n3


def kendall_tau(a: RankResult, b: RankResult, variant: str = "paper") -> float:
    """Rank correlation between two score vectors over the same node set."""
    if a.labels != b.labels:
        raise ValueError("rank results cover different node sets")
    n = a.n
    if n < 2:
        raise ValueError("need at least two nodes")
    nc, nd, n1, n2, _ = pair_counts(a.scores, b.scores)
    if variant == "paper":
        return 2.0 * (nc - nd) / (n * (n - 1))
    if variant == "tie-corrected":
        n0 = n * (n - 1) // 2
        denom = math.sqrt(float(n0 - n1)) * math.sqrt(float(n0 - n2))
        return (nc - nd) / denom if denom > 0 else float("nan")
    raise ValueError(f"unknown variant {variant!r}")


def individuation(result: RankResult) -> float:
    """Fraction of nodes whose score (at 1e-9 resolution) is unique."""
    rounded = np.round(result.scores, GAMMA_DECIMALS)
    _, inverse, counts = np.unique(rounded, return_inverse=True, return_counts=True)
    return float(np.count_nonzero(counts[inverse] == 1)) / result.n


def initializing_cost(g: Graph, seeds) -> float:
    """Sum over seeds of degree / empirical degree probability."""
    seeds = sorted(int(s) for s in seeds)
    if not seeds:
        raise ValueError("seed set is empty")
    deg = g.degrees
    freq = np.bincount(deg) / g.n
    return math.fsum(float(deg[s]) / freq[deg[s]] for s in seeds)


def _bfs_distances(g: Graph, source: int, targets: set[int]) -> dict[int, int]:
    dist = {source: 0}
    found = 1 if source in targets else 0
    queue = deque([source])
    while queue and found < len(targets):
        u = queue.popleft()
        for v in g.neighbors(u):
            v = int(v)
            if v not in dist:
                dist[v] = dist[u] + 1
                if v in targets:
                    found += 1
                queue.append(v)
    return dist


def seed_dispersion(g: Graph, seeds) -> tuple[float, int]:
    """Mean shortest-path distance over same-component seed pairs.

    Returns (mean distance, number of cross-component pairs excluded).
    """
    seeds = sorted(set(int(s) for s in seeds))
    if len(seeds) < 2:
        raise ValueError("need at least two seeds")
    seed_set = set(seeds)
    distances = []
    excluded = 0
    for idx, s in enumerate(seeds[:-1]):
        dist = _bfs_distances(g, s, seed_set)
        for t in seeds[idx + 1:]:
            if t in dist:
                distances.append(float(dist[t]))
            else:
                excluded += 1
    if not distances:
        raise DispersionUndefinedError("no seed pair shares a component")
    return math.fsum(distances) / len(distances), excluded
