"""Spanning forests, basic cycles, and cycle-ratio scores over them.

A basic cycle is the unique cycle closed by one non-tree edge over a
spanning forest: the edge (s, t) plus the tree path between s and t. The
forest is the minimum spanning forest under seeded i.i.d. uniform edge
weights, so one integer seed pins the whole construction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .graph import Graph
from .ranking import RankResult

__all__ = [
    "SpanningForest",
    "BasicCycle",
    "BasicCycleSet",
    "CycleMatrix",
    "spanning_forest",
    "basic_cycles",
    "nc_scores",
    "cycle_matrix",
    "bcr_scores",
    "dump_basic_cycles",
]

DEFAULT_TREE_SEED = 42


@dataclass(frozen=True)
class SpanningForest:
    """Rooted spanning forest: parent (-1 at roots), depth, and edge split."""

    parent: np.ndarray  # int32 per node
    depth: np.ndarray  # int32 per node
    tree_edges: frozenset  # of (u, v) with u < v
    non_tree_edges: np.ndarray  # int32 (k, 2), lexicographic order
    rng_seed: int


@dataclass(frozen=True)
class BasicCycle:
    nodes: frozenset
    edge: tuple[int, int]


@dataclass(frozen=True)
class BasicCycleSet:
    """Basic cycles in flat form: cycle i is nodes[offsets[i]:offsets[i+1]],
    sorted ascending; edges[i] is the generating non-tree edge."""

    offsets: np.ndarray  # int64, len k + 1
    nodes: np.ndarray  # int32, concatenated sorted node sets
    edges: np.ndarray  # int32 (k, 2)
    n: int

    def __len__(self) -> int:
        return len(self.offsets) - 1

    def cycle(self, i: int) -> BasicCycle:
        nodes = self.nodes[self.offsets[i]:self.offsets[i + 1]]
        return BasicCycle(nodes=frozenset(int(v) for v in nodes),
                          edge=(int(self.edges[i, 0]), int(self.edges[i, 1])))

    def __iter__(self):
        return (self.cycle(i) for i in range(len(self)))


@dataclass(frozen=True)
class CycleMatrix:
    """Symmetric co-occurrence counts over a cycle collection.

    counts[i, j] is the number of cycles containing both i and j; the
    diagonal (cycles containing i) is also exposed as a dense vector.
    """

    counts: sparse.csr_matrix  # int32, n x n, sorted indices
    diag: np.ndarray  # int64 per node
    n: int

    def entry(self, i: int, j: int) -> int:
        return int(self.counts[i, j])

    def row(self, i: int) -> dict[int, int]:
        a, b = self.counts.indptr[i], self.counts.indptr[i + 1]
        return {int(j): int(c) for j, c in
                zip(self.counts.indices[a:b], self.counts.data[a:b])}


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def spanning_forest(g: Graph, seed: int = DEFAULT_TREE_SEED) -> SpanningForest:
    """Minimum spanning forest under seeded uniform random edge weights.

    Same (graph, seed) always yields the identical forest; varying the seed
    samples different forests and hence different basic-cycle sets.
    """
    edges = g.edges()
    m = len(edges)
    weights = np.random.default_rng(seed).random(m)
    order = np.argsort(weights, kind="stable")
    uf = _UnionFind(g.n)
    in_tree = np.zeros(m, dtype=bool)
    for e in order:
        u, v = int(edges[e, 0]), int(edges[e, 1])
        if uf.union(u, v):
            in_tree[e] = True
    tree_adj: list[list[int]] = [[] for _ in range(g.n)]
    tree_edges = set()
    for e in np.flatnonzero(in_tree):
        u, v = int(edges[e, 0]), int(edges[e, 1])
        tree_adj[u].append(v)
        tree_adj[v].append(u)
        tree_edges.add((u, v))
    parent = np.full(g.n, -1, dtype=np.int32)
    depth = np.zeros(g.n, dtype=np.int32)
    seen = np.zeros(g.n, dtype=bool)
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in tree_adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
    non_tree = edges[~in_tree].astype(np.int32)
    return SpanningForest(parent=parent, depth=depth,
                          tree_edges=frozenset(tree_edges),
                          non_tree_edges=non_tree, rng_seed=seed)


def basic_cycles(g: Graph, forest: SpanningForest) -> BasicCycleSet:
    """One cycle per non-tree edge: the edge plus the tree path between its
    endpoints, found by walking parent pointers to the lowest common ancestor."""
    parent = forest.parent.tolist()
    depth = forest.depth.tolist()
    flat: list[int] = []
    offsets = [0]
    for s, t in forest.non_tree_edges:
        a, b = int(s), int(t)
        path_a = [a]
        path_b = [b]
        while depth[a] > depth[b]:
            a = parent[a]
            path_a.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            path_b.append(b)
        while a != b:
            a = parent[a]
            path_a.append(a)
            b = parent[b]
            path_b.append(b)
        cycle = path_a + path_b[:-1]  # drop the duplicated meet node
        cycle.sort()
        flat.extend(cycle)
        offsets.append(len(flat))
    return BasicCycleSet(offsets=np.asarray(offsets, dtype=np.int64),
                         nodes=np.asarray(flat, dtype=np.int32),
                         edges=forest.non_tree_edges.reshape(-1, 2),
                         n=g.n)


def nc_scores(cycles: BasicCycleSet, labels: tuple[str, ...]) -> RankResult:
    """Number of basic cycles through each node."""
    counts = np.bincount(cycles.nodes, minlength=cycles.n).astype(np.float64)
    return RankResult.from_scores("nc", counts, labels)


def cycle_matrix(cycles: BasicCycleSet, n: int) -> CycleMatrix:
    """Co-occurrence counts c_ij over the cycle set.

    Computed as incidence^T @ incidence, cost O(sum of |c|^2 over cycles);
    this is the module's hot accumulation and runs inside scipy's sparse
    matmul.
    """
    k = len(cycles)
    if k == 0:
        counts = sparse.csr_matrix((n, n), dtype=np.int32)
    else:
        data = np.ones(len(cycles.nodes), dtype=np.int32)
        incidence = sparse.csr_matrix(
            (data, cycles.nodes, cycles.offsets), shape=(k, n))
        counts = (incidence.T @ incidence).tocsr()
        counts.sort_indices()
    diag = np.bincount(cycles.nodes, minlength=n).astype(np.int64)
    return CycleMatrix(counts=counts, diag=diag, n=n)


def bcr_scores(cm: CycleMatrix, labels: tuple[str, ...]) -> RankResult:
    """Cycle-ratio score over the basic-cycle matrix.

    Score_i = 0 when c_ii = 0, else the sum over all j with c_ij > 0 of
    c_ij / c_jj (the self term contributes exactly 1). Each row is summed
    with math.fsum so the value is the correctly rounded sum, independent
    of term order.
    """
    c = cm.counts
    diag = cm.diag.astype(np.float64)
    terms = c.data / diag[c.indices]  # c_ij > 0 implies c_jj > 0
    scores = np.zeros(cm.n, dtype=np.float64)
    indptr = c.indptr
    for i in range(cm.n):
        if cm.diag[i] > 0:
            scores[i] = math.fsum(terms[indptr[i]:indptr[i + 1]])
    return RankResult.from_scores("bcr", scores, labels)


def dump_basic_cycles(cycles: BasicCycleSet, labels: tuple[str, ...]) -> str:
    """Debug dump: one cycle per line, node labels sorted within the line,
    lines sorted; stable across runs for a fixed (graph, seed)."""
    lines = []
    for i in range(len(cycles)):
        members = cycles.nodes[cycles.offsets[i]:cycles.offsets[i + 1]]
        lines.append(" ".join(sorted(labels[v] for v in members)))
    lines.sort()
    return "\n".join(lines) + "\n" if lines else ""
