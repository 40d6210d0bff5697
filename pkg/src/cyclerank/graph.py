"""Undirected simple graphs with dense integer ids and CSR adjacency.

Input graphs come from whitespace-separated edge lists. Self-loops and
duplicate edges (including reversed duplicates, which symmetrizes directed
files) are dropped at construction and counted in a dedup report.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

__all__ = [
    "Graph",
    "ComponentLabeling",
    "DedupReport",
    "GraphParseError",
    "build_graph",
    "parse_edge_list",
    "load_edge_list",
    "degree",
    "components",
    "degree_moments",
    "density",
    "average_clustering",
    "to_canonical_edge_list",
]

COMMENT_PREFIXES = ("#", "%")


class GraphParseError(ValueError):
    """Raised for malformed edge-list input."""


@dataclass(frozen=True)
class DedupReport:
    self_loops: int = 0
    duplicates: int = 0


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    `indptr`/`indices` form a CSR adjacency: the neighbors of node i are
    ``indices[indptr[i]:indptr[i + 1]]``, sorted ascending. `labels` maps the
    internal 0-based id back to the original string identifier.
    """

    n: int
    m: int
    indptr: np.ndarray  # int64, len n + 1
    indices: np.ndarray  # int32, len 2m, sorted within each row
    labels: tuple[str, ...]
    dedup: DedupReport = field(default=DedupReport(), compare=False)

    def neighbors(self, i: int) -> np.ndarray:
        if not 0 <= i < self.n:
            raise IndexError(f"node index {i} out of range [0, {self.n})")
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.int64)

    def edges(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        u = np.repeat(np.arange(self.n, dtype=np.int32), np.diff(self.indptr))
        v = self.indices
        keep = u < v
        return np.column_stack([u[keep], v[keep]])

    def label_to_id(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


@dataclass(frozen=True)
class ComponentLabeling:
    component_id: np.ndarray  # int32 per node, dense from 0
    count: int

    def sizes(self) -> np.ndarray:
        return np.bincount(self.component_id, minlength=self.count)


def _build(pairs: set[tuple[int, int]], labels: list[str], dedup: DedupReport) -> Graph:
    n = len(labels)
    if n == 0:
        raise GraphParseError("edge list contains no nodes")
    m = len(pairs)
    deg = np.zeros(n, dtype=np.int64)
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.empty(2 * m, dtype=np.int32)
    cursor = indptr[:-1].copy()
    for u, v in pairs:
        indices[cursor[u]] = v
        cursor[u] += 1
        indices[cursor[v]] = u
        cursor[v] += 1
    for i in range(n):
        indices[indptr[i]:indptr[i + 1]].sort()
    return Graph(n=n, m=m, indptr=indptr, indices=indices,
                 labels=tuple(labels), dedup=dedup)


def build_graph(labels: list[str] | tuple[str, ...],
                edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph from explicit labels and id pairs.

    Unlike the parser this raises on self-loops and duplicates, and it can
    represent isolated nodes (which an edge list cannot).
    """
    labels = list(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise ValueError("duplicate labels")
    pairs: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at node {u}")
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            raise ValueError(f"duplicate edge ({u}, {v})")
        pairs.add(key)
    return _build(pairs, labels, DedupReport())


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse a whitespace-separated edge list into a Graph.

    Lines starting with '#' or '%' are comments; blank lines are skipped.
    Labels are assigned dense 0-based ids in first-appearance order.
    Self-loops and repeated edges are dropped silently (counts retrievable
    via ``graph.dedup``). A line whose token count is not 2 is an error.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    label_ids: dict[str, int] = {}
    labels: list[str] = []
    pairs: set[tuple[int, int]] = set()
    self_loops = 0
    duplicates = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}: {line!r}")
        ids = []
        for tok in tokens:
            node_id = label_ids.get(tok)
            if node_id is None:
                node_id = len(labels)
                label_ids[tok] = node_id
                labels.append(tok)
            ids.append(node_id)
        u, v = ids
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            duplicates += 1
            continue
        pairs.add(key)
    return _build(pairs, labels, DedupReport(self_loops, duplicates))


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh)


def degree(g: Graph, i: int) -> int:
    """Number of neighbors of node i."""
    return int(len(g.neighbors(i)))


def components(g: Graph) -> ComponentLabeling:
    """Connected components via BFS; ids are dense, in order of smallest member."""
    comp = np.full(g.n, -1, dtype=np.int32)
    count = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if comp[v] < 0:
                    comp[v] = count
                    queue.append(int(v))
        count += 1
    return ComponentLabeling(component_id=comp, count=count)


def degree_moments(g: Graph) -> tuple[float, float]:
    """(mean degree, mean squared degree)."""
    deg = g.degrees.astype(np.float64)
    return float(deg.mean()), float((deg * deg).mean())


def density(g: Graph) -> float:
    if g.n < 2:
        return 0.0
    return 2.0 * g.m / (g.n * (g.n - 1))


def average_clustering(g: Graph) -> float:
    """Mean local clustering coefficient; nodes with degree < 2 contribute 0."""
    adj_sets = [set(map(int, g.neighbors(i))) for i in range(g.n)]
    total = 0.0
    for i in range(g.n):
        neigh = g.neighbors(i)
        k = len(neigh)
        if k < 2:
            continue
        links = 0
        for a_idx in range(k):
            sa = adj_sets[neigh[a_idx]]
            for b_idx in range(a_idx + 1, k):
                if int(neigh[b_idx]) in sa:
                    links += 1
        total += 2.0 * links / (k * (k - 1))
    return total / g.n


def to_canonical_edge_list(g: Graph) -> str:
    """Canonical serialization: 'label_u label_v' per line, endpoints sorted
    lexicographically within each line, lines sorted; trailing newline."""
    rows = []
    for u, v in g.edges():
        a, b = g.labels[u], g.labels[v]
        if b < a:
            a, b = b, a
        rows.append(f"{a} {b}")
    rows.sort()
    return "\n".join(rows) + "\n" if rows else ""
