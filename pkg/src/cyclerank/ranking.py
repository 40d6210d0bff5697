"""Per-node score vectors with a deterministic total rank order."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["RankResult"]


@dataclass(frozen=True)
class RankResult:
    """Scores plus a total order: descending score, ties by ascending label.

    `order[r]` is the node id at rank r+1; `scores` is indexed by node id.
    """

    method: str
    scores: np.ndarray  # float64 per node
    labels: tuple[str, ...]
    order: np.ndarray  # intp, permutation of range(n)

    @classmethod
    def from_scores(cls, method: str, scores, labels: tuple[str, ...]) -> "RankResult":
        scores = np.asarray(scores, dtype=np.float64)
        if scores.ndim != 1 or len(scores) != len(labels):
            raise ValueError("scores and labels must be 1-d and the same length")
        if not np.all(np.isfinite(scores)):
            raise ValueError(f"{method}: non-finite score")
        order = sorted(range(len(labels)), key=lambda i: (-scores[i], labels[i]))
        return cls(method=method, scores=scores,
                   labels=tuple(labels), order=np.asarray(order, dtype=np.intp))

    @property
    def n(self) -> int:
        return len(self.labels)

    def top(self, count: int) -> np.ndarray:
        """Node ids of the `count` best-ranked nodes."""
        if not 1 <= count <= self.n:
            raise ValueError(f"count {count} out of range [1, {self.n}]")
        return self.order[:count]

    def rank_of(self) -> np.ndarray:
        """1-based rank per node id."""
        ranks = np.empty(self.n, dtype=np.int64)
        ranks[self.order] = np.arange(1, self.n + 1)
        return ranks

    def rows(self):
        """(label, score, rank) triples in rank order, for serialization."""
        for pos, node in enumerate(self.order, start=1):
            yield self.labels[node], float(self.scores[node]), pos
