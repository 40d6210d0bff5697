"""Discrete-time SIR spreading: Monte Carlo engine and analytic threshold.

Dynamics per synchronous step: every infectious node attempts to infect
each currently susceptible neighbor independently with probability beta
(nodes infected this step become infectious next step), then every node
that was infectious at step start recovers with probability mu. A node
therefore always gets at least one full round of transmission attempts
before it can recover. Runs end when no infectious node remains, so the
final recovered fraction equals the ever-infected fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .backend import kernels
from .graph import Graph, degree_moments
from .ranking import RankResult

__all__ = [
    "SirConfig",
    "SirOutcome",
    "ThresholdUndefinedError",
    "beta_c",
    "simulate",
    "select_seeds",
]

DEFAULT_MU = 0.5
DEFAULT_RUNS = 1000
DEFAULT_RNG_SEED = 42


class ThresholdUndefinedError(ValueError):
    """Raised when the analytic epidemic threshold is undefined for a graph."""


@dataclass(frozen=True)
class SirConfig:
    beta: float
    seeds: tuple[int, ...]
    mu: float = DEFAULT_MU
    runs: int = DEFAULT_RUNS
    rng_seed: int = DEFAULT_RNG_SEED

    def validate(self, n: int) -> None:
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta {self.beta} outside [0, 1]")
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu {self.mu} outside (0, 1]")
        if self.runs < 1:
            raise ValueError("runs must be positive")
        if not self.seeds:
            raise ValueError("seed set is empty")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("seed set has duplicates")
        for s in self.seeds:
            if not 0 <= s < n:
                raise ValueError(f"seed node {s} out of range [0, {n})")


@dataclass(frozen=True)
class SirOutcome:
    """Final ever-infected fraction averaged over runs."""

    r_mean: float
    r_std: float  # sample std (ddof=1) across runs, 0 for a single run
    runs: int
    per_run: np.ndarray = field(repr=False)
    trajectories: list | None = field(default=None, repr=False)

    def trajectory_lengths(self) -> list[int] | None:
        if self.trajectories is None:
            return None
        return [len(t) - 1 for t in self.trajectories]  # steps, not rows


def beta_c(g: Graph) -> float:
    """Analytic epidemic threshold <k> / (<k^2> - 2<k>), clamped to (0, 1]."""
    k1, k2 = degree_moments(g)
    denom = k2 - 2.0 * k1
    if denom <= 0.0:
        raise ThresholdUndefinedError(
            f"threshold undefined: <k^2>={k2:.6g} <= 2<k>={2 * k1:.6g}")
    return min(1.0, k1 / denom)


def simulate(g: Graph, cfg: SirConfig, record: bool = False) -> SirOutcome:
    """Monte Carlo SIR; identical (graph, cfg) gives identical outcomes.

    Per-run RNG streams derive from (cfg.rng_seed, run index), so runs are
    reproducible independently of execution order.
    """
    cfg.validate(g.n)
    counts, trajectories = kernels.sir_runs(
        g.indptr, g.indices, list(cfg.seeds), cfg.beta, cfg.mu,
        cfg.runs, cfg.rng_seed, record)
    counts = np.asarray(counts, dtype=np.int64)
    per_run = counts / g.n
    # one exact integer ratio, so degenerate cases stay exact (beta = 0
    # gives precisely |seeds| / n)
    r_mean = int(counts.sum()) / (cfg.runs * g.n)
    std = float(per_run.std(ddof=1)) if cfg.runs > 1 else 0.0
    return SirOutcome(r_mean=r_mean, r_std=std,
                      runs=cfg.runs, per_run=per_run, trajectories=trajectories)


def select_seeds(result: RankResult, fraction: float) -> tuple[int, ...]:
    """Top ceil(fraction * n) nodes by rank order.

    The small downward guard keeps binary-float artifacts such as
    0.02 * 1000 == 20.000000000000004 from inflating the ceiling.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction {fraction} outside (0, 1]")
    count = max(1, math.ceil(fraction * result.n - 1e-9))
    return tuple(int(v) for v in result.top(min(count, result.n)))
