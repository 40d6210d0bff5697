"""Pure-Python kernels: reference implementations of the hot loops.

These mirror cyclerank._kernels (the Cython extension) operation for
operation. The SIR kernel consumes uniform draws in a fixed documented
order, so both backends produce bit-identical results from the same seed:

  per step: for each infectious node (ascending id), one draw per neighbor
  that is still susceptible at the moment of the attempt (adjacency order);
  then one recovery draw per node that was infectious at step start
  (ascending id). Nodes infected during a step become infectious the next
  step and are not re-attacked within the step.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_S, _I, _R, _NEW = 0, 1, 2, 3


def sir_runs(indptr, indices, seeds, beta, mu, runs, rng_seed, record=False):
    """Monte Carlo SIR runs; returns (recovered count per run, trajectories).

    Counts are integers so callers can form exact ratios. Trajectories
    (when record=True) are int64 arrays of (S, I, R) counts, one row for
    the initial state and one per completed step.
    """
    n = len(indptr) - 1
    out = np.empty(runs, dtype=np.int64)
    trajectories = [] if record else None
    seeds = sorted(int(s) for s in seeds)
    for run in range(runs):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([rng_seed, run])))
        status = np.zeros(n, dtype=np.int8)
        infectious = list(seeds)
        for s in infectious:
            status[s] = _I
        recovered = 0
        traj = [(n - len(infectious), len(infectious), 0)] if record else None
        while infectious:
            newly = []
            for u in infectious:
                for v in indices[indptr[u]:indptr[u + 1]]:
                    if status[v] == _S and rng.random() < beta:
                        status[v] = _NEW
                        newly.append(int(v))
            remaining = []
            for u in infectious:
                if rng.random() < mu:
                    status[u] = _R
                    recovered += 1
                else:
                    remaining.append(u)
            for v in newly:
                status[v] = _I
            infectious = sorted(remaining + newly)
            if record:
                infected = len(infectious)
                traj.append((n - infected - recovered, infected, recovered))
        out[run] = recovered
        if record:
            trajectories.append(np.asarray(traj, dtype=np.int64))
    return out, trajectories


def brandes_bc(indptr, indices):
    """Exact betweenness, unordered pairs counted once, endpoints excluded."""
    n = len(indptr) - 1
    bc = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        preds = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1.0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            dv = dist[v]
            sv = sigma[v]
            for w in indices[indptr[v]:indptr[v + 1]]:
                w = int(w)
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(queue):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return np.asarray(bc, dtype=np.float64) / 2.0
