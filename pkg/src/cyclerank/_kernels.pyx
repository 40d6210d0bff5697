# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops (SIR Monte Carlo, betweenness).

Mirrors cyclerank._kernels_py operation for operation, including the order
in which uniform variates are consumed, so both backends are bit-identical
for the same seed.
"""

import numpy as np

from cpython.pycapsule cimport PyCapsule_GetPointer
from numpy.random cimport bitgen_t

BACKEND_NAME = "compiled"

cdef enum:
    ST_S = 0
    ST_I = 1
    ST_R = 2
    ST_NEW = 3


def sir_runs(indptr, indices, seeds, double beta, double mu, int runs,
             rng_seed, bint record=False):
    """Monte Carlo SIR runs; returns (recovered count per run, trajectories).

    Counts are integers so callers can form exact ratios."""
    cdef long long[:] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int[:] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = iptr.shape[0] - 1
    cdef int[:] seed_nodes = np.asarray(sorted(int(s) for s in seeds), dtype=np.int32)
    cdef int n_seeds = seed_nodes.shape[0]

    out_arr = np.empty(runs, dtype=np.int64)
    cdef long long[:] out = out_arr
    trajectories = [] if record else None

    status_arr = np.zeros(n, dtype=np.int8)
    inf_arr = np.empty(n, dtype=np.int32)
    cdef signed char[:] status = status_arr
    cdef int[:] infectious = inf_arr

    cdef bitgen_t *rng
    cdef int run, i, u, v, cnt, recovered
    cdef long long e

    for run in range(runs):
        bg = np.random.PCG64(np.random.SeedSequence([rng_seed, run]))
        rng = <bitgen_t *> PyCapsule_GetPointer(bg.capsule, "BitGenerator")
        with bg.lock:
            for i in range(n):
                status[i] = ST_S
            cnt = 0
            for i in range(n_seeds):
                status[seed_nodes[i]] = ST_I
                infectious[cnt] = seed_nodes[i]
                cnt += 1
            recovered = 0
            traj = [(n - cnt, cnt, 0)] if record else None
            while cnt > 0:
                # infection attempts by every infectious node, ascending id;
                # a node infected earlier in this step is no longer attacked
                for i in range(cnt):
                    u = infectious[i]
                    for e in range(iptr[u], iptr[u + 1]):
                        v = idx[e]
                        if status[v] == ST_S and rng.next_double(rng.state) < beta:
                            status[v] = ST_NEW
                # recovery draws for nodes infectious at step start
                for i in range(cnt):
                    u = infectious[i]
                    if rng.next_double(rng.state) < mu:
                        status[u] = ST_R
                        recovered += 1
                # collect survivors plus newly infected, ascending
                cnt = 0
                for v in range(n):
                    if status[v] == ST_NEW:
                        status[v] = ST_I
                        infectious[cnt] = v
                        cnt += 1
                    elif status[v] == ST_I:
                        infectious[cnt] = v
                        cnt += 1
                if record:
                    traj.append((n - cnt - recovered, cnt, recovered))
            out[run] = recovered
            if record:
                trajectories.append(np.asarray(traj, dtype=np.int64))
    return out_arr, trajectories


def brandes_bc(indptr, indices):
    """Exact betweenness, unordered pairs counted once, endpoints excluded."""
    cdef long long[:] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int[:] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = iptr.shape[0] - 1
    cdef long long m2 = idx.shape[0]

    bc_arr = np.zeros(n, dtype=np.float64)
    cdef double[:] bc = bc_arr
    cdef int[:] dist = np.empty(n, dtype=np.int32)
    cdef double[:] sigma = np.empty(n, dtype=np.float64)
    cdef double[:] delta = np.empty(n, dtype=np.float64)
    cdef int[:] queue = np.empty(n, dtype=np.int32)
    cdef int[:] pred_count = np.empty(n, dtype=np.int32)
    cdef int[:] preds = np.empty(max(m2, 1), dtype=np.int32)

    cdef int s, v, w, head, qlen, i
    cdef long long e
    cdef double sv, coeff

    for s in range(n):
        for v in range(n):
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
            pred_count[v] = 0
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        qlen = 1
        head = 0
        while head < qlen:
            v = queue[head]
            head += 1
            sv = sigma[v]
            for e in range(iptr[v], iptr[v + 1]):
                w = idx[e]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[qlen] = w
                    qlen += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sv
                    preds[iptr[w] + pred_count[w]] = v
                    pred_count[w] += 1
        for i in range(qlen - 1, -1, -1):
            w = queue[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            for e in range(iptr[w], iptr[w] + pred_count[w]):
                v = preds[e]
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return bc_arr / 2.0
