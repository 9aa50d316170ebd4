"""Plain exhaustive enumeration of edge-deletion sets, vectorised with numpy.

This is the reference route for k-total bondage: every s-subset of edges is
generated, filtered for isolated vertices and tested for a surviving small
TD-set by brute force over vertex subsets.  It shares no search code with the
branching solver in :mod:`ktbondage.bondage`.

Subsets are scanned grouped by their largest edge index.  All subsets whose
largest index is ``j`` precede (in colex order) every subset whose largest
index exceeds ``j``, so the first group holding a valid set contains the
colex-least one.  Groups are the unit of work for ``jobs > 1``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from math import comb

import numpy as np

from .errors import BadParam, ExceedsSearchBudget
from .formulas import sanchis_value

_CHUNK_ELEMS = 1 << 21


def _vertex_sets(n: int, size: int) -> np.ndarray:
    size = min(size, n)
    return np.array(list(itertools.combinations(range(n), size)), dtype=np.intp).reshape(-1, size)


def has_small_td_set(adj: np.ndarray, n: int, size: int, vsets: np.ndarray | None = None) -> np.ndarray:
    """Row-wise: does the graph given by bitset row ``adj[i]`` have a TD-set of size <= ``size``?

    Supersets of TD-sets are TD-sets, so testing every vertex set of size
    exactly ``min(size, n)`` is enough.
    """
    out = np.zeros(adj.shape[0], dtype=bool)
    if size < 1 or adj.shape[0] == 0:
        return out
    if vsets is None:
        vsets = _vertex_sets(n, size)
    full = np.uint64((1 << n) - 1)
    per_row = max(1, vsets.size)
    step = max(1, _CHUNK_ELEMS // per_row)
    for lo in range(0, adj.shape[0], step):
        block = adj[lo:lo + step]
        vstep = max(1, _CHUNK_ELEMS // max(1, block.shape[0] * vsets.shape[1]))
        found = np.zeros(block.shape[0], dtype=bool)
        for vlo in range(0, vsets.shape[0], vstep):
            cover = np.bitwise_or.reduce(block[:, vsets[vlo:vlo + vstep]], axis=2)
            found |= (cover == full).any(axis=1)
        out[lo:lo + step] = found
    return out


def exact_gamma_rows(adj: np.ndarray, n: int) -> np.ndarray:
    """Total domination number of each row graph (rows must have no isolated vertex)."""
    gamma = np.full(adj.shape[0], n, dtype=np.int64)
    pending = np.arange(adj.shape[0])
    for t in range(2, n):
        if pending.size == 0:
            break
        hit = has_small_td_set(adj[pending], n, t)
        gamma[pending[hit]] = t
        pending = pending[~hit]
    return gamma


def connected_rows(adj: np.ndarray, n: int) -> np.ndarray:
    full = np.uint64((1 << n) - 1)
    reach = np.ones(adj.shape[0], dtype=np.uint64)
    for _ in range(n):
        grown = reach.copy()
        for v in range(n):
            on = ((reach >> np.uint64(v)) & np.uint64(1)).astype(bool)
            grown[on] |= adj[on, v]
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach == full


class _Level:
    """Shared data for scanning deletion sets of one size."""

    def __init__(self, n, adj, edges, target, sanchis_cut):
        self.n = n
        self.base = np.array(adj, dtype=np.uint64)
        self.m = len(edges)
        clear = np.zeros((self.m, n), dtype=np.uint64)
        for i, (u, v) in enumerate(edges):
            clear[i, u] |= np.uint64(1 << v)
            clear[i, v] |= np.uint64(1 << u)
        self.clear = clear
        self.target = target
        self.sanchis_cut = sanchis_cut
        self.vsets = _vertex_sets(n, target - 1) if target - 1 <= n else None

    def rows(self, idx: np.ndarray) -> np.ndarray:
        removed = np.bitwise_or.reduce(self.clear[idx], axis=1)
        return self.base & ~removed

    def valid(self, idx: np.ndarray) -> np.ndarray:
        """Which index rows are valid deletion sets for the target."""
        adj = self.rows(idx)
        ok = ~(adj == 0).any(axis=1)
        if self.target - 1 >= self.n:
            return np.zeros(idx.shape[0], dtype=bool)
        if self.sanchis_cut:
            # connected survivors exceed the edge bound, so their gamma_t is below target
            ok[ok] &= ~connected_rows(adj[ok], self.n)
        if ok.any():
            ok[ok] = ~has_small_td_set(adj[ok], self.n, self.target - 1, self.vsets)
        return ok


def _scan_group(level: _Level, s: int, j: int) -> int | None:
    """Colex-least valid s-subset whose largest edge index is ``j`` (as a bitmask)."""
    if s == 1:
        idx = np.array([[j]], dtype=np.intp)
        return (1 << j) if level.valid(idx)[0] else None
    best = None
    stream = itertools.combinations(range(j), s - 1)
    step = max(1, _CHUNK_ELEMS // (level.n * s * 4))
    while True:
        flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(stream, step)),
                           dtype=np.intp)
        if flat.size == 0:
            break
        head = flat.reshape(-1, s - 1)
        idx = np.hstack([head, np.full((head.shape[0], 1), j, dtype=np.intp)])
        ok = level.valid(idx)
        if ok.any():
            masks = np.bitwise_or.reduce(np.left_shift(np.uint64(1), idx[ok].astype(np.uint64)),
                                         axis=1)
            cand = int(masks.min())
            best = cand if best is None else min(best, cand)
    return best


def _scan_task(args):
    level, s, j = args
    return _scan_group(level, s, j)


def scan_level(n, adj, edges, s, target, *, sanchis=False, jobs=1, pool=None) -> int | None:
    """Colex-least valid deletion set of exactly ``s`` edges, or None."""
    m = len(edges)
    if m > 63 or n > 63:
        raise BadParam("exhaustive enumeration is limited to 63 vertices and 63 edges")
    cut = sanchis and target >= 5 and target <= n and m - s > sanchis_value(n, target)
    level = _Level(n, adj, edges, target, cut)
    groups = range(s - 1, m)
    if jobs <= 1 or pool is None:
        for j in groups:
            found = _scan_group(level, s, j)
            if found is not None:
                return found
        return None
    for found in pool.map(_scan_task, [(level, s, j) for j in groups]):
        if found is not None:
            return found
    return None


def enumerate_bondage(n, adj, edges, target, *, start=1, sanchis=False, jobs=1,
                      budget=10**8) -> int | None:
    """Smallest-size, colex-least valid deletion set as an edge bitmask, or None."""
    m = len(edges)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for s in range(max(start, 1), m + 1):
            if comb(m, s) > budget:
                raise ExceedsSearchBudget(
                    f"level {s} needs {comb(m, s)} subsets, over the budget of {budget}")
            found = scan_level(n, adj, edges, s, target, sanchis=sanchis, jobs=jobs, pool=pool)
            if found is not None:
                return found
        return None
    finally:
        if pool is not None:
            pool.shutdown()


def enumerate_max_gamma(n, adj, edges, *, budget=10**8) -> int:
    """Largest gamma_t over all spanning subgraphs without isolated vertices."""
    m = len(edges)
    if 2 ** m > budget:
        raise ExceedsSearchBudget(f"{2 ** m} subsets exceed the budget of {budget}")
    level = _Level(n, adj, edges, 2, False)
    best = 0
    for s in range(0, m + 1):
        if s == 0:
            rows = level.base[None, :]
        else:
            idx = np.array(list(itertools.combinations(range(m), s)), dtype=np.intp)
            rows = level.rows(idx)
        rows = rows[~(rows == 0).any(axis=1)]
        if rows.shape[0]:
            best = max(best, int(exact_gamma_rows(rows, n).max()))
    return best
