"""Exact k-total bondage numbers with replayable certificates.

``B_t^k(G)`` is the fewest edges whose deletion (never isolating a vertex)
raises ``gamma_t`` by at least ``k``.  Deletion sets are identified with
bitmasks over the canonical edge order of ``g.edges``; the reported witness
is the colex-least valid set of minimum size, i.e. the one whose bitmask is
numerically smallest.

Two routes compute it:

* the pruned route (default) is a branching search.  A deletion set ``S`` is
  valid exactly when no TD-set of size ``< gamma_t(G) + k`` survives in
  ``G - S``.  Given a surviving TD-set ``D``, any valid superset of ``S`` must
  delete every remaining edge between some vertex ``v`` and ``D``; branching
  over ``v`` is therefore complete.  Iterative deepening on ``|S|`` starts at
  ``ceil(k/2)`` and a node is cut when even ``+2`` per remaining deletion
  cannot reach the target.
* ``prune=False`` enumerates every edge subset by size in colex order (see
  :mod:`ktbondage.exhaustive`).
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import ceil

from .domination import DominationCertificate, find_td_set, gamma_t, is_td_set
from .errors import BadParam, ExceedsSearchBudget, MissingEdge
from .formulas import sanchis_value
from .graph import EdgeSet, Graph, bits, has_isolated_vertex, remove_edges

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("BONDAGE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class BondageCertificate:
    k: int
    deleted: EdgeSet
    before: DominationCertificate
    after: DominationCertificate

    @property
    def bondage(self) -> int:
        return len(self.deleted)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "bondage": self.bondage,
            "deleted": self.deleted.to_list(),
            "gamma_before": self.before.gamma_t,
            "witness_before": list(self.before.witness),
            "gamma_after": self.after.gamma_t,
            "witness_after": list(self.after.witness),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BondageCertificate":
        return cls(
            int(d["k"]),
            EdgeSet.of(d["deleted"]),
            DominationCertificate(int(d["gamma_before"]), tuple(sorted(d["witness_before"]))),
            DominationCertificate(int(d["gamma_after"]), tuple(sorted(d["witness_after"]))),
        )


@dataclass(frozen=True)
class BondageOutcome:
    k: int
    certificate: BondageCertificate | None = None
    max_increase: int | None = None

    @property
    def achievable(self) -> bool:
        return self.certificate is not None

    @property
    def bondage(self) -> int | None:
        return self.certificate.bondage if self.certificate else None

    def to_dict(self) -> dict:
        if self.certificate is not None:
            return {"status": "achieved", **self.certificate.to_dict()}
        return {"status": "not_achievable", "k": self.k, "max_increase": self.max_increase}


def lower_bound(k: int) -> int:
    """Each deletion raises gamma_t by at most 2, so at least ``ceil(k/2)`` are needed."""
    if k < 1:
        raise BadParam(f"k must be >= 1, got {k}")
    return ceil(k / 2)


def sanchis_max_edges(n: int, gamma: int) -> int:
    """Most edges a connected n-vertex graph with ``gamma_t >= gamma >= 5`` can have."""
    if gamma < 5:
        raise BadParam(f"the edge bound needs gamma >= 5, got {gamma}")
    if gamma > n:
        raise BadParam(f"gamma {gamma} exceeds the order {n}")
    return sanchis_value(n, gamma)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise ExceedsSearchBudget(f"search visited more than {self.limit} deletion sets")


class _BranchSearch:
    """Feasibility queries: is there a valid deletion set within a size limit?"""

    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = list(g.edges)
        self.adj = g.adj
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        # edge bitmask between v and each neighbour
        self.inc = [dict() for _ in range(g.n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u][v] = 1 << i
            self.inc[v][u] = 1 << i

    def apply(self, removed: int) -> list[int] | None:
        adj = list(self.adj)
        for i in bits(removed):
            u, v = self.edges[i]
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return None if any(a == 0 for a in adj) else adj

    def branches(self, adj: list[int], dset: int, exclude: int):
        """Deletion steps that destroy the TD-set ``dset``, with degree checks."""
        seen = set()
        out = []
        for v in range(self.n):
            hit = adj[v] & dset
            if adj[v] == hit:
                continue  # v would lose every neighbour
            step = 0
            ok = True
            for d in bits(hit):
                if adj[d] == 1 << v:
                    ok = False  # d would be isolated
                    break
                step |= self.inc[v][d]
            if not ok or step & exclude or step in seen:
                continue
            seen.add(step)
            out.append((step.bit_count(), v, step))
        out.sort()
        return [(v, step) for _, v, step in out]

    def probe(self, adj: list[int], limit: int) -> tuple[int, int] | None:
        """``(gamma_t, D)`` for the current graph when ``gamma_t <= limit``, else None.

        ``D`` is a minimum TD-set padded with high-degree vertices up to
        ``limit``; it is still a TD-set that must be destroyed, and a larger
        ``D`` makes each branching step delete more edges.
        """
        for t in range(2, limit + 1):
            found = find_td_set(adj, self.n, t)
            if found is not None:
                break
        else:
            return None
        gamma = found.bit_count()
        for v in sorted(range(self.n), key=lambda v: -adj[v].bit_count()):
            if found.bit_count() >= limit:
                break
            found |= 1 << v
        return gamma, found

    def search(self, target, size_limit, budget: _Budget, start=0, exclude=0,
               use_bound=True) -> int | None:
        """Some valid set ``S`` with ``start <= S``, ``S & exclude == 0``, ``|S| <= size_limit``."""
        adj = self.apply(start)
        if adj is None or start.bit_count() > size_limit:
            return None
        failed: set[int] = set()

        def rec(removed: int, adj: list[int]) -> int | None:
            budget.tick()
            probed = self.probe(adj, target - 1)
            if probed is None:
                return removed
            gamma, dset = probed
            spare = size_limit - removed.bit_count()
            if use_bound and gamma + 2 * spare < target:
                return None
            for v, step in self.branches(adj, dset, exclude):
                if step.bit_count() > spare:
                    continue
                nxt = removed | step
                if nxt in failed:
                    continue
                child = list(adj)
                for d in bits(adj[v] & dset):
                    child[v] &= ~(1 << d)
                    child[d] &= ~(1 << v)
                found = rec(nxt, child)
                if found is not None:
                    return found
                failed.add(nxt)
            return None

        return rec(start, adj)

    def root_tasks(self, target, size_limit, start, exclude):
        """Split a query into independent sub-queries, one per root branch."""
        adj = self.apply(start)
        if adj is None or start.bit_count() > size_limit:
            return None, []
        probed = self.probe(adj, target - 1)
        if probed is None:
            return start, []
        dset = probed[1]
        spare = size_limit - start.bit_count()
        tasks = [start | step for _, step in self.branches(adj, dset, exclude)
                 if step.bit_count() <= spare]
        return None, tasks


def _run_subtask(args):
    search, target, size_limit, start, exclude, limit = args
    budget = _Budget(limit)
    found = search.search(target, size_limit, budget, start=start, exclude=exclude)
    return found, budget.used


class _Driver:
    """Runs feasibility queries serially or fanned out over worker processes."""

    def __init__(self, search: _BranchSearch, budget: _Budget, jobs: int):
        self.search = search
        self.budget = budget
        self.jobs = jobs
        self.pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()

    def query(self, target, size_limit, start=0, exclude=0) -> int | None:
        if self.pool is None:
            return self.search.search(target, size_limit, self.budget, start, exclude)
        done, tasks = self.search.root_tasks(target, size_limit, start, exclude)
        self.budget.tick()
        if done is not None:
            return done
        remaining = self.budget.limit - self.budget.used
        args = [(self.search, target, size_limit, t, exclude, remaining) for t in tasks]
        for found, used in self.pool.map(_run_subtask, args):
            self.budget.tick(used)
            if found is not None:
                return found
        return None


def _colex_least(driver: _Driver, target: int, size: int, seed: int, m: int) -> int:
    """Numerically smallest valid edge mask of the given (minimum) size."""
    include, exclude, current = 0, 0, seed
    for j in range(m - 1, -1, -1):
        bit = 1 << j
        if not current & bit:
            exclude |= bit
            continue
        found = driver.query(target, size, start=include, exclude=exclude | bit)
        if found is not None:
            exclude |= bit
            current = found
        else:
            include |= bit
    assert include == current and include.bit_count() == size
    return include


def _certificate(g: Graph, k: int, mask: int, before: DominationCertificate) -> BondageCertificate:
    edges = list(g.edges)
    deleted = EdgeSet.of(edges[i] for i in bits(mask))
    return BondageCertificate(k, deleted, before, gamma_t(remove_edges(g, deleted)))


def _check_input(g: Graph, k: int) -> DominationCertificate:
    if k < 1:
        raise BadParam(f"k must be >= 1, got {k}")
    return gamma_t(g)


def bondage_k(g: Graph, k: int, *, prune: bool = True, jobs: int = 1,
              budget: int | None = None) -> BondageOutcome:
    """Exact ``B_t^k(g)`` with a certificate, or a not-achievable record."""
    before = _check_input(g, k)
    budget = default_budget() if budget is None else budget
    target = before.gamma_t + k
    if not prune:
        from .exhaustive import enumerate_bondage
        mask = enumerate_bondage(g.n, g.adj, list(g.edges), target, start=1, jobs=jobs,
                                 budget=budget)
        if mask is None:
            from .exhaustive import enumerate_max_gamma
            best = enumerate_max_gamma(g.n, g.adj, list(g.edges), budget=budget)
            return BondageOutcome(k, max_increase=best - before.gamma_t)
        return BondageOutcome(k, _certificate(g, k, mask, before))

    search = _BranchSearch(g)
    tracker = _Budget(budget)
    if target > g.n:
        return BondageOutcome(k, max_increase=_max_gamma(search, tracker, before.gamma_t)
                              - before.gamma_t)
    driver = _Driver(search, tracker, jobs)
    try:
        seed = driver.query(target, g.m)
        if seed is None:
            return BondageOutcome(k, max_increase=_max_gamma(search, tracker, before.gamma_t)
                                  - before.gamma_t)
        best = seed
        for s in range(lower_bound(k), seed.bit_count()):
            found = driver.query(target, s)
            if found is not None:
                best = found
                break
        mask = _colex_least(driver, target, best.bit_count(), best, g.m)
    finally:
        driver.close()
    return BondageOutcome(k, _certificate(g, k, mask, before))


def _max_gamma(search: _BranchSearch, tracker: _Budget, base: int) -> int:
    best = base
    while best + 1 <= search.n:
        found = search.search(best + 1, len(search.edges), tracker, use_bound=False)
        if found is None:
            break
        adj = search.apply(found)
        best = _gamma_of_adj(search, adj)
    return best


def _gamma_of_adj(search: _BranchSearch, adj: list[int]) -> int:
    t = 2
    while find_td_set(adj, search.n, t) is None:
        t += 1
    return t


def max_achievable_increase(g: Graph, budget: int | None = None) -> int:
    """Largest ``d`` such that some deletion set raises gamma_t by ``d``."""
    base = gamma_t(g).gamma_t
    tracker = _Budget(default_budget() if budget is None else budget)
    return _max_gamma(_BranchSearch(g), tracker, base) - base


def verify_certificate(g: Graph, cert: BondageCertificate) -> bool:
    """Replay a certificate: deletions, both gamma_t values, witnesses and the increase.

    Minimality is not re-proved here.
    """
    for u, v in cert.deleted:
        if (u, v) not in g.edges:
            raise MissingEdge(u, v)
    if cert.k < 1:
        return False
    h = remove_edges(g, cert.deleted)
    if has_isolated_vertex(g) or has_isolated_vertex(h):
        return False
    before, after = gamma_t(g), gamma_t(h)
    for claimed, actual, graph in ((cert.before, before, g), (cert.after, after, h)):
        if claimed.gamma_t != actual.gamma_t or len(set(claimed.witness)) != claimed.gamma_t:
            return False
        if any(not 0 <= v < g.n for v in claimed.witness):
            return False
        if not is_td_set(graph, claimed.witness):
            return False
    return after.gamma_t >= before.gamma_t + cert.k
