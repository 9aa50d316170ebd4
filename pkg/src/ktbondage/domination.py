"""Exact total domination.

A set ``S`` totally dominates ``G`` when every vertex (members of ``S``
included) has a neighbour in ``S``, i.e. the union of the open
neighbourhoods of ``S`` is all of ``V(G)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadParam, ExceedsSearchBudget, IsolatedVertex, NotATDSet
from .graph import Graph, bits, component_masks, components, mask_of

DEFAULT_VERTEX_BUDGET = 24


@dataclass(frozen=True)
class DominationCertificate:
    gamma_t: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"gamma_t": self.gamma_t, "witness": list(self.witness)}

    @classmethod
    def from_dict(cls, d: dict) -> "DominationCertificate":
        return cls(int(d["gamma_t"]), tuple(sorted(int(v) for v in d["witness"])))


def _vertex_mask(g: Graph, s: Iterable[int]) -> int:
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise BadParam(f"vertex {v} is not in 0..{g.n - 1}")
    return mask_of(s)


def _covered(adj, chosen: int) -> int:
    cov = 0
    for v in bits(chosen):
        cov |= adj[v]
    return cov


def is_td_set(g: Graph, s: Iterable[int]) -> bool:
    return _covered(g.adj, _vertex_mask(g, s)) == g.full_mask


def is_minimal_td_set(g: Graph, s: Iterable[int]) -> bool:
    chosen = _vertex_mask(g, s)
    if _covered(g.adj, chosen) != g.full_mask:
        raise NotATDSet(f"{sorted(bits(chosen))} is not a total dominating set")
    return all(_covered(g.adj, chosen & ~(1 << v)) != g.full_mask for v in bits(chosen))


def _require_no_isolated(g: Graph) -> None:
    for v, a in enumerate(g.adj):
        if a == 0:
            raise IsolatedVertex(v)


def greedy_td_upper_bound(g: Graph) -> int:
    """Size of a greedily built TD-set (largest new coverage first, lowest index on ties)."""
    return len(_greedy_td_set(g))


def _greedy_td_set(g: Graph) -> list[int]:
    _require_no_isolated(g)
    undominated = g.full_mask
    picked = []
    while undominated:
        best, best_gain = -1, 0
        for v, a in enumerate(g.adj):
            gain = (a & undominated).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        picked.append(best)
        undominated &= ~g.adj[best]
    return picked


def _lex_first_td_set(adj: tuple[int, ...], n: int, t: int) -> tuple[int, ...] | None:
    """Lexicographically smallest TD-set of size at most ``t``, or None.

    Vertices are chosen in increasing index order, so the first hit of the
    depth-first walk is the lexicographic minimum.  Two prunes: the remaining
    candidates must be able to cover every undominated vertex, and ``r`` picks
    of at most ``maxdeg`` new vertices each must cover the remainder.
    """
    full = (1 << n) - 1
    suffix_cover = [0] * (n + 1)
    suffix_deg = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cover[i] = suffix_cover[i + 1] | adj[i]
        suffix_deg[i] = max(suffix_deg[i + 1], adj[i].bit_count())

    chosen: list[int] = []

    def rec(i: int, r: int, undominated: int) -> bool:
        if not undominated:
            return True
        if r == 0 or undominated & ~suffix_cover[i]:
            return False
        if r * suffix_deg[i] < undominated.bit_count():
            return False
        low = undominated & -undominated
        u = low.bit_length() - 1
        # some pick from here on must be a neighbour of u
        last = adj[u].bit_length() - 1
        for j in range(i, last + 1):
            chosen.append(j)
            if rec(j + 1, r - 1, undominated & ~adj[j]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if rec(0, t, full) else None


def find_td_set(adj, n: int, t: int, target: int | None = None) -> int | None:
    """Bitset of some TD-set of size at most ``t`` dominating ``target``.

    Branches on the neighbours of the lowest undominated vertex.  Faster than
    the lexicographic walk but the set returned is not canonical.
    """
    if target is None:
        target = (1 << n) - 1
    maxdeg = max((a.bit_count() for a in adj), default=0)
    if maxdeg == 0:
        return None if target else 0

    def rec(chosen: int, r: int, undominated: int) -> int | None:
        if not undominated:
            return chosen
        if r == 0 or r * maxdeg < undominated.bit_count():
            return None
        low = undominated & -undominated
        u = low.bit_length() - 1
        cand = adj[u]
        while cand:
            w = cand & -cand
            cand ^= w
            v = w.bit_length() - 1
            found = rec(chosen | w, r - 1, undominated & ~adj[v])
            if found is not None:
                return found
        return None

    return rec(0, t, target)


def min_td_size(adj, n: int, lower: int = 2, upper: int | None = None) -> tuple[int, int] | None:
    """``(gamma_t, witness bitset)`` of a graph given by bitsets, searching sizes ``lower..upper``."""
    upper = n if upper is None else upper
    for t in range(max(lower, 1), upper + 1):
        found = find_td_set(adj, n, t)
        if found is not None:
            return found.bit_count(), found
    return None


def gamma_t(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> DominationCertificate:
    """Total domination number with a lexicographically smallest minimum TD-set.

    Components are solved independently and summed; each component search
    runs target sizes upward from 2, capped by the greedy bound.
    """
    _require_no_isolated(g)
    witness: list[int] = []
    for mapping, comp in components(g):
        if comp.n > vertex_budget:
            raise ExceedsSearchBudget(
                f"component of order {comp.n} exceeds the vertex budget {vertex_budget}")
        ub = greedy_td_upper_bound(comp)
        found = None
        for t in range(2, ub + 1):
            found = _lex_first_td_set(comp.adj, comp.n, t)
            if found is not None:
                break
        assert found is not None and len(found) >= 2
        witness.extend(mapping[v] for v in found)
    witness.sort()
    return DominationCertificate(len(witness), tuple(witness))


def gamma_t_value(g: Graph) -> int:
    """Total domination number only, via the faster non-canonical search."""
    _require_no_isolated(g)
    total = 0
    for comp in component_masks(g.adj, g.n):
        size = comp.bit_count()
        found = None
        for t in range(2, size + 1):
            found = find_td_set(g.adj, g.n, t, target=comp)
            if found is not None:
                break
        total += found.bit_count()
    return total
