"""Immutable simple undirected graphs with bitset adjacency.

Vertices are the integers ``0..n-1``.  Adjacency is held as one Python ``int``
per vertex used as a bitset (bit ``j`` of ``adj[i]`` is set iff ``ij`` is an
edge), which serves every graph size with the same code path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import BadParam, InvalidVertexIndex, MissingEdge, ParseError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    u, v = int(u), int(v)
    if u == v:
        raise BadParam(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeSet:
    """Canonical set of undirected edges: sorted ``(u, v)`` pairs with ``u < v``."""

    pairs: tuple[Edge, ...] = ()

    def __post_init__(self):
        canon = tuple(sorted({_norm(u, v) for u, v in self.pairs}))
        object.__setattr__(self, "pairs", canon)

    @classmethod
    def of(cls, pairs: Iterable[Iterable[int]] = ()) -> "EdgeSet":
        return cls(tuple(tuple(p) for p in pairs))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, e) -> bool:
        try:
            key = _norm(*e)
        except (BadParam, TypeError, ValueError):
            return False
        return key in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[Edge]:
        return frozenset(self.pairs)

    def union(self, other: Iterable[Edge]) -> "EdgeSet":
        return EdgeSet(self.pairs + tuple(other))

    def difference(self, other: Iterable[Edge]) -> "EdgeSet":
        drop = {_norm(*e) for e in other}
        return EdgeSet(tuple(p for p in self.pairs if p not in drop))

    def to_list(self) -> list[list[int]]:
        return [[u, v] for u, v in self.pairs]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``labels`` optionally names vertices (e.g. ``{"x": 0}`` for a gadget's
    attachment vertex).  It is informational only and does not take part in
    equality or hashing.
    """

    n: int
    edges: EdgeSet = EdgeSet()
    labels: Mapping[str, int] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.edges, EdgeSet):
            object.__setattr__(self, "edges", EdgeSet.of(self.edges))
        if self.n < 1:
            raise BadParam("a graph needs at least one vertex")
        for u, v in self.edges:
            if v >= self.n:
                raise BadParam(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "labels", dict(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], labels=None) -> "Graph":
        return cls(n, EdgeSet.of(edges), labels or {})

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitsets, one per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise BadParam(f"vertex {v} is not in 0..{g.n - 1}")
    return g.adj[v].bit_count()


def total_degree(g: Graph) -> int:
    return sum(a.bit_count() for a in g.adj)


def has_isolated_vertex(g: Graph) -> bool:
    return any(a == 0 for a in g.adj)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v, a in enumerate(g.adj) if a == 0]


def remove_edges(g: Graph, s: Iterable[Edge]) -> Graph:
    """Spanning subgraph ``g - s``.  Every pair of ``s`` must be an edge of ``g``."""
    s = s if isinstance(s, EdgeSet) else EdgeSet.of(s)
    for u, v in s:
        if (u, v) not in g.edges:
            raise MissingEdge(u, v)
    return Graph(g.n, g.edges.difference(s), g.labels)


def is_pendant_edge(g: Graph, e: Edge) -> bool:
    u, v = e
    if (u, v) not in g.edges:
        raise MissingEdge(u, v)
    return g.adj[u].bit_count() == 1 or g.adj[v].bit_count() == 1


def component_masks(adj: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Vertex bitsets of the connected components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.n)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[list[int], Graph]:
    """Subgraph induced on ``vertices`` re-indexed ``0..k-1`` in increasing order.

    Returns the original-vertex mapping (position i holds the original index of
    new vertex i) together with the induced graph.
    """
    mapping = sorted(set(vertices))
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return mapping, Graph.from_edges(len(mapping), edges)


def components(g: Graph) -> list[tuple[list[int], Graph]]:
    """Connected components as ``(original vertices, re-indexed induced graph)``."""
    return [induced_subgraph(g, bits(c)) for c in component_masks(g.adj, g.n)]


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph.from_edges(offset, edges)


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    order, seen, queue = [], {start}, deque([start])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then one ``u v`` per line.

    ``#`` starts a comment; blank lines are ignored; duplicate edges are
    rejected.
    """
    n = None
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(lineno, "expected the vertex count on its own line")
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(lineno, f"vertex count {fields[0]!r} is not an integer") from None
            if n < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
            continue
        if len(fields) != 2:
            raise ParseError(lineno, "expected two vertex indices 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, "vertex indices must be integers") from None
        for w in (u, v):
            if not 0 <= w < n:
                raise InvalidVertexIndex(lineno, f"vertex {w} outside 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
    if n is None:
        raise ParseError(1, "empty input")
    return Graph.from_edges(n, seen)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
