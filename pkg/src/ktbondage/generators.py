"""Named graph families and the gadget constructions.

Labeling conventions (also carried in ``Graph.labels``):

* ``path(n)`` / ``cycle(n)``: vertices ``0..n-1`` in path/cycle order.
* ``wheel(n)``: hub ``v0`` is vertex 0, rim ``v1..vn`` are vertices ``1..n``.
* ``complete_bipartite(a, b)``: ``a_i`` is ``i-1`` and ``b_j`` is ``a+j-1``.
* ``gadget_T()``: spine ``v1..v5`` is ``0..4``; the pendant ``u2`` is 5 and
  ``u1`` is identified with ``v3`` (vertex 2).  ``x`` is ``v1``.
* Gadgets built on ``T`` keep ``x = 0``.  Copy ``i`` of ``T`` (1-based) names its
  vertices ``T{i}.v2 .. T{i}.v5`` and ``T{i}.u2``.
* ``K_n - e`` removes ``e = (0, 1)`` and attaches at ``a' = 1``; ``a`` is the
  other endpoint of ``e``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BadParam
from .graph import Graph


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "bipartite"
    GADGET_T = "t"
    TM = "tm"
    TMN = "tmn"
    GBK = "gbk"
    COROLLARY = "corollary"


@dataclass(frozen=True)
class ClassSpec:
    family: Family
    params: tuple[int, ...] = ()

    def build(self) -> Graph:
        if Family(self.family) in (Family.TM, Family.TMN) and self.params and self.params[0] < 1:
            raise BadParam(f"m must be >= 1, got {self.params[0]}")
        builder = _BUILDERS[Family(self.family)]
        return builder(*self.params)

    def to_dict(self) -> dict:
        names = PARAM_NAMES[Family(self.family)]
        return {"family": Family(self.family).value, **dict(zip(names, self.params))}

    @classmethod
    def from_dict(cls, d: dict) -> "ClassSpec":
        fam = Family(d["family"])
        return cls(fam, tuple(int(d[k]) for k in PARAM_NAMES[fam]))

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in zip(PARAM_NAMES[Family(self.family)], self.params))
        return f"{Family(self.family).value}({args})"


PARAM_NAMES = {
    Family.PATH: ("n",),
    Family.CYCLE: ("n",),
    Family.WHEEL: ("n",),
    Family.COMPLETE: ("n",),
    Family.COMPLETE_BIPARTITE: ("a", "b"),
    Family.GADGET_T: (),
    Family.TM: ("m",),
    Family.TMN: ("m", "n"),
    Family.GBK: ("k", "b"),
    Family.COROLLARY: ("k", "b"),
}


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParam(msg)


def path(n: int) -> Graph:
    _check(n >= 2, f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle ``1..n``."""
    _check(n >= 3, f"wheel needs n >= 3, got {n}")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    labels = {f"v{i}": i for i in range(n + 1)}
    return Graph.from_edges(n + 1, rim + spokes, labels)


def complete_bipartite(a: int, b: int) -> Graph:
    _check(2 <= a <= b, f"complete bipartite needs 2 <= a <= b, got a={a}, b={b}")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    labels = {f"a{i + 1}": i for i in range(a)}
    labels.update({f"b{j + 1}": a + j for j in range(b)})
    return Graph.from_edges(a + b, edges, labels)


def complete_minus_edge(n: int) -> Graph:
    """``K_n`` without the edge ``(0, 1)``; ``a = 0``, ``a' = 1``."""
    _check(n >= 2, f"K_n - e needs n >= 2, got {n}")
    g = complete(n)
    edges = [e for e in g.edges if e != (0, 1)]
    return Graph.from_edges(n, edges, {"a": 0, "a'": 1})


def merge(g: Graph, gv: int, h: Graph, hv: int, labels: dict | None = None) -> Graph:
    """Identify vertex ``gv`` of ``g`` with vertex ``hv`` of ``h``.

    Vertices of ``g`` keep their indices; the remaining vertices of ``h`` are
    appended in their original order.
    """
    _check(0 <= gv < g.n, f"merge vertex {gv} not in g")
    _check(0 <= hv < h.n, f"merge vertex {hv} not in h")
    remap = h_index_map(g, h, gv, hv)
    edges = list(g.edges) + [(remap[u], remap[v]) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n - 1, edges, labels if labels is not None else g.labels)


def h_index_map(g: Graph, h: Graph, gv: int, hv: int) -> list[int]:
    """Where each vertex of ``h`` lands after ``merge(g, gv, h, hv)``."""
    return [gv if j == hv else g.n + (j if j < hv else j - 1) for j in range(h.n)]


def _merge_labeled(g: Graph, gv: int, h: Graph, hv: int, prefix: str) -> Graph:
    remap = h_index_map(g, h, gv, hv)
    labels = dict(g.labels)
    for name, j in h.labels.items():
        if j != hv:
            labels[f"{prefix}.{name}"] = remap[j]
    out = merge(g, gv, h, hv, labels)
    assert out.m == g.m + h.m, "merge overlap in a gadget construction"
    return out


def _labeled_path(n: int) -> Graph:
    g = path(n)
    return Graph(g.n, g.edges, {f"v{i + 1}": i for i in range(n)})


def gadget_T() -> Graph:
    """``P5`` with a ``P2`` merged at its middle vertex: 6 vertices, 5 edges."""
    p5 = _labeled_path(5)
    p2 = Graph.from_edges(2, [(0, 1)], {"u1": 0, "u2": 1})
    labels = dict(p5.labels, x=0, u1=2, u2=5)
    return merge(p5, 2, p2, 0, labels)


def gadget_Tm(m: int) -> Graph:
    """``m`` copies of ``T`` sharing their ``v1`` (the vertex ``x``).  ``m = 0`` gives ``x`` alone."""
    _check(m >= 0, f"T^m needs m >= 0, got {m}")
    g = Graph(1, labels={"x": 0})
    t = gadget_T()
    t_labels = {k: v for k, v in t.labels.items() if k in ("v2", "v3", "v4", "v5", "u2", "v1")}
    t = Graph(t.n, t.edges, t_labels)
    for i in range(1, m + 1):
        g = _merge_labeled(g, 0, t, 0, f"T{i}")
    return g


def gadget_TmN(m: int, n: int) -> Graph:
    """``T^m`` with ``K_n - e`` attached at ``x = a'``; ``5m + n`` vertices."""
    _check(m >= 0, f"T^m_n needs m >= 0, got {m}")
    _check(n >= 2, f"T^m_n needs n >= 2, got {n}")
    g = gadget_Tm(m)
    k = complete_minus_edge(n)
    k = Graph(k.n, k.edges, {"a": 0, **{f"w{j}": j for j in range(2, n)}})
    out = _merge_labeled(g, 0, k, 1, "K")
    labels = dict(out.labels)
    labels["a"] = labels.pop("K.a")
    labels["a'"] = 0
    return Graph(out.n, out.edges, labels)


def _attach_p3(g: Graph, prefix: str = "P3") -> Graph:
    return _merge_labeled(g, g.labels.get("x", 0), _labeled_path(3), 0, prefix)


def _attach_p5_middle(g: Graph) -> Graph:
    return _merge_labeled(g, g.labels.get("x", 0), _labeled_path(5), 2, "P5")


def _attach_k4_minus_e(g: Graph) -> Graph:
    k4 = complete_minus_edge(4)
    k4 = Graph(k4.n, k4.edges, {"a": 0, "w2": 2, "w3": 3})
    return _merge_labeled(g, g.labels.get("x", 0), k4, 1, "K4")


def construct_G_b_k(k: int, b: int) -> Graph:
    """A graph whose k-total bondage number is ``b`` (``b >= ceil(k/2)``).

    With ``m = ceil((k-2)/2)`` and ``r = b - m``, every attachment is made at
    the shared vertex ``x``:

    ===========  =====================================================
    k odd        r=1: T^m_5 + P3 (endpoint); r=2: T^m_5 + (K4-e at a');
                 r>=3: T^m_{r+1}
    k even       r=1: T^b_5; r=2: T^m_5 + P5 (middle);
                 r=3: T^m_5 + P3 + (K4-e at a'); r>=4: T^m_r + P3
    ===========  =====================================================
    """
    _check(k >= 1, f"k must be >= 1, got {k}")
    _check(b >= -(-k // 2), f"b must be >= ceil(k/2) = {-(-k // 2)}, got {b}")
    m = math.ceil((k - 2) / 2)
    r = b - m
    if k % 2:
        if r == 1:
            return _attach_p3(gadget_TmN(m, 5))
        if r == 2:
            return _attach_k4_minus_e(gadget_TmN(m, 5))
        return gadget_TmN(m, r + 1)
    if r == 1:
        return gadget_TmN(b, 5)
    if r == 2:
        return _attach_p5_middle(gadget_TmN(m, 5))
    if r == 3:
        return _attach_k4_minus_e(_attach_p3(gadget_TmN(m, 5)))
    return _attach_p3(gadget_TmN(m, r))


def corollary_graph(k: int, b: int) -> Graph:
    """Graph with ``B^{k+1} = B^k + b``: ``T^m_{b+1}``, plus a ``P3`` at ``x`` when k is odd."""
    _check(k >= 1, f"k must be >= 1, got {k}")
    _check(b >= 2, f"b must be >= 2, got {b}")
    g = gadget_TmN(k // 2, b + 1)
    return _attach_p3(g) if k % 2 else g


_BUILDERS = {
    Family.PATH: path,
    Family.CYCLE: cycle,
    Family.WHEEL: wheel,
    Family.COMPLETE: complete,
    Family.COMPLETE_BIPARTITE: complete_bipartite,
    Family.GADGET_T: gadget_T,
    Family.TM: gadget_Tm,
    Family.TMN: gadget_TmN,
    Family.GBK: construct_G_b_k,
    Family.COROLLARY: corollary_graph,
}


def build(family: str | Family, *params: int) -> Graph:
    return ClassSpec(Family(family), tuple(params)).build()
