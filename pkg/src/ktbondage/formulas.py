"""Closed-form values and bounds for total domination and k-total bondage.

Every evaluator refuses (``BadParam``) outside the hypothesis under which
its value is known; nothing is extrapolated.  ``evaluate`` wraps the
evaluators for sweeps, turning a refusal into a ``FormulaResult`` with
``hypothesis_ok=False`` instead of an exception.

Source tags (``"thm3.12"`` and so on) are stable identifiers used by the
command line and in reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import ceil, comb
from typing import Callable

from .errors import BadParam


class Kind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    kind: Kind
    source: str
    hypothesis_ok: bool = True

    def __post_init__(self):
        if not self.hypothesis_ok and self.value is not None:
            raise ValueError("a refused evaluation carries no value")

    def to_dict(self) -> dict:
        return {"value": self.value, "kind": Kind(self.kind).value, "source": self.source,
                "hypothesis_ok": self.hypothesis_ok}


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParam(msg)


# -- paths and cycles ------------------------------------------------------

def _gamma_t_path_cycle(n: int) -> int:
    r = n % 4
    if r == 0:
        return n // 2
    if r == 2:
        return n // 2 + 1
    return (n + 1) // 2


def gamma_t_path(n: int) -> int:
    _require(n >= 2, f"path order must be >= 2, got {n}")
    return _gamma_t_path_cycle(n)


def gamma_t_cycle(n: int) -> int:
    _require(n >= 3, f"cycle order must be >= 3, got {n}")
    return _gamma_t_path_cycle(n)


def path_residue_formula(n: int, k: int) -> int:
    """The three-branch path expression, without any hypothesis check."""
    r = n % 4
    if r == 0:
        return 2 * ((k - 1) // 2) + 1
    if r == 2:
        return 2 * ((k - 1) // 2) + 2
    return k


def _path_guard(n: int, k: int, what: str) -> None:
    _require(k >= 1, f"k must be >= 1, got {k}")
    if k == 1:
        _require(n >= 4, f"{what} bondage for k=1 needs n >= 4, got {n}")
    else:
        _require(n >= 2 * k, f"{what} bondage needs n >= 2k = {2 * k}, got n={n}")


def bondage_k_path(n: int, k: int) -> int:
    _path_guard(n, k, "path")
    if k == 1:
        return 2 if n % 4 == 2 else 1
    return path_residue_formula(n, k)


def bondage_k_cycle(n: int, k: int) -> int:
    _path_guard(n, k, "cycle")
    return bondage_k_path(n, k) + 1


def path_union_gamma(parts: list[int]) -> int:
    """gamma_t of a disjoint union of paths with the given orders."""
    _require(len(parts) > 0, "need at least one path")
    for a in parts:
        _require(a >= 2, f"every path order must be >= 2, got {a}")
    return sum(_gamma_t_path_cycle(a) for a in parts)


def path_union_bound(parts: list[int]) -> int:
    """Right-hand side ``gamma_t(P_{n-2b}) + 2b`` for ``b + 1`` parts summing to ``n``."""
    path_union_gamma(parts)
    b = len(parts) - 1
    return gamma_t_path(sum(parts) - 2 * b) + 2 * b


# -- wheels ----------------------------------------------------------------

def gamma_t_wheel(n: int) -> int:
    _require(n >= 3, f"wheel order must be >= 3, got {n}")
    return 2


def bondage_1_wheel(n: int) -> int:
    _require(n >= 5, f"wheel total bondage needs n >= 5, got {n}")
    return 2


def wheel_max_increase(n: int) -> tuple[int, int]:
    """``(largest achievable increase, edges needed for it)`` for ``W_n``."""
    _require(n >= 3, f"wheel order must be >= 3, got {n}")
    if n % 2:
        return n - 1, 2 * n - (n + 1) // 2
    return n - 2, 2 * n - (n + 4) // 2


def bondage_wheel(n: int, j: int) -> FormulaResult:
    """Edges needed to raise gamma_t(W_n) by ``j``; requires ``n >= 3(j+1)``."""
    _require(j >= 1, f"increase j must be >= 1, got {j}")
    _require(n >= 3 * (j + 1), f"needs n >= 3(j+1) = {3 * (j + 1)}, got n={n}")
    return FormulaResult(j + 1, Kind.EXACT, "thm3.6")


# -- complete graphs -------------------------------------------------------

def sanchis_value(n: int, gamma: int) -> int:
    """``C(n - gamma + 1, 2) + floor(gamma / 2)``, with no hypothesis check."""
    return comb(n - gamma + 1, 2) + gamma // 2


def complete_formula(n: int, k: int) -> int:
    if k % 2 == 0:
        return n * k - (k * k + 2 * k) // 2
    return n * k + n - (k * k + 4 * k + 5) // 2


def bondage_k_complete(n: int, k: int) -> int:
    _require(k >= 1, f"k must be >= 1, got {k}")
    if k == 2:
        _require(n >= 4, f"K_n with k=2 needs n >= 4, got {n}")
        return 2 * n - 4
    _require(n >= 5, f"K_n needs n >= 5, got {n}")
    if k % 2 == 0:
        _require(k <= n - 2, f"even k must be <= n-2 = {n - 2}, got {k}")
    else:
        _require(k <= n - 3, f"odd k must be <= n-3 = {n - 3}, got {k}")
    return complete_formula(n, k)


def complete_upper_bound_any(n: int, k: int) -> FormulaResult:
    """Upper bound on B_t^k for any n-vertex graph on which it exists."""
    _require(n >= 5, f"needs n >= 5, got {n}")
    kmax = n - 2 if n % 2 == 0 else n - 3
    _require(1 <= k <= kmax, f"needs 1 <= k <= {kmax}, got {k}")
    return FormulaResult(bondage_k_complete(n, k), Kind.UPPER_BOUND, "cor3.12")


# -- complete bipartite graphs ---------------------------------------------

def _bipartite_guard(a: int, b: int) -> None:
    _require(2 <= a <= b, f"needs 2 <= a <= b, got a={a}, b={b}")


def bondage_1_bipartite(a: int, b: int) -> int:
    _bipartite_guard(a, b)
    return a


def bondage_2_bipartite(a: int, b: int) -> int:
    _bipartite_guard(a, b)
    _require(b <= 2 * a, f"needs b <= 2a = {2 * a}, got b={b}")
    return b


def bipartite_bound_A(a: int, b: int, k: int) -> FormulaResult:
    _require(k >= 1, f"k must be >= 1, got {k}")
    _require(k < a <= b, f"needs k < a <= b, got a={a}, b={b}, k={k}")
    return FormulaResult(k * a, Kind.UPPER_BOUND, "thm3.14")


def bipartite_bound_B(a: int, b: int, k: int) -> FormulaResult:
    _require(k >= 1, f"k must be >= 1, got {k}")
    h = ceil(k / 2)
    _require(h + 1 <= a <= b, f"needs ceil(k/2)+1 <= a <= b, got a={a}, b={b}, k={k}")
    return FormulaResult(h * (a + b - h - 1), Kind.UPPER_BOUND, "thm3.15")


def best_known_bipartite_bound(a: int, b: int, k: int) -> FormulaResult:
    """Exact value where known, else the smaller applicable bound (source says which won)."""
    _bipartite_guard(a, b)
    if k == 1:
        return FormulaResult(a, Kind.EXACT, "thm3.13")
    if k == 2 and b <= 2 * a:
        return FormulaResult(b, Kind.EXACT, "thm3.16")
    bounds = []
    for f in (bipartite_bound_A, bipartite_bound_B):
        try:
            bounds.append(f(a, b, k))
        except BadParam:
            pass
    if not bounds:
        raise BadParam(f"no known value or bound for K_{{{a},{b}}} with k={k}")
    return min(bounds, key=lambda r: (r.value, r.source))


# -- constructions ---------------------------------------------------------

def construction_bondage(k: int, b: int) -> int:
    """Claimed ``B_t^k`` of the gadget graph built for ``(k, b)``: ``b`` itself."""
    _require(k >= 1, f"k must be >= 1, got {k}")
    _require(b >= ceil(k / 2), f"needs b >= ceil(k/2) = {ceil(k / 2)}, got {b}")
    return b


# -- registry for sweeps and tables ----------------------------------------

@dataclass(frozen=True)
class Entry:
    func: Callable
    kind: Kind
    params: tuple[str, ...]
    description: str


REGISTRY: dict[str, Entry] = {
    "prop3.1": Entry(gamma_t_path, Kind.EXACT, ("n",), "gamma_t of P_n (equal to C_n)"),
    "prop3.1-cycle": Entry(gamma_t_cycle, Kind.EXACT, ("n",), "gamma_t of C_n"),
    "thm3.2": Entry(lambda n: bondage_k_path(n, 1), Kind.EXACT, ("n",), "B_t^1(P_n)"),
    "thm3.2-cycle": Entry(lambda n: bondage_k_cycle(n, 1), Kind.EXACT, ("n",), "B_t^1(C_n)"),
    "thm3.5": Entry(bondage_k_path, Kind.EXACT, ("n", "k"), "B_t^k(P_n)"),
    "thm3.5-cycle": Entry(bondage_k_cycle, Kind.EXACT, ("n", "k"), "B_t^k(C_n)"),
    "cor3.4": Entry(path_union_bound, Kind.UPPER_BOUND, ("parts",),
                    "gamma_t(P_{n-2b}) + 2b bounding a union of b+1 paths"),
    "thm3.4": Entry(bondage_1_wheel, Kind.EXACT, ("n",), "B_t^1(W_n)"),
    "thm3.5-wheel": Entry(lambda n: wheel_max_increase(n)[1], Kind.EXACT, ("n",),
                          "B_t^k(W_n) at the largest achievable k"),
    "thm3.5-wheel-max": Entry(lambda n: wheel_max_increase(n)[0], Kind.EXACT, ("n",),
                              "largest achievable increase of gamma_t(W_n)"),
    "thm3.6": Entry(lambda n, j: bondage_wheel(n, j).value, Kind.EXACT, ("n", "j"),
                    "B_t^j(W_n) = j+1 for n >= 3(j+1)"),
    "thm3.7": Entry(lambda n: bondage_k_complete(n, 1), Kind.EXACT, ("n",), "B_t^1(K_n) = 2n-5"),
    "thm3.9": Entry(lambda n: bondage_k_complete(n, 2), Kind.EXACT, ("n",), "B_t^2(K_n) = 2n-4"),
    "thm3.10": Entry(lambda n, gamma: _sanchis_guarded(n, gamma), Kind.UPPER_BOUND,
                     ("n", "gamma"), "max edges of a connected graph with gamma_t >= 5"),
    "thm3.12": Entry(bondage_k_complete, Kind.EXACT, ("n", "k"), "B_t^k(K_n)"),
    "cor3.12": Entry(lambda n, k: complete_upper_bound_any(n, k).value, Kind.UPPER_BOUND,
                     ("n", "k"), "B_t^k(G) <= B_t^k(K_n)"),
    "thm3.13": Entry(bondage_1_bipartite, Kind.EXACT, ("a", "b"), "B_t^1(K_{a,b}) = a"),
    "thm3.14": Entry(lambda a, b, k: bipartite_bound_A(a, b, k).value, Kind.UPPER_BOUND,
                     ("a", "b", "k"), "B_t^k(K_{a,b}) <= ka"),
    "thm3.15": Entry(lambda a, b, k: bipartite_bound_B(a, b, k).value, Kind.UPPER_BOUND,
                     ("a", "b", "k"), "B_t^k(K_{a,b}) <= c(a+b-c-1), c = ceil(k/2)"),
    "thm3.16": Entry(bondage_2_bipartite, Kind.EXACT, ("a", "b"), "B_t^2(K_{a,b}) = b"),
    "thm4.1": Entry(construction_bondage, Kind.EXACT, ("k", "b"), "B_t^k(G_b^k) = b"),
}


def _sanchis_guarded(n: int, gamma: int) -> int:
    _require(5 <= gamma <= n, f"needs 5 <= gamma <= n, got gamma={gamma}, n={n}")
    return sanchis_value(n, gamma)


def evaluate(tag: str, **params) -> FormulaResult:
    """Evaluate a registered formula; a failed hypothesis yields ``hypothesis_ok=False``."""
    entry = REGISTRY[tag]
    try:
        value = entry.func(**params)
    except BadParam:
        return FormulaResult(None, entry.kind, tag, hypothesis_ok=False)
    return FormulaResult(value, entry.kind, tag)
