"""Sweep campaigns: closed-form values against the exact solvers.

A sweep is a fixed, ordered list of instances.  Each instance names a graph
(a ``ClassSpec``), the quantity to compute (``gamma_t``, ``bondage``,
``max_increase`` or ``bondage_step``), and the registered formula it is
checked against.  Instances are evaluated one after another; only the bondage
search itself may fan out over worker processes.

The report separates the certified payload (deterministic, byte-stable JSON)
from wall-clock timings.
"""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from enum import Enum
from math import ceil

from . import __version__
from .bondage import BondageCertificate, bondage_k, max_achievable_increase, verify_certificate
from .domination import gamma_t
from .errors import BadParam, ExceedsSearchBudget
from .formulas import REGISTRY, FormulaResult, Kind, evaluate, wheel_max_increase
from .generators import ClassSpec, Family
from .graph import serialize_edge_list

SUITES = ("paths", "cycles", "wheels", "complete", "bipartite", "constructions")


class Status(str, Enum):
    MATCH = "match"
    BOUND_HOLDS = "bound_holds"
    MISMATCH = "mismatch"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Instance:
    spec: ClassSpec
    quantity: str
    k: int | None
    tag: str
    params: tuple[tuple[str, object], ...] = ()

    def to_dict(self) -> dict:
        return {"class": self.spec.to_dict(), "quantity": self.quantity, "k": self.k,
                "tag": self.tag, "params": {name: value for name, value in self.params}}

    @classmethod
    def from_dict(cls, d: dict) -> "Instance":
        params = tuple(sorted((name, _freeze(v)) for name, v in d["params"].items()))
        return cls(ClassSpec.from_dict(d["class"]), d["quantity"], d["k"], d["tag"], params)


def _freeze(v):
    return tuple(v) if isinstance(v, list) else v


def _instance(spec, quantity, k, tag, /, **params) -> Instance:
    return Instance(spec, quantity, k, tag, tuple(sorted(params.items())))


@dataclass(frozen=True)
class Claim:
    """A value stated for an instance outside any closed form, checked against the oracle."""
    value: int
    note: str


# drawn-construction value printed for K_{4,5} with k = 2 (the exact-value formula gives 5)
CLAIMS: dict[tuple, tuple[Claim, ...]] = {
    (ClassSpec(Family.COMPLETE_BIPARTITE, (4, 5)), "bondage", 2):
        (Claim(7, "value shown with the drawn 7-edge deletion of K_{4,5}"),),
}


@dataclass
class Ranges:
    """Parameter ranges for a sweep; ``None`` means the suite's default."""
    n: list[int] | None = None
    k: list[int] | None = None
    a: list[int] | None = None
    b: list[int] | None = None
    j: list[int] | None = None
    b_max: int | None = None

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in ("n", "k", "a", "b", "j", "b_max")}


def _rng(lo, hi):
    return list(range(lo, hi + 1))


def _or(value, default):
    return default if value is None else value


def suite_paths(r: Ranges, family: Family = Family.PATH) -> list[Instance]:
    cyc = family is Family.CYCLE
    out = []
    for n in _or(r.n, _rng(3 if cyc else 2, 14)):
        out.append(_instance(ClassSpec(family, (n,)), "gamma_t", None,
                             "prop3.1-cycle" if cyc else "prop3.1", n=n))
    for n in _or(r.n, _rng(4, 12)):
        for k in _or(r.k, [1, 2, 3]):
            spec = ClassSpec(family, (n,))
            if k == 1:
                out.append(_instance(spec, "bondage", 1, "thm3.2-cycle" if cyc else "thm3.2", n=n))
            else:
                out.append(_instance(spec, "bondage", k, "thm3.5-cycle" if cyc else "thm3.5",
                                     n=n, k=k))
    return out


def suite_wheels(r: Ranges) -> list[Instance]:
    out = []
    for n in _or(r.n, _rng(5, 8)):
        spec = ClassSpec(Family.WHEEL, (n,))
        out.append(_instance(spec, "bondage", 1, "thm3.4", n=n))
        for j in _or(r.j, [1, 2]):
            out.append(_instance(spec, "bondage", j, "thm3.6", n=n, j=j))
        if n >= 3:
            kmax = wheel_max_increase(n)[0]
            out.append(_instance(spec, "bondage", kmax, "thm3.5-wheel", n=n))
        out.append(_instance(spec, "max_increase", None, "thm3.5-wheel-max", n=n))
    return out


def suite_complete(r: Ranges) -> list[Instance]:
    out = []
    for n in _or(r.n, _rng(5, 7)):
        for k in _or(r.k, [1, 2, 3]):
            tag = {1: "thm3.7", 2: "thm3.9"}.get(k, "thm3.12")
            params = {"n": n} if k in (1, 2) else {"n": n, "k": k}
            out.append(_instance(ClassSpec(Family.COMPLETE, (n,)), "bondage", k, tag, **params))
    return out


def suite_bipartite(r: Ranges) -> list[Instance]:
    out = []
    for a in _or(r.a, _rng(2, 4)):
        for b in _or(r.b, _rng(2, 5)):
            if b < a:
                continue
            spec = ClassSpec(Family.COMPLETE_BIPARTITE, (a, b))
            for k in _or(r.k, [1, 2]):
                if k == 1:
                    out.append(_instance(spec, "bondage", 1, "thm3.13", a=a, b=b))
                if k == 2:
                    out.append(_instance(spec, "bondage", 2, "thm3.16", a=a, b=b))
                out.append(_instance(spec, "bondage", k, "thm3.14", a=a, b=b, k=k))
                out.append(_instance(spec, "bondage", k, "thm3.15", a=a, b=b, k=k))
    return out


def suite_constructions(r: Ranges) -> list[Instance]:
    out = []
    b_max = _or(r.b_max, 4)
    for k in _or(r.k, _rng(1, 4)):
        for b in _or(r.b, _rng(ceil(k / 2), b_max)):
            out.append(_instance(ClassSpec(Family.GBK, (k, b)), "bondage", k, "thm4.1", k=k, b=b))
    for k in _or(r.k, _rng(1, 4)):
        for b in range(2, b_max + 1):
            out.append(_instance(ClassSpec(Family.COROLLARY, (k, b)), "bondage_step", k,
                                 "cor4.2", k=k, b=b))
    return out


def build_suite(name: str, ranges: Ranges | None = None) -> list[Instance]:
    r = ranges or Ranges()
    if name == "all":
        return [inst for s in SUITES for inst in build_suite(s, r)]
    builders = {
        "paths": lambda: suite_paths(r, Family.PATH),
        "cycles": lambda: suite_paths(r, Family.CYCLE),
        "wheels": lambda: suite_wheels(r),
        "complete": lambda: suite_complete(r),
        "bipartite": lambda: suite_bipartite(r),
        "constructions": lambda: suite_constructions(r),
    }
    if name not in builders:
        raise BadParam(f"unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
    return builders[name]()


# -- evaluation --------------------------------------------------------------

@dataclass
class Entry:
    instance: Instance
    formula: FormulaResult
    status: Status
    oracle_value: int | None = None
    oracle_detail: dict = field(default_factory=dict)
    reason: str | None = None
    certificate: dict | None = None
    claims: list[dict] = field(default_factory=list)
    wall_time_ms: float = 0.0

    def to_dict(self) -> dict:
        d = {
            "instance": self.instance.to_dict(),
            "formula": self.formula.to_dict(),
            "oracle_value": self.oracle_value,
            "oracle": self.oracle_detail,
            "status": Status(self.status).value,
            "reason": self.reason,
        }
        if self.certificate is not None:
            d["certificate"] = self.certificate
        if self.claims:
            d["claims"] = self.claims
        return d


def _formula_for(inst: Instance, base_value: int | None = None) -> FormulaResult:
    params = dict(inst.params)
    if inst.tag == "cor4.2":
        if base_value is None:
            return FormulaResult(None, Kind.EXACT, "cor4.2", hypothesis_ok=False)
        return FormulaResult(base_value + params["b"], Kind.EXACT, "cor4.2")
    return evaluate(inst.tag, **params)


def _unevaluated(inst: Instance) -> FormulaResult:
    if inst.tag == "cor4.2":
        return FormulaResult(None, Kind.EXACT, "cor4.2")
    return evaluate(inst.tag, **dict(inst.params))


def _hypothesis_ok(inst: Instance) -> bool:
    params = dict(inst.params)
    if inst.tag == "cor4.2":
        return params["b"] >= 2 and params["k"] >= 1
    return evaluate(inst.tag, **params).hypothesis_ok


class _Oracle:
    """Caches solver calls so several formulas on one instance share a search."""

    def __init__(self, prune: bool, jobs: int, budget: int):
        self.prune = prune
        self.jobs = jobs
        self.budget = budget
        self.cache: dict = {}

    def bondage(self, spec: ClassSpec, k: int):
        key = ("bondage", spec, k)
        if key not in self.cache:
            self.cache[key] = bondage_k(spec.build(), k, prune=self.prune, jobs=self.jobs,
                                        budget=self.budget)
        return self.cache[key]

    def gamma(self, spec: ClassSpec) -> int:
        key = ("gamma", spec)
        if key not in self.cache:
            self.cache[key] = gamma_t(spec.build()).gamma_t
        return self.cache[key]

    def max_increase(self, spec: ClassSpec) -> int:
        key = ("max", spec)
        if key not in self.cache:
            self.cache[key] = max_achievable_increase(spec.build(), budget=self.budget)
        return self.cache[key]


def _outcome_detail(outcome) -> dict:
    if outcome.achievable:
        return {"status": "achieved", "bondage": outcome.bondage}
    return {"status": "not_achievable", "max_increase": outcome.max_increase}


def evaluate_instance(inst: Instance, oracle: _Oracle) -> Entry:
    start = time.perf_counter()
    entry = _evaluate(inst, oracle)
    entry.wall_time_ms = round((time.perf_counter() - start) * 1000, 3)
    return entry


def _evaluate(inst: Instance, oracle: _Oracle) -> Entry:
    if not _hypothesis_ok(inst):
        kind = REGISTRY[inst.tag].kind if inst.tag in REGISTRY else Kind.EXACT
        return Entry(inst, FormulaResult(None, kind, inst.tag, hypothesis_ok=False),
                     Status.SKIPPED, reason="hypothesis")
    certificate = None
    base = None
    try:
        if inst.quantity == "gamma_t":
            value, detail = oracle.gamma(inst.spec), {}
        elif inst.quantity == "max_increase":
            value, detail = oracle.max_increase(inst.spec), {}
        elif inst.quantity == "bondage":
            outcome = oracle.bondage(inst.spec, inst.k)
            value, detail = outcome.bondage, _outcome_detail(outcome)
            certificate = outcome.certificate
        elif inst.quantity == "bondage_step":
            first = oracle.bondage(inst.spec, inst.k)
            outcome = oracle.bondage(inst.spec, inst.k + 1)
            base = first.bondage
            value = outcome.bondage
            detail = {"base": _outcome_detail(first), "step": _outcome_detail(outcome)}
            certificate = outcome.certificate
        else:
            raise BadParam(f"unknown quantity {inst.quantity!r}")
    except ExceedsSearchBudget:
        return Entry(inst, _unevaluated(inst), Status.SKIPPED, reason="budget")
    except BadParam:
        return Entry(inst, _unevaluated(inst), Status.SKIPPED, reason="invalid_class")
    formula = _formula_for(inst, base)
    entry = Entry(inst, formula, Status.MATCH, oracle_value=value, oracle_detail=detail)
    if not formula.hypothesis_ok:
        entry.status, entry.reason = Status.SKIPPED, "undefined"
    elif Kind(formula.kind) is Kind.EXACT:
        entry.status = Status.MATCH if value == formula.value else Status.MISMATCH
    elif value is None:
        entry.status, entry.reason = Status.SKIPPED, "undefined"
    else:
        entry.status = Status.BOUND_HOLDS if value <= formula.value else Status.MISMATCH
    if entry.status is Status.MISMATCH and certificate is not None:
        entry.certificate = certificate.to_dict()
    claims = CLAIMS.get((inst.spec, inst.quantity, inst.k), ()) \
        if Kind(formula.kind) is Kind.EXACT else ()
    for claim in claims:
        entry.claims.append({"value": claim.value, "note": claim.note,
                             "agrees": value == claim.value})
    return entry


# -- reports -----------------------------------------------------------------

@dataclass
class SweepReport:
    suite: str
    ranges: dict
    entries: list[Entry]
    prune: bool
    budget: int
    jobs: int = 1
    corpus_hash: str = ""
    tool_version: str = __version__

    def summary(self) -> dict:
        counts = {s.value: 0 for s in Status}
        for e in self.entries:
            counts[Status(e.status).value] += 1
        counts["exact_mismatch"] = sum(1 for e in self.entries if self._exact_mismatch(e))
        counts["claim_disagreements"] = sum(1 for e in self.entries for c in e.claims
                                            if not c["agrees"])
        return counts

    @staticmethod
    def _exact_mismatch(e: Entry) -> bool:
        return Status(e.status) is Status.MISMATCH and Kind(e.formula.kind) is Kind.EXACT

    @property
    def ok(self) -> bool:
        return not any(self._exact_mismatch(e) for e in self.entries)

    def payload(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "suite": self.suite,
            "ranges": self.ranges,
            "prune": self.prune,
            "budget": self.budget,
            "corpus_hash": self.corpus_hash,
            "entries": [e.to_dict() for e in self.entries],
            "summary": self.summary(),
        }

    def to_dict(self) -> dict:
        return {
            "payload": self.payload(),
            "timings": {
                "jobs": self.jobs,
                "wall_time_ms": [e.wall_time_ms for e in self.entries],
                "total_ms": round(sum(e.wall_time_ms for e in self.entries), 3),
            },
        }

    def payload_json(self) -> str:
        return dumps(self.payload())

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def table(self) -> str:
        head = ("#", "class", "quantity", "k", "source", "kind", "formula", "oracle", "status")
        rows = [head]
        for i, e in enumerate(self.entries):
            status = Status(e.status).value
            if e.reason:
                status += f"({e.reason})"
            if any(not c["agrees"] for c in e.claims):
                status += " [claim " + ",".join(str(c["value"]) for c in e.claims
                                                if not c["agrees"]) + " disagrees]"
            rows.append((str(i), str(e.instance.spec), e.instance.quantity,
                         "-" if e.instance.k is None else str(e.instance.k), e.formula.source,
                         Kind(e.formula.kind).value, _cell(e.formula.value), _cell(e.oracle_value),
                         status))
        widths = [max(len(r[c]) for r in rows) for c in range(len(head))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        s = self.summary()
        lines.append("")
        lines.append("summary: " + ", ".join(f"{key}={s[key]}" for key in sorted(s)))
        return "\n".join(lines)


def _cell(v) -> str:
    return "-" if v is None else str(v)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def corpus_hash(instances: list[Instance]) -> str:
    h = hashlib.sha256()
    built: dict = {}
    for inst in instances:
        h.update(dumps(inst.to_dict()).encode())
        if inst.spec not in built:
            built[inst.spec] = serialize_edge_list(inst.spec.build())
        h.update(built[inst.spec].encode())
    return h.hexdigest()


def run_sweep(suite: str, ranges: Ranges | None = None, *, include_out_of_hypothesis=False,
              prune=True, jobs=1, budget=10**8, progress=None) -> SweepReport:
    ranges = ranges or Ranges()
    instances = build_suite(suite, ranges)
    if not include_out_of_hypothesis:
        instances = [inst for inst in instances if _hypothesis_ok(inst)]
    oracle = _Oracle(prune, jobs, budget)
    entries = []
    for inst in instances:
        entries.append(evaluate_instance(inst, oracle))
        if progress is not None:
            progress(entries[-1])
    return SweepReport(suite, ranges.to_dict(), entries, prune, budget, jobs,
                       corpus_hash=corpus_hash(instances))


@dataclass
class ReplayResult:
    report: SweepReport
    divergences: list[dict]

    @property
    def reproduced(self) -> bool:
        return not self.divergences


def replay(saved: dict, *, jobs=1, budget=None) -> ReplayResult:
    """Re-run every instance of a saved report and compare statuses and values.

    Stored mismatch certificates are also replayed against their graphs.
    """
    payload = saved["payload"] if "payload" in saved else saved
    budget = payload["budget"] if budget is None else budget
    oracle = _Oracle(payload["prune"], jobs, budget)
    instances = [Instance.from_dict(e["instance"]) for e in payload["entries"]]
    entries, divergences = [], []
    for i, (inst, old) in enumerate(zip(instances, payload["entries"])):
        new = evaluate_instance(inst, oracle)
        entries.append(new)
        fresh = new.to_dict()
        for key in ("status", "oracle_value", "formula"):
            if fresh[key] != old[key]:
                divergences.append({"index": i, "field": key, "saved": old[key], "now": fresh[key]})
        cert = old.get("certificate")
        if cert is not None:
            try:
                ok = verify_certificate(inst.spec.build(), BondageCertificate.from_dict(cert))
            except (BadParam, ValueError, KeyError):
                ok = False
            if not ok:
                divergences.append({"index": i, "field": "certificate", "saved": cert, "now": None})
    report = SweepReport(payload["suite"], payload["ranges"], entries, payload["prune"], budget,
                         jobs, corpus_hash=corpus_hash(instances))
    if report.corpus_hash != payload["corpus_hash"]:
        divergences.append({"index": None, "field": "corpus_hash",
                            "saved": payload["corpus_hash"], "now": report.corpus_hash})
    return ReplayResult(report, divergences)
