"""Command-line front end.

Exit codes: 0 success, 1 a verify sweep found an exact-formula mismatch,
2 input error, 3 search budget exceeded, 4 a replayed report did not
reproduce.  Results go to stdout as JSON with sorted keys; diagnostics go to
stderr as a single line.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bondage import bondage_k, default_budget
from .domination import gamma_t
from .errors import BondageError, ExceedsSearchBudget
from .formulas import REGISTRY, evaluate, path_union_bound, path_union_gamma
from .generators import PARAM_NAMES, ClassSpec, Family
from .graph import Graph, parse_edge_list, serialize_edge_list
from .harness import SUITES, Ranges, dumps, replay, run_sweep

EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET, EXIT_DIVERGED = 1, 2, 3, 4


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"5..7"`` or comma-joined pieces such as ``"2..4,7"``."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _single(values, name):
    if values is None:
        return None
    if len(values) != 1:
        raise InputError(f"--{name} takes a single value here, got {values}")
    return values[0]


def spec_from_args(args) -> ClassSpec:
    try:
        family = Family(args.graph_class)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise InputError(f"unknown class {args.graph_class!r}; expected one of {known}") from None
    params = []
    for name in PARAM_NAMES[family]:
        value = _single(getattr(args, name.replace("-", "_"), None), name)
        if value is None:
            raise InputError(f"class {family.value} needs --{name}")
        params.append(value)
    return ClassSpec(family, tuple(params))


def load_graph(args) -> Graph:
    if args.input is not None and args.graph_class is not None:
        raise InputError("give either an edge-list file or --class, not both")
    if args.input is not None:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        return parse_edge_list(text)
    if args.graph_class is None:
        raise InputError("no graph given: pass an edge-list file or --class")
    return spec_from_args(args).build()


def _budget(args) -> int:
    return default_budget() if args.budget is None else args.budget


# -- subcommands -------------------------------------------------------------

def cmd_gamma_t(args) -> int:
    g = load_graph(args)
    sys.stdout.write(dumps(gamma_t(g).to_dict()))
    return 0


def cmd_bondage(args) -> int:
    g = load_graph(args)
    k = _single(args.k, "k")
    if k is None:
        raise InputError("bondage needs --k")
    outcome = bondage_k(g, k, prune=not args.no_prune, jobs=args.jobs, budget=_budget(args))
    sys.stdout.write(dumps(outcome.to_dict()))
    return 0


def cmd_gen(args) -> int:
    if args.graph_class is None:
        raise InputError("gen needs --class")
    spec = spec_from_args(args)
    g = spec.build()
    text = serialize_edge_list(g)
    sidecar = {"class": spec.to_dict(), "n": g.n, "m": g.m, "labels": dict(sorted(g.labels.items()))}
    if args.out is None:
        sys.stdout.write(text)
        return 0
    out = Path(args.out)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.with_suffix(".el").write_text(text, encoding="utf-8")
        out.with_suffix(".labels.json").write_text(dumps(sidecar), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from None
    print(f"wrote {out.with_suffix('.el')} and {out.with_suffix('.labels.json')}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    budget = None if args.budget is None else args.budget
    if args.replay is not None:
        try:
            saved = json.loads(Path(args.replay).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"cannot read {args.replay}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.replay} is not JSON: {exc.msg}") from None
        result = replay(saved, jobs=args.jobs, budget=budget)
        report = result.report
        _emit_report(report, args)
        if not result.reproduced:
            for d in result.divergences:
                print(f"diverged: entry {d['index']} field {d['field']}", file=sys.stderr)
            return EXIT_DIVERGED
        print(f"replay reproduced all {len(report.entries)} entries", file=sys.stderr)
        return 0 if report.ok else EXIT_MISMATCH
    ranges = Ranges(n=args.n, k=args.k, a=args.a, b=args.b, j=args.j, b_max=args.b_max)
    report = run_sweep(args.suite, ranges, include_out_of_hypothesis=args.include_out_of_hypothesis,
                       prune=not args.no_prune, jobs=args.jobs,
                       budget=default_budget() if budget is None else budget)
    _emit_report(report, args)
    return 0 if report.ok else EXIT_MISMATCH


def _emit_report(report, args) -> None:
    if args.report is not None:
        try:
            Path(args.report).write_text(report.to_json(), encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.report}: {exc.strerror}") from None
    print(report.table())


# default grid per formula tag: axis name -> values
TABLE_GRIDS = {
    "prop3.1": {"n": range(2, 15)},
    "prop3.1-cycle": {"n": range(3, 15)},
    "thm3.2": {"n": range(4, 15)},
    "thm3.2-cycle": {"n": range(4, 15)},
    "thm3.5": {"n": range(2, 15), "k": range(2, 7)},
    "thm3.5-cycle": {"n": range(3, 15), "k": range(2, 7)},
    "cor3.4": {"a": range(2, 13), "b": range(2, 13)},
    "thm3.4": {"n": range(3, 13)},
    "thm3.5-wheel": {"n": range(3, 13)},
    "thm3.5-wheel-max": {"n": range(3, 13)},
    "thm3.6": {"n": range(3, 16), "j": range(1, 5)},
    "thm3.7": {"n": range(3, 13)},
    "thm3.9": {"n": range(3, 13)},
    "thm3.10": {"n": range(5, 13), "gamma": range(5, 13)},
    "thm3.12": {"n": range(5, 13), "k": range(1, 11)},
    "cor3.12": {"n": range(5, 13), "k": range(1, 11)},
    "thm3.13": {"a": range(2, 7), "b": range(2, 13)},
    "thm3.14": {"a": range(2, 6), "b": range(2, 7), "k": range(1, 7)},
    "thm3.15": {"a": range(2, 6), "b": range(2, 7), "k": range(1, 7)},
    "thm3.16": {"a": range(2, 7), "b": range(2, 13)},
    "thm4.1": {"k": range(1, 9), "b": range(1, 9)},
}


def _table_value(tag: str, params: dict):
    if tag == "cor3.4":
        # two-part unions: sum of parts against the bound
        try:
            parts = [params["a"], params["b"]]
            return f"{path_union_gamma(parts)}<={path_union_bound(parts)}"
        except BondageError:
            return None
    return evaluate(tag, **params).value


def table_grid(tag: str, overrides: dict) -> tuple[list[str], list[dict]]:
    """Axis names and one ``{axis: value, ..., "value": v}`` record per grid point."""
    if tag not in TABLE_GRIDS:
        raise InputError(f"unknown theorem tag {tag!r}; known: {', '.join(sorted(TABLE_GRIDS))}")
    axes = dict(TABLE_GRIDS[tag])
    if tag == "thm3.6" and overrides.get("k") is not None:
        # the increase j is one less than the k of W_n's k-notation
        overrides = dict(overrides, j=[k - 1 for k in overrides["k"]])
    for name in axes:
        if overrides.get(name) is not None:
            axes[name] = overrides[name]
    names = list(axes)
    records = [{}]
    for name in names:
        records = [dict(r, **{name: v}) for r in records for v in axes[name]]
    for r in records:
        r["value"] = _table_value(tag, {name: r[name] for name in names})
    return names, records


def render_grid(tag: str, names: list[str], records: list[dict]) -> str:
    cell = lambda v: "-" if v is None else str(v)
    if len(names) == 1:
        rows = [(names[0], "value")] + [(str(r[names[0]]), cell(r["value"])) for r in records]
    else:
        row_keys, col = names[:-1], names[-1]
        cols = sorted({r[col] for r in records})
        grouped: dict = {}
        for r in records:
            grouped.setdefault(tuple(r[n] for n in row_keys), {})[r[col]] = r["value"]
        rows = [(",".join(row_keys) + " \\ " + col, *map(str, cols))]
        for key, vals in grouped.items():
            rows.append((",".join(map(str, key)), *(cell(vals.get(c)) for c in cols)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    body = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    title = f"{tag}: {REGISTRY[tag].description}" if tag in REGISTRY else tag
    return "\n".join([title, *body])


def cmd_table(args) -> int:
    overrides = {"n": args.n, "k": args.k, "a": args.a, "b": args.b, "j": args.j,
                 "gamma": args.gamma}
    names, records = table_grid(args.theorem, overrides)
    if args.json:
        sys.stdout.write(dumps({"theorem": args.theorem, "axes": names, "cells": records}))
    else:
        print(render_grid(args.theorem, names, records))
    return 0


# -- parser ------------------------------------------------------------------

def _add_class_flags(p, with_input=True):
    if with_input:
        p.add_argument("input", nargs="?", help="edge-list file")
    p.add_argument("--class", dest="graph_class",
                   help="graph family: " + ", ".join(f.value for f in Family))
    for name in ("n", "a", "b", "m"):
        p.add_argument(f"--{name}", type=parse_range)


def _add_search_flags(p):
    p.add_argument("--budget", type=int, default=None,
                   help="search budget (default 100000000, or $BONDAGE_BUDGET)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the bondage search")
    p.add_argument("--no-prune", action="store_true", help="use plain exhaustive enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktbondage", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma-t", help="total domination number with a witness")
    _add_class_flags(p)
    p.add_argument("--k", type=parse_range)
    p.set_defaults(func=cmd_gamma_t)

    p = sub.add_parser("bondage", help="k-total bondage number with a certificate")
    _add_class_flags(p)
    p.add_argument("--k", type=parse_range, help="required increase of gamma_t")
    _add_search_flags(p)
    p.set_defaults(func=cmd_bondage)

    p = sub.add_parser("gen", help="write a named graph as an edge list plus labels")
    _add_class_flags(p, with_input=False)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--out", help="output path prefix (.el and .labels.json are added)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="sweep formulas against the exact solvers")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    for name in ("n", "k", "a", "b", "j"):
        p.add_argument(f"--{name}", type=parse_range)
    p.add_argument("--b-max", type=int, default=None, help="largest b for the constructions suite")
    p.add_argument("--include-out-of-hypothesis", action="store_true",
                   help="list refused grid points as skipped entries")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--replay", help="re-run a saved JSON report and compare")
    _add_search_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a formula over its parameter grid")
    p.add_argument("--theorem", required=True, help="formula tag, e.g. thm3.12")
    for name in ("n", "k", "a", "b", "j", "gamma"):
        p.add_argument(f"--{name}", type=parse_range)
    p.add_argument("--json", action="store_true", help="emit the grid as JSON")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExceedsSearchBudget as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, BondageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
