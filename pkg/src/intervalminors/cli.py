"""Command-line entry point.

Exit status: 0 on success, 1 on domain errors (and on any MISMATCH row in a
verification sweep), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import oracle
from .checker import (
    WitnessError,
    contains_kl_exhaustive,
    contains_kl_greedy,
    contains_kl_operational,
    contains_multipartite,
)
from .constructions import (
    ConstructionError,
    concatenate,
    example_pq,
    extremal_bipartite,
    multipartite_construction,
)
from .formulas import m_formula, multipartite_m_formula
from .graphs import GraphError, OrderedBipartiteGraph, dumps, graph_to_dict, loads, to_dot


class DomainError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return out


def _read_graph(path: str):
    try:
        with open(path) if path != "-" else sys.stdin as fh:
            return loads(fh.read())
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}")


def _write(text: str, path: Optional[str]):
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_graph(g, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    return dumps(g) + "\n"


# -- subcommands -----------------------------------------------------------

def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    pattern = args.pattern
    if isinstance(g, OrderedBipartiteGraph) and len(pattern) == 2 and not args.identity_only:
        k, l = pattern
        if args.method == "exhaustive":
            w = contains_kl_exhaustive(g, k, l)
        elif args.method == "operational":
            print("CONTAINED" if contains_kl_operational(g, k, l) else "AVOIDS")
            return 0
        else:
            w = contains_kl_greedy(g, k, l)
    else:
        if len(pattern) != g.nparts:
            raise DomainError(f"pattern has {len(pattern)} parts, graph has {g.nparts}")
        w = contains_multipartite(g, pattern, allow_permutation=not args.identity_only)
    if w is None:
        print("AVOIDS")
    else:
        print("CONTAINED")
        print(w.to_json())
    return 0


def cmd_construct(args) -> int:
    verify = not args.no_verify
    if args.family == "example-pq":
        ih = None if args.ih is None else [i - 1 for i in args.ih]
        g = example_pq(args.p, args.q, args.k, args.l, i_h=ih, verify=verify)
    elif args.family == "extremal":
        g = extremal_bipartite(args.p, args.q, args.k, args.l, verify=verify,
                               transpose_fallback=args.transpose)
    elif args.family == "multipartite":
        if args.parts is None or args.pattern is None:
            raise DomainError("multipartite needs --parts and --pattern")
        ih = None if args.ih is None else [i - 1 for i in args.ih]
        g = multipartite_construction(args.parts, args.pattern, i_h=ih, verify=verify)
    else:  # concat
        if not args.graphs or len(args.graphs) != 2:
            raise DomainError("concat needs exactly two --graph inputs")
        g = concatenate(_read_graph(args.graphs[0]), _read_graph(args.graphs[1]), args.k)
    _write(_render_graph(g, args.format), args.output)
    return 0


def cmd_formula(args) -> int:
    if args.parts is not None:
        if args.pattern is None:
            raise DomainError("--parts needs --pattern")
        res = multipartite_m_formula(args.parts, args.pattern)
        print(res.describe())
        return 0
    for name in ("p", "q", "k", "l"):
        if getattr(args, name) is None:
            raise DomainError("formula needs -p -q -k -l (or --parts/--pattern)")
    print(m_formula(args.p, args.q, args.k, args.l).describe())
    return 0


def cmd_oracle(args) -> int:
    if args.parts is not None:
        if args.pattern is None:
            raise DomainError("--parts needs --pattern")
        res = oracle.exact_m_multipartite(args.parts, args.pattern, budget=args.budget)
    else:
        for name in ("p", "q", "k", "l"):
            if getattr(args, name) is None:
                raise DomainError("oracle needs -p -q -k -l (or --parts/--pattern)")
        res = oracle.exact_m_bipartite(args.p, args.q, args.k, args.l, budget=args.budget,
                                       jobs=args.jobs)
    out = {"value": res.value, "explored": res.explored, "seconds": round(res.seconds, 4),
           "witness": graph_to_dict(res.witness)}
    print(json.dumps(out))
    return 0


def _emit_table(rows: list[dict], fmt: str, path: Optional[str]):
    cols = oracle.SWEEP_COLUMNS
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _write(buf.getvalue(), path)
        return
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    counts = {}
    for r in rows:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    _write("\n".join(lines) + "\n", path)


def cmd_verify_theorem1(args) -> int:
    rows = oracle.verify_theorem1(args.pmax, args.qmax, args.kmax, args.lmax,
                                  budget=args.budget, jobs=args.jobs)
    _emit_table(rows, args.format, args.output)
    return 1 if any(r["status"] == oracle.MISMATCH for r in rows) else 0


def _parse_case(text: str):
    try:
        n, ells = text.split(":")
        return tuple(_int_list(n)), tuple(_int_list(ells))
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"expected N1,N2,...:L1,L2,..., got {text!r}")


def cmd_verify_theorem2(args) -> int:
    rows = oracle.verify_theorem2(args.case or None, budget=args.budget)
    _emit_table(rows, args.format, args.output)
    return 1 if any(r["status"] == oracle.MISMATCH for r in rows) else 0


def cmd_export(args) -> int:
    g = _read_graph(args.graph)
    _write(_render_graph(g, args.format), args.output)
    return 0


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="interval-minors",
                                 description="Interval minors of ordered bipartite and multipartite graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pqkl(p, required=False):
        p.add_argument("-p", type=int, required=required)
        p.add_argument("-q", type=int, required=required)
        p.add_argument("-k", type=int, required=required)
        p.add_argument("-l", type=int, required=required)

    def budget_jobs(p):
        p.add_argument("--budget", type=int, default=None,
                       help="max potential edges (default $INTERVALMINORS_BUDGET or 26)")
        p.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("check", help="decide containment of a complete pattern")
    c.add_argument("--graph", required=True, help="graph JSON path ('-' for stdin)")
    c.add_argument("--pattern", required=True, type=_int_list, help="e.g. 2,3 or 2,3,4")
    c.add_argument("--method", choices=["greedy", "exhaustive", "operational"], default="greedy")
    c.add_argument("--identity-only", action="store_true",
                   help="pattern part i must map to host part i")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", help="build an extremal construction")
    c.add_argument("family", choices=["example-pq", "extremal", "multipartite", "concat"])
    pqkl(c)
    c.add_argument("--ih", type=_int_list, default=None, help="1-based A indices, k-1 of them")
    c.add_argument("--parts", type=_int_list)
    c.add_argument("--pattern", type=_int_list)
    c.add_argument("--graph", dest="graphs", action="append", help="concat inputs (lower first)")
    c.add_argument("--transpose", action="store_true",
                   help="extremal: build the transposed graph when q is too short")
    c.add_argument("--no-verify", action="store_true")
    c.add_argument("--format", choices=["json", "dot"], default="json")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("formula", help="closed-form extremal value")
    pqkl(c)
    c.add_argument("--parts", type=_int_list)
    c.add_argument("--pattern", type=_int_list)
    c.set_defaults(func=cmd_formula)

    c = sub.add_parser("oracle", help="exact extremal number by branch and bound")
    pqkl(c)
    c.add_argument("--parts", type=_int_list)
    c.add_argument("--pattern", type=_int_list)
    budget_jobs(c)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("verify-theorem1", help="oracle vs formula sweep, bipartite")
    for name, default in (("--pmax", 5), ("--qmax", 5), ("--kmax", 4), ("--lmax", 4)):
        c.add_argument(name, type=int, default=default)
    budget_jobs(c)
    c.add_argument("--format", choices=["table", "csv"], default="table")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_verify_theorem1)

    c = sub.add_parser("verify-theorem2", help="oracle vs formula, multipartite")
    c.add_argument("--case", type=_parse_case, action="append",
                   help="N1,N2,...:L1,L2,... (repeatable)")
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--format", choices=["table", "csv"], default="table")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_verify_theorem2)

    c = sub.add_parser("export", help="convert a graph JSON file to JSON or DOT")
    c.add_argument("--graph", required=True)
    c.add_argument("--format", choices=["json", "dot"], default="dot")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, GraphError, WitnessError, ConstructionError,
            oracle.BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main


if __name__ == "__main__":
    sys.exit(main())
