"""Command line: build KR crystal graphs, run verification suites, count vertices, run RSK on a matrix."""

from __future__ import annotations

import argparse
import json
import sys

from .graph import DEFAULT_BUDGET, BudgetExceeded
from .kr_a import col_letters, row_letters
from .rsk import BiMatrix, ell, kappa_nw, kappa_se, parse_matrix
from .suites import FAMILIES, SUITES, build_graph, default_suites, expected_count, make_instance, run_suites
from .tableau import barred, unbarred


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def summary(g) -> str:
    classical = tuple(i for i in g.index_set if i != 0)
    highs = g.highest_weight_vertices(classical)
    lines = [f"vertices: {len(g)}", f"edges: {len(g.edges)}"]
    lines += [f"  color {i}: {c}" for i, c in g.edge_counts().items()]
    lines.append("classical highest weight vertices:")
    lines += [f"  {g.keys[v]}  wt(doubled)={list(g.wt[v].coords)}" for v in highs]
    return "\n".join(lines) + "\n"


def _instance(args):
    return make_instance(args.family, args.n, args.r, args.s)


def cmd_gen(args) -> int:
    _, g = build_graph(_instance(args), args.budget)
    if args.format == "dot":
        text = g.to_dot()
    elif args.format == "json":
        text = g.dumps() + "\n"
    else:
        text = summary(g)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    inst = _instance(args)
    names = []
    for item in args.suite or ["all"]:
        names += [x for x in item.split(",") if x]
    if "all" in names:
        names = default_suites(inst)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    reports = run_suites(inst, names, args.budget)
    doc = {"instance": inst.label(), "ok": all(r.ok for r in reports),
           "suites": [r.to_dict() for r in reports]}
    _emit(json.dumps(doc, indent=1) + "\n", args.out)
    for r in reports:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.checked} checks, {len(r.violations)} violations)",
              file=sys.stderr)
    return 0 if doc["ok"] else 1


def cmd_count(args) -> int:
    inst = _instance(args)
    _, g = build_graph(inst, args.budget)
    want = expected_count(inst)
    print(f"{inst.label()}: generated {len(g)}, enumerated {want}")
    return 0 if want == len(g) else 1


def cmd_rsk(args) -> int:
    text = sys.stdin.read() if args.matrix == "-" else open(args.matrix).read()
    rows = parse_matrix(text)
    r = len(rows)
    n = r + (len(rows[0]) if rows else 0)
    M = BiMatrix(row_letters(r), col_letters(n, r), tuple(tuple(x) for x in rows))
    P, Q = kappa_se(M) if args.corner == "se" else kappa_nw(M)
    print(f"P ({args.corner}):")
    print(P.pretty(barred(r)) if P.rows else "(empty)")
    print(f"Q ({args.corner}):")
    print(Q.pretty(unbarred(n)) if Q.rows else "(empty)")
    print(f"ell = {ell(M)}")
    return 0


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krcrystal", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def instance_flags(q):
        q.add_argument("--family", choices=FAMILIES, required=True)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--r", type=int, default=None, help="node r (default n for the non-A families)")
        q.add_argument("--s", type=int, required=True)
        q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of vertices")
        q.add_argument("--out", default=None, help="output file (default stdout)")

    g = sub.add_parser("gen", help="generate a KR crystal graph")
    instance_flags(g)
    g.add_argument("--format", choices=("dot", "json", "summary"), default="summary")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run verification suites")
    instance_flags(v)
    v.add_argument("--suite", action="append",
                   help=f"comma separated, repeatable; one of {', '.join(SUITES)}, all")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="vertex count against the independent enumeration")
    instance_flags(c)
    c.set_defaults(func=cmd_count)

    r = sub.add_parser("rsk", help="RSK of a matrix with rows r-bar..1-bar and columns r+1..n")
    r.add_argument("--matrix", required=True, help="whitespace separated rows, '-' for stdin")
    r.add_argument("--corner", choices=("se", "nw"), default="se")
    r.set_defaults(func=cmd_rsk)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
