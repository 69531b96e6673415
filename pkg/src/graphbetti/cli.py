"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 enumeration ceiling exceeded, 4 method incompatible with the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from graphbetti.betti import DEFAULT_CEILING, BettiTable, CeilingExceededError, betti_table
from graphbetti.cellular import (
    C4_EXAMPLE_ASSIGNMENT,
    c4_search,
    is_cellular_resolution,
    taylor_complex,
)
from graphbetti.families import betti_family
from graphbetti.fixtures import RP2_TRIANGLES_1INDEXED, rp2_beta_29_31, rp2_graph
from graphbetti.graph import Graph, GraphError, count_induced_matchings, family, is_forest, parse_family, parse_graph_text
from graphbetti.homology import FieldSpec
from graphbetti.verify import DEFAULT_SEED, SUITES, run_suites

EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_CEILING = 3
EXIT_METHOD = 4

METHODS = ("auto", "hochster", "dual-links", "koszul", "forest", "closed-form")


class MethodError(ValueError):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", "--graph", dest="input", metavar="PATH", help="graph file ('n <count>' then edge lines)")
    src.add_argument("--family", metavar="SPEC", help="e.g. cycle:5, bipartite:2,3, multipartite:2,2,3, star:4")


def _add_field(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", type=_field, default=FieldSpec(0), help="0 (rationals), 2, or p:<prime>")


def _add_compute(p: argparse.ArgumentParser) -> None:
    _add_input(p)
    _add_field(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="largest n for full subset enumeration")
    p.add_argument("--workers", type=int, default=1, help="processes for the subset loop")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphbetti", description="Betti numbers of edge ideals of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded Betti table")
    _add_compute(p)
    p.add_argument("--multigraded", action="store_true", help="include multigraded entries in JSON output")

    p = sub.add_parser("pd", help="projective dimension with a certificate")
    _add_compute(p)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), action="append")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("matchings", help="count induced matchings of each size")
    _add_input(p)

    p = sub.add_parser("rp2", help="the projective-plane graph and beta_{29,31}")
    p.add_argument("--field", type=_field, action="append", help="repeatable; default 0, 2 and 3")

    p = sub.add_parser("cellular", help="cellular resolution checks")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("check-c4", help="search all labelings of the forced C4 complex")
    _add_field(c)
    c = csub.add_parser("taylor", help="check the Taylor complex of a graph")
    _add_input(c)
    _add_field(c)
    return parser


def load_graph(args: argparse.Namespace) -> tuple[Graph, tuple[str, tuple[int, ...]] | None]:
    if args.family is not None:
        kind, params = parse_family(args.family)
        return family(kind, *params), (kind, params)
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_graph_text(text), None


def compute_table(args: argparse.Namespace) -> BettiTable:
    G, fam = load_graph(args)
    method = args.method
    if method == "auto":
        method = "closed-form" if fam else ("forest" if is_forest(G) else "hochster")
    if method == "closed-form":
        if fam is None:
            raise MethodError("closed-form needs a --family input")
        return betti_family(fam[0], *fam[1], field=args.field)
    if method == "forest":
        if not is_forest(G):
            raise MethodError("the forest method needs a forest; try --method hochster")
        return betti_table(G, args.field, "forest")
    return betti_table(G, args.field, method, ceiling=args.ceiling, workers=args.workers)


def cmd_betti(args: argparse.Namespace) -> int:
    table = compute_table(args)
    if args.format == "json":
        data = table.to_dict()
        if not args.multigraded:
            data.pop("multigraded", None)
        print(json.dumps(data, indent=2))
    else:
        pd = table.projective_dimension()
        print(f"field {table.field.label}, n = {table.n}")
        print(table.render_text())
        print(f"pd = {pd.value} (beta_{{{pd.certificate[0]},{pd.certificate[1]}}} != 0)")
    return 0


def cmd_pd(args: argparse.Namespace) -> int:
    pd = compute_table(args).projective_dimension()
    if args.format == "json":
        print(json.dumps({"pd": pd.value, "certificate": {"i": pd.certificate[0], "d": pd.certificate[1]}}))
    else:
        print(f"{pd.value} certificate i={pd.certificate[0]} d={pd.certificate[1]}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(SUITES)
    report = run_suites(names, args.seed, args.max_n)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"seed {report['seed']} max-n {report['max_n']}")
        for c in report["checks"]:
            print(f"{'PASS' if c['ok'] else 'FAIL'} {c['id']} {c['detail']}".rstrip())
        print(f"{report['passed']} passed, {report['failed']} failed")
    return 0 if report["ok"] else EXIT_VERIFY


def cmd_matchings(args: argparse.Namespace) -> int:
    G, _ = load_graph(args)
    counts = {i: count_induced_matchings(G, i) for i in range(1, G.n // 2 + 1)}
    print(json.dumps({"n": G.n, "induced_matchings": {str(i): c for i, c in counts.items()}}))
    return 0


def cmd_rp2(args: argparse.Namespace) -> int:
    fields = args.field or [FieldSpec(0), FieldSpec(2), FieldSpec(3)]
    G = rp2_graph()
    out = {
        "triangles": ["".join(map(str, t)) for t in RP2_TRIANGLES_1INDEXED],
        "vertices": G.n,
        "edges": len(G.edges),
        "beta_29_31": {F.label: rp2_beta_29_31(F) for F in fields},
    }
    print(json.dumps(out, indent=2))
    return 0


def cmd_cellular(args: argparse.Namespace) -> int:
    if args.action == "check-c4":
        search = c4_search(args.field)
        out = {
            "field": args.field.label,
            "no_minimal_cellular": search.ok,
            "example_assignment_witnesses": [list(w) for w in search.witnesses_for(C4_EXAMPLE_ASSIGNMENT)],
            "assignments": [
                {"labels": [list(a) for a in labels], "witnesses": [list(w) for w in wit]}
                for labels, wit in search.assignments
            ],
        }
        print(json.dumps(out, indent=2))
        return 0 if search.ok else EXIT_VERIFY
    G, _ = load_graph(args)
    X = taylor_complex(G)
    check = is_cellular_resolution(X, args.field)
    out = {
        "field": args.field.label,
        "generators": [list(a) for a in X.labels],
        "face_counts": X.face_counts(),
        "cellular": check.ok,
        "witnesses": [list(w) for w in check.witnesses],
    }
    print(json.dumps(out, indent=2))
    return 0 if check.ok else EXIT_VERIFY


COMMANDS = {
    "betti": cmd_betti,
    "pd": cmd_pd,
    "verify": cmd_verify,
    "matchings": cmd_matchings,
    "rp2": cmd_rp2,
    "cellular": cmd_cellular,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CeilingExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except MethodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
