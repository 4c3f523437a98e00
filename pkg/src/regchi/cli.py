"""Command-line entry point: ``regchi <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails or a solve is
unresolved, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Sequence

from . import bounds as bnd
from . import constructions as con
from .cayley import CayleyError, GroupSpec, cayley_graph, lemma1_connection_set, parse_connection_set
from .chromatic import Unresolved, chromatic_number, invariants
from .formats import Graph6Error, decode_graph6, encode_dot, encode_graph6
from .graph import Graph, GraphError, is_regular
from .search import EnumerationBudget, census_load, extremal_search, resolve_66, verify_certificate
from .table import verify_table


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs {', '.join(missing)}")
    return [getattr(args, n) for n in names]


FAMILIES: dict[str, tuple[str, Callable[[argparse.Namespace], Graph]]] = {
    "turan": ("complete k-partite T_{n,k}, larger parts first (--n --k)",
              lambda a: con.turan(*_need(a, "n", "k"))),
    "antihole": ("complement of the cycle C_n (--n)",
                 lambda a: con.antihole(*_need(a, "n"))),
    "cycle-union-complement": ("complement of a disjoint union of cycles (--lengths 5,5)",
                               lambda a: con.cycle_union_complement(_ints(_need(a, "lengths")[0]))),
    "doubled-turan": ("two copies of T_{n,chi} joined by a matching on deficient vertices (--n --chi)",
                      lambda a: con.doubled_turan(*_need(a, "n", "chi"))),
    "t-star": ("T*_{n,chi}: Turán graph minus regularising matchings (--n --chi)",
               lambda a: con.t_star(*_need(a, "n", "chi"))),
    "g-act": ("G_{a,c,t}: T_{at,t} with a c-matching replaced by two c-cliques (--a --c --t)",
              lambda a: con.g_act(*_need(a, "a", "c", "t"))),
    "t-double-star": ("T**_{16,3}: T_{16,3} minus 13 fixed edges (no parameters)",
                      lambda a: con.t_double_star_16_3()),
    "theorem1": ("T_{a chi, chi} x K_{b+1} with r = a(chi-1)+b (--r --chi)",
                 lambda a: con.theorem1_graph(*_need(a, "r", "chi"))),
    "prism": ("K_k x K_2 (--k)", lambda a: con.prism(*_need(a, "k"))),
}


def _emit_graph(g: Graph, fmt: str, extra: dict, out) -> None:
    if fmt == "graph6":
        out.write(encode_graph6(g) + "\n")
    elif fmt == "dot":
        out.write(encode_dot(g))
    else:
        res = chromatic_number(g)
        payload = dict(extra, order=g.n, regular=is_regular(g), chi=res.chi,
                       edges=g.num_edges, graph6=encode_graph6(g))
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def cmd_construct(args: argparse.Namespace, out) -> int:
    _, build = FAMILIES[args.family]
    g = build(args)
    params = {k: getattr(args, k) for k in ("n", "k", "chi", "a", "c", "t", "r", "lengths")
              if getattr(args, k) is not None}
    _emit_graph(g, args.format, {"family": args.family, "params": params}, out)
    return 0


def cmd_cayley(args: argparse.Namespace, out) -> int:
    if args.lemma1:
        a, k = _ints(args.lemma1)
        x = lemma1_connection_set(a, k)
        group = x.group
    else:
        if not args.moduli or args.set is None:
            raise UsageError("cayley needs --moduli and --set, or --lemma1 A,K")
        group = GroupSpec(tuple(_ints(args.moduli)))
        x = parse_connection_set(group, args.set)
    g = cayley_graph(group, x, require_generating=args.require_generating)
    _emit_graph(g, args.format, {"moduli": list(group.moduli), "connection_set": sorted(x.elements)}, out)
    return 0


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    texts: list[str] = []
    if args.graph6:
        texts.append(args.graph6)
    if args.input:
        fh = sys.stdin if args.input == "-" else open(args.input)
        with fh:
            texts.extend(line for line in fh if line.strip())
    if not texts:
        raise UsageError("give a graph with --graph6 STRING or --input FILE")
    return [decode_graph6(t) for t in texts]


def cmd_chi(args: argparse.Namespace, out) -> int:
    status = 0
    for g in _input_graphs(args):
        try:
            res = chromatic_number(g, args.timeout)
        except Unresolved:
            out.write(json.dumps({"graph6": encode_graph6(g), "status": "unresolved"}, sort_keys=True) + "\n")
            status = 1
            continue
        payload = {
            "graph6": encode_graph6(g),
            "chi": res.chi,
            "coloring": list(res.coloring.colors),
            "clique": list(res.clique),
            "lower_bound_witness": res.lower_bound_witness,
            "refuted_k": res.refuted_k,
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    return status


def cmd_invariants(args: argparse.Namespace, out) -> int:
    status = 0
    for g in _input_graphs(args):
        try:
            rep = invariants(g, args.timeout)
        except Unresolved:
            out.write(json.dumps({"graph6": encode_graph6(g), "status": "unresolved"}, sort_keys=True) + "\n")
            status = 1
            continue
        out.write(json.dumps(dict(rep.to_dict(), graph6=encode_graph6(g)), sort_keys=True) + "\n")
    return status


def cmd_bounds(args: argparse.Namespace, out) -> int:
    out.write(json.dumps(bnd.bounds_report(args.r, args.chi).to_dict(), sort_keys=True) + "\n")
    return 0


def _budget(args: argparse.Namespace) -> EnumerationBudget:
    if args.unlimited:
        return EnumerationBudget.unlimited()
    if not args.budget:
        return EnumerationBudget()
    limits = dict(EnumerationBudget().max_order)
    for item in args.budget.split(","):
        try:
            d, n = item.split(":")
            limits[int(d)] = int(n)
        except ValueError as exc:
            raise UsageError(f"--budget entries look like DEGREE:MAX_ORDER, got {item!r}") from exc
    return EnumerationBudget(limits)


def cmd_search(args: argparse.Namespace, out) -> int:
    census = census_load(args.census) if args.census else None
    cert = extremal_search(args.r, args.chi, args.max_order, jobs=args.jobs,
                           census=census, budget=_budget(args))
    out.write(json.dumps(cert.to_dict(), sort_keys=True) + "\n")
    return 0 if verify_certificate(cert) else 1


def cmd_verify_table(args: argparse.Namespace, out) -> int:
    census = census_load(args.census) if args.census else None
    report = verify_table(minimality=not args.no_minimality, budget=_budget(args),
                          census=census, jobs=args.jobs)
    if args.format == "json":
        out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    else:
        for cell in report.cells:
            names = ", ".join(g.name for g in cell.graphs)
            mark = "PASS" if cell.ok else "FAIL"
            out.write(f"{mark} ({cell.r}|{cell.chi}) order {cell.graphs[0].order}: {names} "
                      f"[minimality: {cell.minimality}]\n")
        for oc in report.open_cells:
            out.write(f"OPEN ({oc['r']}|{oc['chi']}) {oc['status']}; see {oc['resolved_by']}\n")
        out.write(report.summary() + "\n")
    return 0 if report.ok else 1


def cmd_resolve_66(args: argparse.Namespace, out) -> int:
    census = census_load(args.census) if args.census else None
    cert, structure = resolve_66(jobs=args.jobs, census=census)
    payload = dict(cert.to_dict(), witness_structure=structure)
    out.write(json.dumps(payload, sort_keys=True) + "\n")
    return 0 if verify_certificate(cert) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regchi", description="Regular graphs with prescribed chromatic number.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp: argparse.ArgumentParser, default: str = "json") -> None:
        sp.add_argument("--format", choices=("json", "graph6", "dot"), default=default)

    catalog = "\n".join(f"  {name:24s} {doc}" for name, (doc, _) in FAMILIES.items())
    sp = sub.add_parser("construct", help="build a named graph family",
                        description="Build a named graph.\n\nfamilies:\n" + catalog,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    for name in ("n", "k", "chi", "a", "c", "t", "r"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--lengths", help="comma-separated cycle lengths")
    fmt(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("cayley", help="Cayley graph over Z_m1 x ... x Z_mk",
                        description="Cay(G, X) over a direct product of cyclic groups. "
                                    "--lemma1 A,K builds Z_A x Z_K with X = {(i,j): 0<=i<A, 0<j<K}, "
                                    "which is isomorphic to T_{AK,K}.")
    sp.add_argument("--moduli", help="e.g. 2,3")
    sp.add_argument("--set", help='connection set, e.g. "1,4" or "(0,1);(1,2)"')
    sp.add_argument("--lemma1", metavar="A,K")
    sp.add_argument("--require-generating", action="store_true")
    fmt(sp, "graph6")
    sp.set_defaults(func=cmd_cayley)

    for name, func, doc in (
        ("chi", cmd_chi, "exact chromatic number with colouring and clique certificates"),
        ("invariants", cmd_invariants, "chi, omega, alpha, max degree and the Reed value ceil((omega+1+Delta)/2)"),
    ):
        sp = sub.add_parser(name, help=doc, description=doc)
        sp.add_argument("--graph6")
        sp.add_argument("--input", help="file of graph6 lines, or - for stdin")
        sp.add_argument("--timeout", type=float, help="seconds; exceeding it reports 'unresolved'")
        sp.set_defaults(func=func)

    sp = sub.add_parser("bounds", help="lower/upper bounds on n(r|chi)",
                        description="ceil(r chi/(chi-1)) rounded up to even for odd r; "
                                    "a chi (b+1) and min{2 floor(r chi/(chi-1)), a chi (b+1)}.")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--chi", type=int, required=True)
    sp.set_defaults(func=cmd_bounds)

    def search_opts(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--census", help="JSON-lines census file for resumable runs")

    def budget_opts(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--budget", help="DEGREE:MAX_ORDER overrides, e.g. 4:14")
        sp.add_argument("--unlimited", action="store_true")

    sp = sub.add_parser("search", help="certify n(r|chi) by exhaustive enumeration",
                        description="Enumerate r-regular graphs from the lower bound upward "
                                    "until one has chromatic number chi.")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--chi", type=int, required=True)
    sp.add_argument("--max-order", type=int)
    search_opts(sp)
    budget_opts(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify-table", help="check every cell of the extremal table",
                        description="Construct each named graph of the extremal table, check order, "
                                    "regularity and exact chi, and confirm minimality by enumeration "
                                    "where the budget allows.")
    sp.add_argument("--no-minimality", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    search_opts(sp)
    budget_opts(sp)
    sp.set_defaults(func=cmd_verify_table)

    sp = sub.add_parser("resolve-66", help="decide n(6|6) between 11 and 12",
                        description="Enumerate 6-regular graphs on 8..11 vertices through their "
                                    "complements; fall back to K_6 x K_2 at order 12.")
    search_opts(sp)
    sp.set_defaults(func=cmd_resolve_66)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except (UsageError, Graph6Error, GraphError, con.ConstructionError, CayleyError,
            bnd.InfeasibleError, ValueError) as exc:
        print(f"regchi {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
