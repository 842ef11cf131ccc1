"""Command-line interface.

Exit status: 0 on success, 1 when the graph is outside the requested class,
the instance is unsupported or a partition fails verification, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import atoms as atoms_mod
from .catalog import iter_catalog
from .errors import BudgetExceeded, MalformedPartition, NotInClass, ParseError
from .fast_transitivity import (
    Unsupported,
    transitivity_auto,
    transitivity_chain,
    transitivity_cochain,
    transitivity_split,
)
from .graph import verify_transitive_partition
from .graph_io import (
    GraphDocument,
    emit_graph6,
    emit_partition,
    emit_report,
    parse_graph,
    parse_partition,
)
from .nordhaus_gaddum import find_counterexamples, ng_sum, verify_ng_chain, verify_ng_split
from .oracle import SearchBudget, transitivity_bruteforce
from .recognition import NotRecognized, chain_ordering, cochain_ordering, split_partition

EPILOG = """\
environment:
  TRANSITIVITY_BUDGET        default vertex limit for exhaustive search (12)
  TRANSITIVITY_PURE_PYTHON   set to 1 to bypass the compiled kernels
"""


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, fmt: str | None) -> GraphDocument:
    if fmt is None:
        fmt = "graph6" if path.endswith(".g6") else "edgelist"
    return parse_graph(_read_text(path), fmt)


def _budget(args) -> SearchBudget:
    if args.budget is None:
        return SearchBudget()
    return SearchBudget(max_vertices=args.budget)


def _labels(doc: GraphDocument, vs):
    return [doc.label(v) for v in vs]


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _not_recognized(doc: GraphDocument, res: NotRecognized) -> dict:
    out = res.to_report()
    if res.witness is not None:
        out["witness"] = _labels(doc, res.witness)
    return out


def cmd_tr(args) -> int:
    doc = _load(args.file, args.format)
    g = doc.graph
    cert = not args.no_cert
    method = args.method
    if method == "auto":
        res = transitivity_auto(g, _budget(args), certificate=cert)
    elif method == "oracle":
        res = transitivity_bruteforce(g, _budget(args))
        if not cert:
            res = type(res)(res.value, None, res.method)
    else:
        recognize = {"split": split_partition, "chain": chain_ordering,
                     "cochain": cochain_ordering}[method]
        solve = {"split": transitivity_split, "chain": transitivity_chain,
                 "cochain": transitivity_cochain}[method]
        rec = recognize(g)
        if isinstance(rec, NotRecognized):
            _write(args, emit_report(_not_recognized(doc, rec)))
            return 1
        res = solve(g, rec, certificate=cert)
    if isinstance(res, Unsupported):
        _write(args, emit_report(res))
        return 1
    report = res.to_report(doc.labels)
    report.update(n=g.n, m=g.m)
    _write(args, emit_report(report))
    if args.partition_out and res.certificate is not None:
        Path(args.partition_out).write_text(emit_partition(res.certificate.classes, doc))
    return 0


def cmd_recognize(args) -> int:
    doc = _load(args.file, args.format)
    g = doc.graph
    out = {}
    sp = split_partition(g)
    if isinstance(sp, NotRecognized):
        out["split"] = _not_recognized(doc, sp)
    else:
        out["split"] = {"recognized": True, "clique": _labels(doc, sorted(sp.k)),
                        "independent": _labels(doc, sorted(sp.s))}
    for name, fn in (("chain", chain_ordering), ("cochain", cochain_ordering)):
        co = fn(g)
        if isinstance(co, NotRecognized):
            out[name] = _not_recognized(doc, co)
        else:
            out[name] = {"recognized": True, "sigma_x": _labels(doc, co.sigma_x),
                         "sigma_y": _labels(doc, co.sigma_y), "j": co.j, "p": co.p}
    _write(args, emit_report(out))
    return 0


def cmd_atoms(args) -> int:
    if args.action == "gen":
        _write(args, atoms_mod.write_atlas(atoms_mod.generate_atoms(args.t)))
    else:
        records = atoms_mod.classify_atoms(args.t, _budget(args))
        excluded = [emit_graph6(r.graph) for r in records if not r.in_Ak_prime]
        _write(args, emit_report({"t": args.t, "atoms": records, "count": len(records),
                                  "ve_critical_count": len(records) - len(excluded),
                                  "excluded": excluded}))
    return 0


def cmd_ng(args) -> int:
    doc = _load(args.file, args.format)
    g = doc.graph
    if args.verify:
        if split_partition(g, witness=False):
            report = verify_ng_split(g)
        elif chain_ordering(g):
            report = verify_ng_chain(g)
        else:
            report = ng_sum(g, _budget(args))
    else:
        report = ng_sum(g, _budget(args))
    _write(args, emit_report(report))
    return 0 if report.matches_theorem in (None, True) else 1


def cmd_counterexample(args) -> int:
    graphs = iter_catalog(args.nmax, files=args.catalog) if args.catalog else None
    found = find_counterexamples(args.nmax, graphs, _budget(args))
    rows = []
    for g in found:
        r = ng_sum(g, _budget(args))
        rows.append({"graph6": emit_graph6(g), **r.to_report()})
    _write(args, emit_report({"nmax": args.nmax, "count": len(rows), "graphs": rows}))
    return 0


def cmd_verify(args) -> int:
    doc = _load(args.graph, args.format)
    classes = parse_partition(_read_text(args.partition), doc)
    try:
        ok = verify_transitive_partition(doc.graph, classes)
        out = {"verified": ok, "k": len(classes)}
    except MalformedPartition as exc:
        ok = False
        out = {"verified": False, "error": str(exc)}
    _write(args, emit_report(out))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transitivity",
        description="Transitivity of graphs: exact, split, chain and co-chain solvers.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="graph file (.g6 = graph6, else edge list; '-' = stdin)")
        p.add_argument("--format", choices=["graph6", "edgelist"])
        p.add_argument("--budget", type=int, help="vertex limit for exhaustive search")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")

    p = sub.add_parser("tr", help="compute the transitivity")
    common(p)
    p.add_argument("--method", default="auto", choices=["auto", "split", "chain", "cochain", "oracle"])
    p.add_argument("--no-cert", action="store_true", help="skip the certificate partition")
    p.add_argument("--partition-out", help="also write the partition file here")
    p.set_defaults(func=cmd_tr)

    p = sub.add_parser("recognize", help="split / chain / co-chain membership")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("atoms", help="generate or classify t-atoms")
    p.add_argument("action", choices=["gen", "classify"])
    p.add_argument("t", type=int)
    common(p, with_file=False)
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("ng", help="Tr(G) + Tr(complement)")
    common(p)
    p.add_argument("--verify", action="store_true", help="compare with the class theorem")
    p.set_defaults(func=cmd_ng)

    p = sub.add_parser("counterexample", help="graphs with sum n+1 besides K_n and its complement")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--catalog", nargs="+", help="graph6 catalog files (default: bundled)")
    common(p, with_file=False)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify", help="check a partition file against a graph")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--format", choices=["graph6", "edgelist"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"transitivity: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, NotInClass) as exc:
        print(f"transitivity: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
