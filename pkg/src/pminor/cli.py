"""Command-line interface.

Exit codes: 0 success, 1 negative answer (no minor, no certificate, threshold
not reached), 2 usage or input error.  Results go to standard output as
graph6 or JSON; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .connectivity import cut_vertices, is_internally_4_connected, is_k_connected, vertex_connectivity
from .containment import SearchBudgetExceeded, is_minor, is_parallel_minor
from .extraction.drivers import extract
from .extraction.ramsey import ramsey_induced
from .families import FamilyId, FamilyTag, ParameterOutOfRange, generate
from .graph import SimpleGraph
from .graph6 import decode, encode, to_edge_list, to_json
from .harness import (
    CorpusParseError,
    CorpusSpec,
    NonExhaustiveCorpus,
    check_attestation,
    corpus_verify,
)

log = logging.getLogger("pminor")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_graph(arg: str) -> SimpleGraph:
    """A graph6 literal, a file holding one (first non-empty line), or ``-`` for stdin."""
    if arg == "-":
        text = sys.stdin.readline()
    elif Path(arg).is_file():
        with open(arg, encoding="ascii") as fh:
            text = next((ln for ln in fh if ln.strip()), "")
    else:
        text = arg
    try:
        return decode(text.strip())
    except ValueError as exc:
        raise UsageError(f"cannot read graph {arg!r}: {exc}") from exc


def emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_gen_family(args) -> int:
    try:
        g = generate(FamilyId(FamilyTag(args.family), args.k, args.a))
    except (ParameterOutOfRange, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.labels:
        print(to_edge_list(g, labels=True))
    elif args.format == "graph6":
        print(encode(g))
    elif args.format == "json":
        emit(to_json(g))
    else:
        print(to_edge_list(g))
    return EXIT_OK


def cmd_check_pminor(args) -> int:
    host, target = read_graph(args.host), read_graph(args.target)
    try:
        bp = is_parallel_minor(host, target, budget=args.budget)
    except SearchBudgetExceeded:
        emit({"found": None, "reason": "budget exhausted"})
        return EXIT_NEGATIVE
    if bp is None:
        emit({"found": False})
        return EXIT_NEGATIVE
    emit({"found": True, "partition": bp.as_lists()})
    return EXIT_OK


def cmd_check_minor(args) -> int:
    host, target = read_graph(args.host), read_graph(args.target)
    try:
        emb = is_minor(host, target, budget=args.budget)
    except SearchBudgetExceeded:
        emit({"found": None, "reason": "budget exhausted"})
        return EXIT_NEGATIVE
    if emb is None:
        emit({"found": False})
        return EXIT_NEGATIVE
    emit({"found": True, "branch_sets": [sorted(s) for s in emb.branch_sets]})
    return EXIT_OK


def cmd_connectivity(args) -> int:
    g = read_graph(args.graph)
    emit({
        "order": g.n,
        "size": g.size(),
        "connectivity": vertex_connectivity(g),
        "connected": g.is_connected(),
        "two_connected": is_k_connected(g, 2),
        "three_connected": is_k_connected(g, 3),
        "internally_4_connected": is_internally_4_connected(g),
        "cut_vertices": sorted(cut_vertices(g)) if g.n else [],
    })
    return EXIT_OK


def cmd_extract(args) -> int:
    g = read_graph(args.graph)
    try:
        out = extract(g, args.c, args.k, budget=args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(out.to_json())
    return EXIT_OK if out.found else EXIT_NEGATIVE


def _spec(args) -> CorpusSpec:
    if args.bundled:
        if args.corpus:
            raise UsageError("give corpus files or --bundled, not both")
        hi = args.order_max if args.order_max is not None else 8
        try:
            return CorpusSpec.bundled(args.order_min, hi, args.filter)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if not args.corpus:
        raise UsageError("no corpus files given (or use --bundled)")
    for p in args.corpus:
        if not Path(p).is_file():
            raise UsageError(f"no such corpus file: {p}")
    return CorpusSpec(list(args.corpus), args.filter, args.order_min, args.order_max,
                      exhaustive=args.exhaustive_attest)


def _write_outputs(report, out_dir: Path) -> None:
    from .plotting import plot_report

    out_dir.mkdir(parents=True, exist_ok=True)
    report.save(out_dir / "report.json")
    with open(out_dir / "per_order.csv", "w", newline="") as fh:
        csv.writer(fh).writerows(report.csv_rows())
    plot_report(report, out_dir / "per_order.png")


def cmd_verify_corpus(args) -> int:
    spec = _spec(args)
    report = corpus_verify(spec, args.c, args.k, budget=args.budget, jobs=args.jobs)
    if args.out_dir:
        _write_outputs(report, Path(args.out_dir))
    doc = report.to_json()
    if not args.with_certificates:
        doc["certificates"] = len(doc["certificates"])
    emit(doc)
    return EXIT_OK


def cmd_threshold(args) -> int:
    spec = _spec(args)
    if not spec.exhaustive:
        raise NonExhaustiveCorpus("threshold needs --exhaustive-attest (or --bundled)")
    if args.check_counts:
        bad = check_attestation(spec)
        if bad:
            raise UsageError(f"corpus counts disagree with the known totals at orders {bad}")
    report = corpus_verify(spec, args.c, args.k, budget=args.budget, jobs=args.jobs)
    thr = report.threshold()
    misses = {str(n): s.misses for n, s in report.per_order.items() if s.misses}
    if isinstance(thr, int):
        emit({"c": args.c, "k": args.k, "threshold": thr, "reached": True, "misses_per_order": misses})
        return EXIT_OK
    emit({"c": args.c, "k": args.k, "threshold": None, "reached": False, "misses_per_order": misses})
    return EXIT_NEGATIVE


def cmd_ramsey(args) -> int:
    g = read_graph(args.graph)
    if args.k < 1:
        raise UsageError("k must be positive")
    res = ramsey_induced(g, args.k)
    if res is None:
        emit({"found": False})
        return EXIT_NEGATIVE
    emit({"found": True, "kind": res.kind, "vertices": list(res.vertices)})
    return EXIT_OK


def _class_arg(text: str) -> int:
    if text == "4i":
        return 4
    try:
        c = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("connectivity class must be 1, 2, 3, 4 or 4i") from None
    if c not in (1, 2, 3, 4):
        raise argparse.ArgumentTypeError("connectivity class must be 1, 2, 3, 4 or 4i")
    return c


def _corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("corpus", nargs="*", help="graph6 files, one graph per line")
    p.add_argument("--c", type=_class_arg, required=True, help="theorem: 1, 2, 3 or 4 (4i accepted)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--filter", choices=["1", "2", "3", "4i"], help="connectivity filter (default: match --c)")
    p.add_argument("--order-min", type=int, default=1)
    p.add_argument("--order-max", type=int)
    p.add_argument("--budget", type=int, help="search-node budget per containment test")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--bundled", action="store_true", help="use the shipped exhaustive corpora (orders 1-8)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pminor",
        description="Parallel-minor toolkit.",
        epilog="Exit status: 0 success, 1 negative answer, 2 usage or input error.",
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-family", help="print a family member")
    p.add_argument("family", choices=[t.value for t in FamilyTag])
    p.add_argument("k", type=int)
    p.add_argument("--a", type=int, help="side size for complete-bipartite")
    p.add_argument("--format", choices=["graph6", "json", "edges"], default="graph6")
    p.add_argument("--labels", action="store_true", help="labelled edge list instead of graph6")
    p.set_defaults(func=cmd_gen_family)

    for name, func, what in (("check-pminor", cmd_check_pminor, "parallel minor"),
                             ("check-minor", cmd_check_minor, "minor")):
        p = sub.add_parser(name, help=f"is TARGET a {what} of HOST")
        p.add_argument("host", help="graph6 string, file, or -")
        p.add_argument("target", help="graph6 string, file, or -")
        p.add_argument("--budget", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("connectivity", help="connectivity summary")
    p.add_argument("graph")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("extract", help="run a theorem driver")
    p.add_argument("graph")
    p.add_argument("--c", type=_class_arg, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=20_000)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify-corpus", help="exhaustive family containment over a corpus")
    _corpus_args(p)
    p.add_argument("--exhaustive-attest", action="store_true")
    p.add_argument("--out-dir", help="also write report.json, per_order.csv and per_order.png here")
    p.add_argument("--with-certificates", action="store_true", help="inline every certificate in the output")
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("threshold", help="empirical threshold order")
    _corpus_args(p)
    p.add_argument("--exhaustive-attest", action="store_true", help="attest that every order is complete")
    p.add_argument("--check-counts", action="store_true", help="compare per-order counts with known totals")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("ramsey", help="induced clique or independent set of order k")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_ramsey)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, NonExhaustiveCorpus, CorpusParseError) as exc:
        print(f"pminor {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
