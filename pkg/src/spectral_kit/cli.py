"""Command line front end.

Exit codes: 0 success, 1 verification violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .extremal import ExtremalParams, build
from .graph import Graph, complement, is_connected, vertex_connectivity
from .graphio import GraphParseError, format_graph, parse_graph
from .oracle import EXTENDED_MAX_N, MAX_N, check_structural_claims, enumerate_class, find_minimizer, verify_bounds
from .report import Timer, claims_record, dumps, grid_csv, make_report, search_record, spectrum_record
from .spectra import least_eigenpair


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _read_graph(source: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    elif Path(source).exists():
        text = Path(source).read_text()
    else:
        text = source  # a literal graph6 string
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise UsageError(f"cannot parse graph: {exc}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    p = ExtremalParams(args.n1, args.n2, args.kappa, args.family)
    try:
        g = build(p)
    except ValueError as exc:
        raise UsageError(f"{p.family}({args.n1}, {args.n2}; {args.kappa}): {exc}") from None
    kappa, _ = vertex_connectivity(g)
    _emit(format_graph(g, args.format), args.output)
    print(f"# {p.family}({p.n1},{p.n2};{p.kappa}) n={g.n} edges={g.num_edges()} connectivity={kappa}", file=sys.stderr)
    return 0


def cmd_spectrum(args) -> int:
    timer = Timer()
    with timer.phase("parse"):
        g = _read_graph(args.input)
    with timer.phase("eigensolve"):
        h = complement(g) if args.complement else g
        sr = least_eigenpair(h)
        rec = spectrum_record(h, sr, "complement" if args.complement else "graph")
    report = make_report("spectrum", {"input": args.input, "complement": args.complement}, [rec], timer)
    _emit(dumps(report), args.output)
    return 0


def _check_n(ns: list[int], extended: bool) -> None:
    cap = EXTENDED_MAX_N if extended else MAX_N
    if max(ns) > cap:
        hint = "" if extended else f" without --extended (max {MAX_N})"
        raise UsageError(f"n={max(ns)} exceeds the enumeration limit{hint}; hard cap {EXTENDED_MAX_N}")
    if min(ns) < 3:
        raise UsageError("verification needs n >= 3")


def cmd_verify(args) -> int:
    ns = parse_range(args.n)
    _check_n(ns, args.extended)
    if args.kappa is not None and args.all_kappa:
        raise UsageError("--kappa and --all-kappa are mutually exclusive")
    timer = Timer()
    with timer.phase("search"):
        results = verify_bounds(
            ns, None if args.kappa is None else [args.kappa], jobs=args.jobs, extended=args.extended
        )
    if not results:
        raise UsageError("no (n, kappa) pair in range; kappa must satisfy 1 <= kappa <= n - 2")
    with timer.phase("report"):
        records = [search_record(r) for r in results]
    params = {"n": ns, "kappa": args.kappa, "all_kappa": args.kappa is None, "extended": args.extended}
    report = make_report("verify", params, records, timer)
    _emit(dumps(report), args.output)
    if args.csv:
        Path(args.csv).write_text(grid_csv(records))
    for r in records:
        print(f"n={r['n']} kappa={r['kappa']} min={r['min_value']['value']} predicted={r['predicted']} {r['verdict']}", file=sys.stderr)
    return 1 if any(r["verdict"] == "violation" for r in records) else 0


def cmd_claims(args) -> int:
    timer = Timer()
    if args.input is not None:
        if args.n is not None or args.kappa is not None:
            raise UsageError("give either a graph or --n/--kappa, not both")
        with timer.phase("parse"):
            graphs = [_read_graph(args.input)]
        if not is_connected(graphs[0]) or graphs[0].n < 2:
            raise UsageError("claims require a connected graph G")
        params = {"input": args.input}
    else:
        if args.n is None or args.kappa is None:
            raise UsageError("claims needs a graph or both --n and --kappa")
        _check_n([args.n], args.extended)
        with timer.phase("search"):
            try:
                graphs = list(find_minimizer(args.n, args.kappa, args.jobs, args.extended).witnesses)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        params = {"n": args.n, "kappa": args.kappa}
    with timer.phase("claims"):
        try:
            records = [claims_record(g, check_structural_claims(g)) for g in graphs]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(dumps(make_report("claims", params, records, timer)), args.output)
    return 0


def cmd_enumerate(args) -> int:
    _check_n([args.n], args.extended)
    try:
        graphs = enumerate_class(args.n, args.kappa, dedup=args.dedup, extended=args.extended)
        text = "".join(format_graph(g, "graph6") for g in graphs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spectral-kit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal graph B1/B2/B3")
    c.add_argument("family", type=str.upper, choices=["B1", "B2", "B3"])
    c.add_argument("n1", type=int)
    c.add_argument("n2", type=int)
    c.add_argument("kappa", type=int)
    c.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    c.add_argument("--output")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("spectrum", help="adjacency spectrum of a graph or its complement")
    s.add_argument("input", help="edge-list/graph6 file, '-' for stdin, or a graph6 string")
    s.add_argument("--complement", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", help="exhaustive check of the least-eigenvalue bounds")
    v.add_argument("--n", required=True, help="N or A..B")
    v.add_argument("--kappa", type=int)
    v.add_argument("--all-kappa", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--extended", action="store_true", help="allow n = 8")
    v.add_argument("--output")
    v.add_argument("--csv", help="also write the grid table as CSV")
    v.set_defaults(func=cmd_verify)

    cl = sub.add_parser("claims", help="structural claims on a graph or on the minimizers of a class")
    cl.add_argument("input", nargs="?")
    cl.add_argument("--n", type=int)
    cl.add_argument("--kappa", type=int)
    cl.add_argument("--jobs", type=int, default=1)
    cl.add_argument("--extended", action="store_true")
    cl.add_argument("--output")
    cl.set_defaults(func=cmd_claims)

    e = sub.add_parser("enumerate", help="list the graphs of a connectivity class (graph6)")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--kappa", type=int, required=True)
    e.add_argument("--dedup", action="store_true")
    e.add_argument("--extended", action="store_true")
    e.add_argument("--output")
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
