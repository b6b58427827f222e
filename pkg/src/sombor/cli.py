"""Command-line front end.

Exit codes: 0 ok, 1 theorem violation, 2 usage or I/O error, 3 domain error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import inequalities as ineq
from .extremal import KINDS, GraphClass, UnsupportedError, enumerate_graphs, optimize, verify_extremal_claims
from .graph import Graph, GraphError, ParseError, parse_graph6, read_graphs, to_graph6
from .indices import FAMILIES, ALIASES, DomainError, IndexSpec, named_index
from .report import CHECK_COLUMNS, build_report, check_row, dumps, to_csv, to_text

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _workers() -> int:
    raw = os.environ.get("SOMBOR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliError(f"SOMBOR_THREADS must be an integer, got {raw!r}", EXIT_USAGE) from None


def _load_graphs(args) -> list[Graph]:
    graphs: list[Graph] = []
    try:
        for s in args.g6 or []:
            graphs.append(parse_graph6(s))
        for p in args.input or []:
            graphs.extend(read_graphs(p))
    except ParseError as exc:
        where = f" (position {exc.position})" if exc.position is not None else ""
        raise CliError(f"parse error{where}: {exc}", EXIT_USAGE) from None
    except OSError as exc:
        raise CliError(f"cannot read input: {exc}", EXIT_USAGE) from None
    return graphs


def _emit(args, report: dict, columns: Sequence[str]) -> None:
    if args.format == "json":
        text = dumps(report) + "\n"
    elif args.format == "csv":
        text = to_csv(report["rows"], columns)
    else:
        text = to_text(report["rows"], columns)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write output: {exc}", EXIT_USAGE) from None
    else:
        sys.stdout.write(text)


def _invocation(args, argv: Sequence[str]) -> dict:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output")}
    return {"command": args.command, "argv": list(argv), "params": params}


# ---- verbs -------------------------------------------------------------


def _specs(args) -> list[IndexSpec]:
    try:
        return [IndexSpec(name, args.alpha, args.beta) for name in args.index or ["SO"]]
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def cmd_compute(args, argv) -> int:
    graphs = _load_graphs(args)
    if not graphs:
        raise CliError("no input graphs (use --g6 or --input)", EXIT_USAGE)
    specs = _specs(args)
    rows = []
    for i, g in enumerate(graphs):
        for spec in specs:
            try:
                value = named_index(g, spec).value
            except DomainError as exc:
                raise CliError(f"graph {i} ({to_graph6(g)}): {spec.label}: {exc}", EXIT_DOMAIN) from None
            rows.append(
                {"graph_index": i, "graph6": to_graph6(g), "n": g.n, "m": g.m, "index": spec.label, "value": value}
            )
    summary = {"graphs": len(graphs), "indices": [s.label for s in specs]}
    report = build_report(_invocation(args, argv), summary, rows, not args.no_timestamp)
    _emit(args, report, ("graph_index", "graph6", "n", "m", "index", "value"))
    return EXIT_OK


def _grid_from_args(args) -> dict:
    if getattr(args, "grid", None):
        try:
            return ineq.parse_grid(Path(args.grid).read_text())
        except OSError as exc:
            raise CliError(f"cannot read grid: {exc}", EXIT_USAGE) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
    return dict(ineq.DEFAULT_GRID)


def cmd_check(args, argv) -> int:
    graphs = _load_graphs(args)
    if not graphs:
        raise CliError("no input graphs (use --g6 or --input)", EXIT_USAGE)
    by_id = {t.id: t for t in ineq.CATALOG}
    theorem = by_id[args.theorem]
    grid = _grid_from_args(args)
    for sym in ineq.SYMBOLS:
        value = getattr(args, sym)
        if value is not None:
            grid[sym] = (value,)
    result = ineq.run_suite(graphs, grid, [theorem])
    report = build_report(_invocation(args, argv), result.summary, [check_row(r) for r in result.rows], not args.no_timestamp)
    _emit(args, report, CHECK_COLUMNS)
    return EXIT_VIOLATION if result.violations else EXIT_OK


def default_corpus(max_n: int = 5) -> list[Graph]:
    return [g for n in range(2, max_n + 1) for g in enumerate_graphs(GraphClass(n, "connected"))]


def cmd_suite(args, argv) -> int:
    if args.corpus:
        try:
            corpus = read_graphs(args.corpus)
        except ParseError as exc:
            raise CliError(f"parse error: {exc}", EXIT_USAGE) from None
        except OSError as exc:
            raise CliError(f"cannot read corpus: {exc}", EXIT_USAGE) from None
    else:
        try:
            corpus = default_corpus(args.max_n)
        except UnsupportedError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
    grid = _grid_from_args(args)
    result = ineq.run_suite(corpus, grid, workers=_workers())
    summary = dict(result.summary)
    summary["graphs"] = len(corpus)
    summary["grid"] = {k: list(v) for k, v in grid.items()}
    report = build_report(_invocation(args, argv), summary, [check_row(r) for r in result.rows], not args.no_timestamp)
    _emit(args, report, CHECK_COLUMNS)
    return EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_extremal(args, argv) -> int:
    try:
        if args.claims:
            claims = verify_extremal_claims(args.n, args.alpha if args.alpha is not None else 2.0,
                                     args.beta if args.beta is not None else 0.5)
            rows = [
                {"claim": c.claim, "status": c.status, "detail": c.detail,
                 "optimizers": ";".join(o for r in c.reports for o in r.optimizers)}
                for c in claims.values()
            ]
            summary = {k: v.to_dict() for k, v in claims.items()}
            report = build_report(_invocation(args, argv), summary, rows, not args.no_timestamp)
            _emit(args, report, ("claim", "status", "detail", "optimizers"))
            refuted = any(c.status == "refuted" for c in claims.values())
            return EXIT_VIOLATION if args.assert_theorem and refuted else EXIT_OK
        spec = IndexSpec(args.index, args.alpha, args.beta)
        rep = optimize(GraphClass(args.n, args.graph_class), spec, args.direction)
    except UnsupportedError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except DomainError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    rows = [{"graph6": g6, "value": rep.values[g6]} for g6 in rep.optimizers]
    report = build_report(_invocation(args, argv), rep.to_dict(), rows, not args.no_timestamp)
    _emit(args, report, ("graph6", "value"))
    if args.assert_theorem:
        if rep.matches_theorem is None:
            raise CliError("no extremal result covers this search", EXIT_USAGE)
        return EXIT_OK if rep.matches_theorem else EXIT_VIOLATION
    return EXIT_OK


# ---- parser ------------------------------------------------------------


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--no-timestamp", action="store_true", help="omit the generated_at field")


def _input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", help="inline graph6 string (repeatable)")
    p.add_argument("--input", "-i", action="append", help="graph6-per-line or edge-list file (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    families = sorted(set(FAMILIES) | set(ALIASES))

    p = sub.add_parser("compute", help="evaluate indices on graphs")
    _input_options(p)
    p.add_argument("--index", action="append", choices=families, help="index family (repeatable; default SO)")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    _output_options(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="run one theorem on graphs")
    _input_options(p)
    p.add_argument("--theorem", required=True, choices=ineq.THEOREM_IDS)
    p.add_argument("--grid", help="grid file; single values below override it")
    for sym in ineq.SYMBOLS:
        p.add_argument(f"--{sym}", dest=sym, type=float)
    _output_options(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="run the whole theorem catalog over a corpus")
    p.add_argument("--corpus", help="graph6-per-line or edge-list file (default: connected graphs)")
    p.add_argument("--max-n", type=int, default=5, help="order bound for the default corpus")
    p.add_argument("--grid", help="grid file of 'symbol: values' lines")
    _output_options(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("extremal", help="exhaustive extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="graph_class", choices=KINDS, default="connected")
    p.add_argument("--index", choices=families, default="SO")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    d = p.add_mutually_exclusive_group()
    d.add_argument("--min", dest="direction", action="store_const", const="min")
    d.add_argument("--max", dest="direction", action="store_const", const="max")
    p.add_argument("--assert-theorem", action="store_true", help="exit 1 unless the known extremal result is matched")
    p.add_argument("--claims", action="store_true", help="verify every extremal claim at (n, alpha, beta)")
    _output_options(p)
    p.set_defaults(func=cmd_extremal, direction="max")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, argv)
    except CliError as exc:
        print(f"sombor: error: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"sombor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
