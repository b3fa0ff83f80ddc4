"""Command-line frontend: ``k24 check|oracle|gen|enum|hamilton|apex|audit``.

Exit codes: 0 success or free, 1 minor found, 2 usage or parse error,
3 oracle budget exceeded.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .catalog import EXCEPTION_NAMES, FamilySpec, build_family, catalog_ids, named_graph
from .core_graph import Graph, GraphError, emit_edge_list, emit_graph6, is_k_connected, read_graphs
from .minor_oracle import OracleBudgetExceeded, default_budget, find_k2t_minor, find_rooted_k2t_minor

EXIT_OK, EXIT_MINOR, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_CORPUS = Path("corpus/connected_le8.g6")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 already; keep the message terse
        self.print_usage(sys.stderr)
        print(f"k24: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str, fmt: str = "auto") -> list[Graph]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    graphs = read_graphs(text, fmt)
    if not graphs:
        raise GraphError("no graph in input")
    return graphs


def _one(path: str, fmt: str = "auto") -> Graph:
    graphs = _read(path, fmt)
    if len(graphs) > 1:
        raise GraphError(f"expected one graph, got {len(graphs)}")
    return graphs[0]


def _emit(obj: object) -> None:
    print(json.dumps(obj, sort_keys=True))


# -- subcommands -------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    from .recognizer import recognize

    certs = [recognize(g, args.budget) for g in _read(args.file, args.format)]
    payload = [c.to_json() for c in certs]
    if args.cert:
        Path(args.cert).write_text(json.dumps(payload[0] if len(payload) == 1 else payload, indent=1) + "\n")
        for c in certs:
            print(c.verdict)
    else:
        for p in payload:
            _emit(p)
    return EXIT_OK if all(c.free for c in certs) else EXIT_MINOR


def cmd_oracle(args: argparse.Namespace) -> int:
    found = False
    for g in _read(args.file, args.format):
        if args.rooted:
            try:
                x, y = (int(v) for v in args.rooted.split(","))
            except ValueError:
                raise GraphError(f"--rooted expects X,Y, got {args.rooted!r}") from None
            m = find_rooted_k2t_minor(g, x, y, args.t, args.budget)
        else:
            m = find_k2t_minor(g, args.t, args.budget)
        _emit({"t": args.t, "rooted": args.rooted, "minor": m.to_json() if m else None})
        found |= m is not None
    if not found:
        print("no minor", file=sys.stderr)
    return EXIT_MINOR if found else EXIT_OK


def _parse_family(text: str) -> FamilySpec:
    parts = [p.strip() for p in text.split(",")]
    plus = parts[-1] == "+"
    if plus:
        parts = parts[:-1]
    if len(parts) != 3:
        raise GraphError(f"--family expects n,r,s[,+], got {text!r}")
    try:
        n, r, s = (int(p) for p in parts)
    except ValueError:
        raise GraphError(f"--family expects integers, got {text!r}") from None
    if not (n >= 3 and 0 <= r <= n - 3 and 0 <= s <= n - 3):
        raise GraphError(f"family parameters out of range: n={n}, r={r}, s={s}")
    return FamilySpec(n, r, s, plus)


def _write_graph(g: Graph, fmt: str) -> None:
    if fmt == "edges":
        sys.stdout.write(emit_edge_list(g))
    else:
        print(emit_graph6(g))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family:
        g = build_family(_parse_family(args.family))
    else:
        try:
            g = named_graph(args.exception)
        except KeyError:
            raise GraphError(f"unknown graph name {args.exception!r}") from None
    _write_graph(g, args.format)
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    for cid in catalog_ids(args.n):
        print(f"{emit_graph6(named_graph(cid))}\t{cid}" if args.ids else emit_graph6(named_graph(cid)))
    return EXIT_OK


def cmd_hamilton(args: argparse.Namespace) -> int:
    from .hamilton import hamilton_cycle_3conn, hamilton_path_2conn
    from .recognizer import HasK24Minor

    g = _one(args.file, args.format)
    try:
        if g.n >= 4 and is_k_connected(g, 3):
            c = hamilton_cycle_3conn(g)
        else:
            c = hamilton_path_2conn(g)
    except HasK24Minor as exc:
        _emit({"error": "has K_{2,4} minor", "minor": exc.model.to_json()})
        print("k24: input has a K_{2,4} minor", file=sys.stderr)
        return EXIT_MINOR
    _emit(c.to_json())
    return EXIT_OK


def cmd_apex(args: argparse.Namespace) -> int:
    from .recognizer import HasK24Minor, find_apex_set, is_planar_k24free

    g = _one(args.file, args.format)
    try:
        u = find_apex_set(g)
    except HasK24Minor as exc:
        _emit({"error": "has K_{2,4} minor", "minor": exc.model.to_json()})
        print("k24: input has a K_{2,4} minor", file=sys.stderr)
        return EXIT_MINOR
    _emit({"apex": sorted(u), "planar": is_planar_k24free(g)})
    return EXIT_OK


SUITES = ("compare", "counting", "edges", "table1", "hasse", "subdividable", "hamilton", "apex")


def cmd_audit(args: argparse.Namespace) -> int:
    from . import audit

    chosen = [s for s in SUITES if getattr(args, s)]
    if args.suite:
        for s in args.suite.split(","):
            if s not in SUITES:
                raise GraphError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
            chosen.append(s)
    if not chosen:
        chosen = list(SUITES)
    corpus = None
    if "compare" in chosen or "apex" in chosen:
        if args.corpus.exists():
            corpus = read_graphs(args.corpus.read_text(), "g6")
        else:
            print(f"k24: corpus {args.corpus} not found, using {args.samples} random graphs", file=sys.stderr)
            corpus = audit.random_corpus(args.samples, args.seed)
    report = audit.run_suites(chosen, corpus=corpus, seed=args.seed, jobs=args.jobs, budget=args.budget)
    if args.json:
        print(json.dumps(report, indent=1, sort_keys=True))
    else:
        for name, part in report["suites"].items():
            print(f"{'PASS' if part['ok'] else 'FAIL'}  {name}: {part['summary']}")
    return EXIT_OK if report["ok"] else EXIT_MINOR


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="k24", description="K_{2,4}-minor-freeness with certificates")
    p.add_argument("--budget", type=int, default=None, help="oracle node cap (default: $K24_BUDGET or built-in)")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def graph_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("g6", "edges", "auto"), default="auto")
        sp.add_argument("file", metavar="FILE", help="input path or - for stdin")

    sp = sub.add_parser("check", help="recognize and emit a certificate")
    graph_input(sp)
    sp.add_argument("--cert", metavar="OUT.json", help="write certificate JSON here")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("oracle", help="brute-force K_{2,t} minor search")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--rooted", metavar="X,Y")
    graph_input(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="emit a family member or a named graph")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", metavar="n,r,s[,+]")
    grp.add_argument("--exception", metavar="NAME", help=f"one of {', '.join(EXCEPTION_NAMES)} or another named graph")
    sp.add_argument("--format", choices=("g6", "edges"), default="g6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("enum", help="all 3-connected K_{2,4}-minor-free graphs of order N")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ids", action="store_true", help="append the catalog id to each line")
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("hamilton", help="hamilton cycle (3-connected) or path (2-connected)")
    graph_input(sp)
    sp.set_defaults(func=cmd_hamilton)

    sp = sub.add_parser("apex", help="set U, |U| <= 2, with g - U outerplanar")
    graph_input(sp)
    sp.set_defaults(func=cmd_apex)

    sp = sub.add_parser("audit", help="conformance checks")
    for s in SUITES:
        sp.add_argument(f"--{s}", action="store_true")
    sp.add_argument("--suite", metavar="A,B,..", help="comma-separated suites (alternative to the flags)")
    sp.add_argument("--corpus", type=Path, default=DEFAULT_CORPUS)
    sp.add_argument("--samples", type=int, default=2000, help="random graphs when no corpus is available")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="JSON report instead of text")
    sp.set_defaults(func=cmd_audit)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    try:
        return args.func(args)
    except OracleBudgetExceeded as exc:
        print(f"k24: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, OSError) as exc:
        print(f"k24: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
