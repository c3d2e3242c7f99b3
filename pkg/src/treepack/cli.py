"""Command-line surface: compute, generate, search, verify, convert.

Runs are reproducible by default: one worker thread, a fixed seed, and
no volatile fields in the output, so identical command lines produce
byte-identical reports.  Exit codes: 0 success, 1 input error, 2 budget
exhausted, 3 an in-hypothesis claim was violated.
"""

from __future__ import annotations

import argparse
import os
import sys

from .extremal import Budget, Strategy, f_min_edges
from .formats import (
    FormatError,
    ReportRecord,
    decode_graph6,
    encode_graph6,
    parse_edge_list,
    write_edge_list,
)
from .generators import parse_generator
from .graph import Graph, InputError, bits, vertex_connectivity
from .packing import DisjointnessMode, global_connectivity
from .verify import IN_HYPOTHESIS, VIOLATED, verify_characterization, verify_theorems

OUTPUT_DIR_ENV = "TREEPACK_OUTDIR"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VIOLATED = 3


class UsageError(Exception):
    """Usage error carrying the message; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    return open(path, "w", encoding="utf-8"), True


def _load_graph(args) -> Graph:
    if getattr(args, "gen", None):
        g = parse_generator(args.gen)
        if isinstance(g, list):
            raise InputError("family generators produce several graphs; "
                             "use the gen subcommand")
        return g
    path = args.file
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    stripped = text.strip()
    if "\n" not in stripped and " " not in stripped:
        return decode_graph6(stripped)
    return parse_edge_list(text)


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-g", "--gen", metavar="SPEC",
                     help="generator spec, e.g. harary:9,3")
    src.add_argument("-f", "--file", metavar="FILE",
                     help="graph6 or edge-list file ('-' for stdin)")


def _add_common(p):
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dry-run", action="store_true",
                   help="validate inputs without computing")
    p.add_argument("-o", "--output", metavar="FILE",
                   help="write a JSON report line (honors $%s)" % OUTPUT_DIR_ENV)


_MODES = {
    "tau": DisjointnessMode.INTERNAL_PENDANT,
    "mu": DisjointnessMode.EDGE_PENDANT,
    "kappa-k": DisjointnessMode.INTERNAL_PLAIN,
}


def _cmd_connectivity(name: str, args) -> int:
    g = _load_graph(args)
    if not 2 <= args.k <= g.n:
        raise InputError(f"k must be in [2, n], got k={args.k}, n={g.n}")
    if args.dry_run:
        print(f"ok: n={g.n} m={g.edge_count} k={args.k}")
        return EXIT_OK
    mode = _MODES[name]
    res = global_connectivity(g, args.k, mode,
                              force_generic=args.force_generic,
                              threads=args.threads)
    label = {"tau": "tau", "mu": "mu", "kappa-k": "kappa"}[name]
    print(f"{label}_{args.k} = {res.value}")
    terminals = sorted(bits(res.minimizing_terminals))
    print(f"minimizing S = {terminals}")
    if args.witness:
        for i, tree in enumerate(res.witness.trees, start=1):
            print(f"tree {i}: " + " ".join(f"{u}-{v}" for u, v in tree.edges))
    if args.output:
        record = ReportRecord(
            operation=name,
            inputs={"k": args.k, "n": g.n, "graph": encode_graph6(g)},
            outputs={"value": res.value, "minimizing_terminals": terminals},
            witnesses=[" ".join(f"{u}-{v}" for u, v in t.edges)
                       for t in res.witness.trees],
        )
        out, close = _open_output(args.output)
        out.write(record.to_json_line() + "\n")
        if close:
            out.close()
    return EXIT_OK


def _cmd_kappa(args) -> int:
    g = _load_graph(args)
    if args.dry_run:
        print(f"ok: n={g.n} m={g.edge_count}")
        return EXIT_OK
    print(f"kappa = {vertex_connectivity(g)}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    result = parse_generator(args.spec)
    if args.dry_run:
        print("ok")
        return EXIT_OK
    out, close = _open_output(args.output)
    if isinstance(result, list):
        for comp, g in result:
            out.write(encode_graph6(comp if args.complements else g) + "\n")
    else:
        out.write(encode_graph6(result) + "\n")
    if close:
        out.close()
    return EXIT_OK


def _cmd_extremal(args) -> int:
    if args.n >= 8 and args.budget_graphs is None and args.budget_seconds is None:
        raise InputError("a budget (--budget-graphs or --budget-seconds) "
                         "is mandatory for n >= 8")
    if args.dry_run:
        print(f"ok: n={args.n} k={args.k} l={args.l} strategy={args.strategy}")
        return EXIT_OK
    budget = Budget(args.budget_graphs, args.budget_seconds)
    record = f_min_edges(args.n, args.k, args.l, args.strategy, budget,
                         long_runs=args.long)
    line = record.to_json_line()
    out, close = _open_output(args.output)
    out.write(line + "\n")
    if close:
        out.close()
        print(line)
    return EXIT_BUDGET if record.status == "budget-exhausted" else EXIT_OK


def _cmd_verify(args) -> int:
    if args.dry_run:
        print("ok")
        return EXIT_OK
    checks = []
    if args.characterization:
        checks.append(verify_characterization(args.characterization, args.n,
                                              seed=args.seed))
    else:
        theorems = ("T1.1", "T1.2", "T1.3") if args.theorem == "all" else (args.theorem,)
        n_values = range(args.n_min, args.n_max + 1)
        k_values = None if args.k_max is None else range(3, args.k_max + 1)
        checks = verify_theorems(n_values, k_values, theorems,
                                 long_runs=args.long)
    out, close = _open_output(args.output)
    bad = False
    for c in checks:
        out.write(c.to_json_line() + "\n" if close else c.to_line() + "\n")
        if c.verdict == VIOLATED and c.band == IN_HYPOTHESIS:
            bad = True
    if close:
        out.close()
        for c in checks:
            print(c.to_line())
    return EXIT_VIOLATED if bad else EXIT_OK


def _cmd_convert(args) -> int:
    text = sys.stdin.read() if args.input in (None, "-") else open(
        args.input, encoding="utf-8").read()
    if args.dry_run:
        print("ok")
        return EXIT_OK
    fmt = args.from_format
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if not first:
            raise FormatError("empty input")
        # edge lists open with a bare integer; digits are below the
        # graph6 printable range, so the first byte decides
        fmt = "edgelist" if first[0].isdigit() else "graph6"
    graphs = []
    if fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                graphs.append(decode_graph6(line))
    else:
        graphs.append(parse_edge_list(text))
    out, close = _open_output(args.output)
    for g in graphs:
        if args.to == "graph6":
            out.write(encode_graph6(g) + "\n")
        else:
            out.write(write_edge_list(g))
    if close:
        out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treepack",
                     description="exact pendant-tree packing toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("tau", "mu", "kappa-k"):
        p = sub.add_parser(name, help=f"global {name} value of a graph")
        _add_graph_source(p)
        p.add_argument("-k", type=int, required=True)
        p.add_argument("--witness", action="store_true")
        p.add_argument("--force-generic", action="store_true",
                       help="disable closed-form fast paths")
        _add_common(p)

    p = sub.add_parser("kappa", help="classical vertex connectivity")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("gen", help="emit a generated graph as graph6")
    p.add_argument("spec", help="generator spec, e.g. cartesian:(cycle:3),(cycle:4)")
    p.add_argument("--complements", action="store_true",
                   help="for family generators, emit the complements instead")
    _add_common(p)

    p = sub.add_parser("extremal", help="minimum edges for a target value")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--strategy", default="auto",
                   choices=["auto", "sparse", "dense", "construction"])
    p.add_argument("--budget-graphs", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--long", action="store_true",
                   help="allow the week-scale n=8 ascending enumeration")
    _add_common(p)

    p = sub.add_parser("verify", help="run catalogued claim checks")
    p.add_argument("--theorem", default="all",
                   choices=["all", "T1.1", "T1.2", "T1.3"])
    p.add_argument("--characterization",
                   help="one class check (L2.5, L2.6, L3.1, L3.2, L3.3, L3.6, P3.1)")
    p.add_argument("-n", type=int, default=8,
                   help="order for --characterization")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-max", type=int)
    p.add_argument("--long", action="store_true")
    _add_common(p)

    p = sub.add_parser("convert", help="transcode between graph formats")
    p.add_argument("-i", "--input", metavar="FILE", help="default stdin")
    p.add_argument("--from", dest="from_format", default="auto",
                   choices=["auto", "graph6", "edgelist"])
    p.add_argument("--to", required=True, choices=["graph6", "edgelist"])
    _add_common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in _MODES:
            return _cmd_connectivity(args.command, args)
        if args.command == "kappa":
            return _cmd_kappa(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "extremal":
            return _cmd_extremal(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "convert":
            return _cmd_convert(args)
        raise InputError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
