"""Command-line interface: ``ocdpoly {compute,check,family,bench}``.

Exit codes: 0 success, 1 set is not an ocd-set (check), 2 bad input,
3 brute-force guard violated, 4 engine or verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import families
from .engine import GuardError, check_set, ocd_polynomial
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6, random_graph, vset

EXIT_NOT_OCD = 1
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_MISMATCH = 4

DEFAULT_SEED = 20240101
RANDOM_DENSITIES = (0.1, 0.3, 0.5, 0.8)


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def read_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
    try:
        if fmt == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
            return parse_graph6(lines[0])
        return parse_edge_list(text)
    except GraphFormatError as exc:
        raise CliError(f"parse error: {exc}") from None


def _stats_dict(stats) -> dict:
    return {
        "candidates_visited": stats.candidates_visited,
        "ocd_sets_found": stats.ocd_sets_found,
        "elapsed": round(stats.elapsed, 6),
    }


def _run(g: Graph, engine: str):
    try:
        return ocd_polynomial(g, engine)
    except GuardError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None


def cmd_compute(args, out) -> int:
    g = read_graph(args.input, args.format)
    engines = ["brute", "fast"] if args.engine == "both" else [args.engine]
    results = [(name, *_run(g, name)) for name in engines]
    polys = {p for _, p, _ in results}

    if args.output == "json":
        poly = results[-1][1]
        doc = poly.to_dict()
        doc["min_degree"] = poly.min_degree()
        doc["total"] = str(poly.evaluate(1))
        doc["results"] = [
            {"engine": name, "coeffs": p.to_dict()["coeffs"], "stats": _stats_dict(st)}
            for name, p, st in results
        ]
        doc["agree"] = len(polys) == 1
        print(json.dumps(doc, indent=2), file=out)
    else:
        for name, p, st in results:
            print(f"[{name}] {p.to_text()}", file=out)
            print(f"  min_degree: {p.min_degree()}", file=out)
            print(f"  total: {p.evaluate(1)}", file=out)
            print(f"  candidates: {st.candidates_visited}  ocd_sets: {st.ocd_sets_found}"
                  f"  seconds: {st.elapsed:.4f}", file=out)
    if len(polys) > 1:
        print("engine mismatch: brute and fast disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def parse_set(text: str, n: int) -> int:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    try:
        idx = [int(t) for t in tokens]
    except ValueError:
        raise CliError(f"--set must be comma-separated integers, got {text!r}") from None
    bad = [v for v in idx if not 0 <= v < n]
    if bad:
        raise CliError(f"vertex indices out of range [0, {n}): {bad}")
    if len(set(idx)) != len(idx):
        raise CliError(f"duplicate vertex indices in {text!r}")
    return vset(idx)


def cmd_check(args, out) -> int:
    g = read_graph(args.input, args.format)
    s = parse_set(args.set, g.n)
    v = check_set(g, s)
    if args.output == "json":
        doc = {
            "dominating": v.dominating,
            "outer_connected": v.outer_connected,
            "ocd": v.ocd,
            "undominated_vertex": v.undominated_vertex,
            "split_pair": list(v.split_pair) if v.split_pair else None,
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(f"dominating={str(v.dominating).lower()}", file=out)
        print(f"outer_connected={str(v.outer_connected).lower()}", file=out)
        print(f"ocd={str(v.ocd).lower()}", file=out)
        if v.undominated_vertex is not None:
            print(f"undominated vertex: {v.undominated_vertex}", file=out)
        if v.split_pair is not None:
            print(f"complement split: {v.split_pair[0]} and {v.split_pair[1]} in different components",
                  file=out)
    return 0 if v.ocd else EXIT_NOT_OCD


def _family(args) -> families.GraphFamily:
    name = args.family or args.name
    if not name:
        raise CliError("family name required (positional or --name)")
    try:
        return families.from_args(name, args.n, args.leaves, args.a, args.b)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_family(args, out) -> int:
    f = _family(args)
    poly = families.family_polynomial(f)
    status = 0
    verified = None
    if args.verify:
        fast, _ = ocd_polynomial(families.build(f), "fast")
        verified = fast == poly
        if not verified:
            print(f"verification mismatch: closed form {poly}, engine {fast}", file=sys.stderr)
            status = EXIT_MISMATCH
    if args.output == "json":
        doc = poly.to_dict()
        doc["family"] = f.label
        if verified is not None:
            doc["verified"] = verified
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(poly.to_text(), file=out)
        if verified is not None:
            print(f"verified: {str(verified).lower()}", file=out)
    return status


def parse_range(text: str) -> list[int]:
    """``"10"`` or ``"10..30"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise CliError(f"--n must be N or LO..HI, got {text!r}") from None


def bench_corpus(name: str, sizes: list[int], seed: int) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    corpus = []
    for n in sizes:
        if name == "random":
            for p in RANDOM_DENSITIES:
                corpus.append((f"random({n},{p})", random_graph(n, p, rng)))
        else:
            try:
                f = families.from_args(name, n=n, a=(n + 1) // 2, b=n // 2)
            except ValueError as exc:
                raise CliError(str(exc)) from None
            corpus.append((f.label, families.build(f)))
    return corpus


def cmd_bench(args, out) -> int:
    name = args.family or args.name or "path"
    corpus = bench_corpus(name, parse_range(args.n or "10..20"), args.seed)
    engines = ["brute", "fast"] if args.engine == "both" else [args.engine]
    rows = []
    for gid, g in corpus:
        for eng in engines:
            best = None
            for _ in range(max(1, args.reps)):
                _, st = _run(g, eng)
                best = st.elapsed if best is None else min(best, st.elapsed)
            rows.append([gid, g.n, g.m, eng, st.candidates_visited, st.ocd_sets_found, f"{best:.6f}"])
    header = ["graph_id", "n", "edges", "engine", "candidates", "ocd_sets", "seconds"]
    if args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for row in [header] + rows:
            print("  ".join(str(x).rjust(w) for x, w in zip(row, widths)), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocdpoly", description="Outer-connected domination polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--input", "-i", default="-", help="graph file, '-' for stdin (default)")
        p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")

    p = sub.add_parser("compute", help="compute the ocd polynomial of a graph")
    graph_input(p)
    p.add_argument("--engine", choices=["brute", "fast", "both"], default="fast")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="test whether a vertex set is an ocd-set")
    graph_input(p)
    p.add_argument("--set", required=True, help="comma-separated 0-based vertex indices")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    def family_args(p, n_type):
        p.add_argument("family", nargs="?", help="family name (alternative to --name)")
        p.add_argument("--name", help=f"one of {', '.join(families.KINDS)}")
        p.add_argument("--n", type=n_type)
        p.add_argument("--leaves", type=int)
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)

    p = sub.add_parser("family", help="closed-form polynomial of a named family")
    family_args(p, int)
    p.add_argument("--verify", action="store_true", help="cross-check with the fast engine")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bench", help="time the engines over a deterministic corpus")
    p.add_argument("family", nargs="?", help="family name or 'random'")
    p.add_argument("--name", help=f"one of {', '.join(families.KINDS)}, random")
    p.add_argument("--n", help="size N or inclusive range LO..HI (default 10..20)")
    p.add_argument("--engine", choices=["brute", "fast", "both"], default="fast")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"ocdpoly: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
