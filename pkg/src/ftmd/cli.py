"""Command-line interface.

Subcommands: ``solve`` (minimum-weight fault-tolerant resolving set),
``check`` (test a given set), ``gen`` (random cograph instance) and
``bench`` (solver scaling table).

Exit codes: 0 success / YES, 1 I/O, parse or usage error, 2 not a cograph,
3 check answered NO.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bench import run_scaling
from .cotree import EmptyGraphError, NotCographError, build_cotree, format_cotree
from .cotree import random_cotree, realize
from .dp import solve
from .graph import Graph, from_edges
from .oracle import MAX_VERTICES, oracle_min_ft
from .resolving import (
    first_low_h_pair,
    first_unresolved_pair,
    is_2nr,
    is_fault_tolerant,
    is_resolving,
)


class FileFormatError(Exception):
    def __init__(self, path: str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")


def _content_lines(path: str) -> list[tuple[int, str]]:
    """Line number and text of every non-blank, non-comment line."""
    out = []
    with open(path, "r", encoding="ascii") as handle:
        for line_no, raw in enumerate(handle, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            out.append((line_no, text))
    return out


def read_edge_list(path: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines ``u v`` with u < v."""
    lines = _content_lines(path)
    if not lines:
        raise FileFormatError(path, 1, "missing 'n m' header line")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FileFormatError(path, header_no, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FileFormatError(path, header_no, "header must be two integers") from None
    if n < 0 or m < 0:
        raise FileFormatError(path, header_no, "n and m must be non-negative")
    edge_lines = lines[1:]
    if len(edge_lines) != m:
        raise FileFormatError(
            path, header_no, f"header announces {m} edges, file has {len(edge_lines)}"
        )
    edges = []
    seen = set()
    for line_no, text in edge_lines:
        parts = text.split()
        if len(parts) != 2:
            raise FileFormatError(path, line_no, "edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FileFormatError(path, line_no, "edge endpoints must be integers") from None
        if not 0 <= u < v < n:
            raise FileFormatError(path, line_no, f"need 0 <= u < v < {n}")
        if (u, v) in seen:
            raise FileFormatError(path, line_no, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return from_edges(n, edges)


def _parse_number(token: str) -> int | float:
    try:
        return int(token)
    except ValueError:
        return float(token)


def read_weights(path: str, n: int) -> list[int | float]:
    """Parse ``v w`` lines; unlisted vertices default to weight 1."""
    weights: list[int | float] = [1] * n
    listed: set[int] = set()
    for line_no, text in _content_lines(path):
        parts = text.split()
        if len(parts) != 2:
            raise FileFormatError(path, line_no, "weight line must be 'v w'")
        try:
            v = int(parts[0])
            w = _parse_number(parts[1])
        except ValueError:
            raise FileFormatError(path, line_no, "weight line must be 'v w'") from None
        if not 0 <= v < n:
            raise FileFormatError(path, line_no, f"vertex {v} out of range for n={n}")
        if v in listed:
            raise FileFormatError(path, line_no, f"vertex {v} listed twice")
        if w < 0:
            raise FileFormatError(path, line_no, f"negative weight for vertex {v}")
        listed.add(v)
        weights[v] = w
    return weights


def cmd_solve(args) -> int:
    g = read_edge_list(args.graph)
    weights = read_weights(args.weights, g.n) if args.weights else None
    solution = solve(g, weights)
    print(solution.weight)
    print(" ".join(map(str, solution.vertices)))
    if args.cotree:
        print(format_cotree(build_cotree(g)))
    if args.verify and not solution.verify(g):
        print("error: solution failed fault-tolerance verification", file=sys.stderr)
        return 1
    if args.oracle:
        if g.n > MAX_VERTICES:
            print(
                f"error: --oracle is limited to {MAX_VERTICES} vertices", file=sys.stderr
            )
            return 1
        reference = oracle_min_ft(g, weights)
        if reference.weight != solution.weight:
            print(
                f"error: oracle weight {reference.weight} "
                f"!= solver weight {solution.weight}",
                file=sys.stderr,
            )
            return 1
    return 0


def cmd_check(args) -> int:
    g = read_edge_list(args.graph)
    for v in args.vertices:
        if not 0 <= v < g.n:
            print(f"error: vertex {v} out of range for n={g.n}", file=sys.stderr)
            return 1
    r = frozenset(args.vertices)
    if args.mode == "resolving":
        ok, pair = is_resolving(g, r), first_unresolved_pair(g, r, 1)
    elif args.mode == "ft":
        ok, pair = is_fault_tolerant(g, r), first_unresolved_pair(g, r, 2)
    else:
        ok, pair = is_2nr(g, r), first_low_h_pair(g, r)
    if ok:
        print("YES")
        return 0
    print(f"NO: {pair[0]} {pair[1]}")
    return 3


def cmd_gen(args) -> int:
    tree = random_cotree(args.n, args.seed)
    g = realize(tree)
    edges = g.edges()
    print(f"{g.n} {len(edges)}")
    for u, v in edges:
        print(f"{u} {v}")
    # As a comment so that the output is directly consumable by `solve`.
    print(f"# cotree: {format_cotree(tree)}")
    return 0


def cmd_bench(args) -> int:
    rows = run_scaling(range(10, args.max_exp + 1), args.seed, args.repeats)
    print("n nodes seconds")
    for row in rows:
        print(f"{row.n} {row.nodes} {row.seconds:.6f}")
    return 0


class _Parser(argparse.ArgumentParser):
    # Keep exit code 2 reserved for the not-a-cograph outcome.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ftmd",
        description="Exact minimum-weight fault-tolerant resolving sets on cographs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="solve an edge-list instance")
    p_solve.add_argument("graph", help="edge-list file ('n m' header, 'u v' lines)")
    p_solve.add_argument("--weights", help="weight file ('v w' lines, default 1)")
    p_solve.add_argument(
        "--verify", action="store_true", help="re-check the set for fault tolerance"
    )
    p_solve.add_argument(
        "--oracle",
        action="store_true",
        help=f"cross-check the weight by brute force (n <= {MAX_VERTICES})",
    )
    p_solve.add_argument(
        "--cotree", action="store_true", help="also print the cotree s-expression"
    )
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check", help="test whether a set satisfies a predicate")
    p_check.add_argument("graph")
    p_check.add_argument("mode", choices=["resolving", "ft", "2nr"])
    p_check.add_argument("vertices", nargs="*", type=int, help="the candidate set")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="emit a random cograph instance")
    p_gen.add_argument("n", type=_positive_int, help="number of vertices")
    p_gen.add_argument("seed", type=int)
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="time the solver on growing cotrees")
    p_bench.add_argument(
        "--max-exp",
        type=int,
        choices=range(10, 21),
        metavar="K",
        default=17,
        help="largest size 2**K (10..20, default 17)",
    )
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=_positive_int, default=3)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors by exiting
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FileFormatError, OSError, UnicodeDecodeError, EmptyGraphError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except NotCographError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
