"""Command-line front end.

Every subcommand is a thin shell over a library call; all formats are
the text grammars of the library (graph literals, one-term-per-line
sums).  Exit status: 0 on success or PASS, 1 on parse/usage errors,
2 on invariant violations or failed checks.  A positional argument of
``-`` reads from standard input.
"""

from __future__ import annotations

import argparse
import sys

from graphcomplex import checks, dgla, homology
from graphcomplex.graphs import (
    InvariantError,
    ParseError,
    automorphisms,
    canonicalize,
    is_zero_graph,
    parse_graph,
    serialize_graph,
)
from graphcomplex.sums import (
    GraphSum,
    NonUnitCoefficientError,
    parse_sum,
    reduce,
    serialize_sum,
)


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_arg(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    return value


def _graph_arg(value: str):
    return parse_graph(_read_arg(value))


def _read_sum(path: str):
    if path == "-":
        return parse_sum(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sum(fh.read())


def build_parser() -> Parser:
    p = Parser(prog="graphcomplex", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("canon", help="canonical form with sign or zero verdict")
    q.add_argument("graph")

    q = sub.add_parser("is-zero", help="does the graph equal minus itself?")
    q.add_argument("graph")

    q = sub.add_parser("aut", help="list all automorphisms")
    q.add_argument("graph")

    q = sub.add_parser("insert", help="insert graph A into graph B (raw sum)")
    q.add_argument("a")
    q.add_argument("b")

    q = sub.add_parser("bracket", help="Lie bracket of two graphs")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--raw", action="store_true", help="print unreduced terms")

    q = sub.add_parser("d", help="differential of a graph")
    q.add_argument("graph")
    q.add_argument("--raw", action="store_true", help="print unreduced terms")
    how = q.add_mutually_exclusive_group()
    how.add_argument(
        "--direct",
        action="store_true",
        help="two-non-empty-part expansion (leafless inputs only)",
    )
    how.add_argument(
        "--via-bracket",
        action="store_true",
        help="bracket with the single edge (default)",
    )

    q = sub.add_parser("reduce", help="reduce a raw sum file to its class")
    q.add_argument("sumfile")

    q = sub.add_parser("check", help="run an identity suite")
    csub = q.add_subparsers(dest="check_command", required=True)
    c = csub.add_parser("d2", help="d(d(g)) cancels identically")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--max-edges", type=int, default=8)
    c = csub.add_parser("jacobi", help="graded Jacobi identity on random triples")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--trials", type=int, default=25)
    c.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)

    q = sub.add_parser("cocycles", help="kernel basis at a bigrade")
    q.add_argument("--vertices", type=int, required=True)
    q.add_argument("--edges", type=int, required=True)
    q.add_argument("--connected", action="store_true")

    return p


def _cmd_canon(args) -> int:
    r = canonicalize(_graph_arg(args.graph))
    verdict = "zero" if r.is_zero else f"{r.sign:+d}"
    print(f"{verdict} {serialize_graph(r.canonical)}")
    return 0


def _cmd_is_zero(args) -> int:
    zero, witness = is_zero_graph(_graph_arg(args.graph))
    if zero:
        print("true")
        print("witness: " + " ".join(str(x) for x in witness.images))
    else:
        print("false")
    return 0


def _cmd_aut(args) -> int:
    for p in automorphisms(_graph_arg(args.graph)):
        print(" ".join(str(x) for x in p.images))
    return 0


def _cmd_insert(args) -> int:
    sys.stdout.write(serialize_sum(dgla.insert(_graph_arg(args.a), _graph_arg(args.b))))
    return 0


def _cmd_bracket(args) -> int:
    a, b = _graph_arg(args.a), _graph_arg(args.b)
    if args.raw:
        sys.stdout.write(serialize_sum(dgla.bracket_raw(a, b)))
    else:
        sys.stdout.write(
            serialize_sum(dgla.bracket(GraphSum.from_graph(a), GraphSum.from_graph(b)))
        )
    return 0


def _cmd_d(args) -> int:
    g = _graph_arg(args.graph)
    if args.direct:
        raw = dgla.d_direct(g)
    else:
        raw = dgla.bracket_raw(dgla.SINGLE_EDGE, g)
    if args.raw:
        sys.stdout.write(serialize_sum(raw))
    else:
        sys.stdout.write(serialize_sum(reduce(raw)))
    return 0


def _cmd_reduce(args) -> int:
    sys.stdout.write(serialize_sum(reduce(_read_sum(args.sumfile))))
    return 0


def _print_check(result: checks.CheckResult, label: str) -> int:
    if result.passed:
        print(f"PASS {label} ({result.cases} cases)")
        return 0
    print(f"FAIL {label}: {result.counterexample}")
    return 2


def _cmd_check(args) -> int:
    if args.check_command == "d2":
        result = checks.check_d_squared(args.max_vertices, args.max_edges)
        label = f"d2 max-vertices={args.max_vertices} max-edges={args.max_edges}"
    else:
        result = checks.check_jacobi(args.max_vertices, args.trials, args.seed)
        label = (
            f"jacobi max-vertices={args.max_vertices}"
            f" trials={args.trials} seed={args.seed}"
        )
    return _print_check(result, label)


def _cmd_cocycles(args) -> int:
    basis = homology.cocycle_space(
        args.vertices, args.edges, connected=args.connected
    )
    print(f"# dimension {len(basis)}")
    for i, vec in enumerate(basis, start=1):
        print(f"# cocycle {i}")
        sys.stdout.write(serialize_sum(vec))
    return 0


_DISPATCH = {
    "canon": _cmd_canon,
    "is-zero": _cmd_is_zero,
    "aut": _cmd_aut,
    "insert": _cmd_insert,
    "bracket": _cmd_bracket,
    "d": _cmd_d,
    "reduce": _cmd_reduce,
    "check": _cmd_check,
    "cocycles": _cmd_cocycles,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return _DISPATCH[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (InvariantError, NonUnitCoefficientError) as e:
        print(f"invariant error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
