"""Command-line front end.

Solutions stream to stdout, one per line as ascending space-separated vertex
ids.  Exit status: 0 success, 1 empty family (capacitated kinds) or failed
verification, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .capacitated import cap_feasible, enumerate_capacitated, enumerate_connected_capacitated_vc
from .connected_ds import enumerate_cds
from .connected_vc import AugmentationBudget, enumerate_cvc
from .graph import (
    CapacityFn,
    ContractViolation,
    InputError,
    ParseError,
    format_set,
    parse_capacity,
    parse_graph,
    parse_hypergraph,
)
from .minaug import enumerate_cvc_quasipoly, min_valid_aug, parse_bipartite
from .oracle import OracleTooLarge, brute_oracle
from .reductions import REDUCTION_KINDS, build_reduction, verify_reduction

EXIT_OK, EXIT_EMPTY, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(line: str):
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


def _capacity(args, n: int) -> CapacityFn:
    if args.capacity_all is not None and args.capacity is not None:
        raise UsageError("give either --capacity or --capacity-all, not both")
    if args.capacity_all is not None:
        if args.capacity_all < 0:
            raise UsageError("--capacity-all must be non-negative")
        return CapacityFn.uniform(n, args.capacity_all)
    if args.capacity is not None:
        return parse_capacity(_read(args.capacity), n)
    raise UsageError("a capacity is required: --capacity FILE or --capacity-all Q")


def _budget(mode: str, g):
    if mode == "degree":
        return AugmentationBudget.bounded_degree(g)
    if mode == "quasipoly":
        return None
    name, _, value = mode.partition(":")
    try:
        k = int(value)
    except ValueError:
        raise UsageError(f"bad --mode {mode!r}") from None
    if name == "claw":
        return AugmentationBudget.claw_free(k)
    if name == "budget":
        return AugmentationBudget.explicit(k)
    raise UsageError(f"bad --mode {mode!r}; expected degree, claw:<d>, budget:<k> or quasipoly")


def _finish(args, stats):
    if args.stats:
        _emit(json.dumps(stats.as_dict()))


def cmd_cvc(args) -> int:
    g = parse_graph(_read(args.graph))
    sink = lambda x: _emit(format_set(x))  # noqa: E731
    if args.mode == "quasipoly":
        stats = enumerate_cvc_quasipoly(g, sink, limit=args.max_solutions, debug=args.debug)
    else:
        budget = _budget(args.mode, g)
        stats = enumerate_cvc(g, budget, sink, limit=args.max_solutions, debug=args.debug)
    _finish(args, stats)
    return EXIT_OK


def cmd_cds(args) -> int:
    g = parse_graph(_read(args.graph))
    stats = enumerate_cds(g, lambda x: _emit(format_set(x)), limit=args.max_solutions, debug=args.debug)
    _finish(args, stats)
    return EXIT_OK


def _cap_sink(args, g, c, kind):
    def sink(x):
        line = format_set(x)
        if args.emit_assignment:
            _, witness = cap_feasible(g, c, x, kind)
            line += "\t# " + " ".join(witness.lines())
        _emit(line)

    return sink


def cmd_cap(args) -> int:
    g = parse_graph(_read(args.graph))
    c = _capacity(args, g.n)
    if args.command == "capcvc":
        stats = enumerate_connected_capacitated_vc(
            g, c, _cap_sink(args, g, c, "vc"), limit=args.max_solutions, debug=args.debug
        )
    else:
        kind = args.command[3:]
        stats = enumerate_capacitated(g, c, kind, _cap_sink(args, g, c, kind), limit=args.max_solutions,
                                      debug=args.debug)
    _finish(args, stats)
    return EXIT_OK if stats.outputs else EXIT_EMPTY


def cmd_minaug(args) -> int:
    h = parse_bipartite(_read(args.instance))
    for w in sorted(min_valid_aug(h, debug=args.debug), key=lambda m: (m.bit_count(), m)):
        _emit(format_set(w))
    return EXIT_OK


def cmd_reduce(args) -> int:
    h = parse_hypergraph(_read(args.hypergraph))
    inst = build_reduction(h, args.kind)
    if inst.capacity is not None and args.capacity_out is None:
        raise UsageError(f"kind {args.kind} produces capacities; pass --capacity-out FILE")
    sys.stdout.write(inst.graph.to_text())
    if inst.capacity is not None:
        with open(args.capacity_out, "w") as fh:
            fh.write(inst.capacity.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    h = parse_hypergraph(_read(args.hypergraph))
    report = verify_reduction(h, args.kind, method=args.method)
    _emit(json.dumps(report.as_dict()))
    return EXIT_OK if report.passed else EXIT_EMPTY


def cmd_oracle(args) -> int:
    text = _read(args.input)
    p = args.problem
    if p == "transversal":
        family = brute_oracle(p, h=parse_hypergraph(text))
    elif p == "minaug":
        family = brute_oracle(p, b=parse_bipartite(text))
    else:
        g = parse_graph(text)
        c = _capacity(args, g.n) if p.startswith("cap") else None
        family = brute_oracle(p, g=g, c=c)
    for s in family:
        _emit(format_set(s))
    return EXIT_OK if family or not p.startswith("cap") else EXIT_EMPTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincover", description="Enumerate minimal connected / capacitated vertex covers and dominating sets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def enum_flags(p):
        p.add_argument("--stats", action="store_true", help="append a JSON line with delay statistics")
        p.add_argument("--max-solutions", type=int, metavar="N", help="stop after N solutions")
        p.add_argument("--debug", action="store_true", help="assert minimality of every generated neighbour")

    def cap_flags(p):
        p.add_argument("--capacity", metavar="FILE", help="capacity file with 'v c' lines")
        p.add_argument("--capacity-all", type=int, metavar="Q", help="uniform capacity Q for every vertex")

    p = sub.add_parser("cvc", help="minimal connected vertex covers")
    p.add_argument("graph")
    p.add_argument("--mode", default="degree", help="degree | claw:<d> | budget:<k> | quasipoly")
    enum_flags(p)
    p.set_defaults(func=cmd_cvc)

    p = sub.add_parser("cds", help="minimal connected dominating sets")
    p.add_argument("graph")
    enum_flags(p)
    p.set_defaults(func=cmd_cds)

    for name, what in (("capvc", "capacitated vertex covers"), ("capds", "capacitated dominating sets"),
                       ("capcvc", "connected capacitated vertex covers")):
        p = sub.add_parser(name, help=f"minimal {what}")
        p.add_argument("graph")
        cap_flags(p)
        p.add_argument("--emit-assignment", action="store_true", help="print a witness assignment per solution")
        enum_flags(p)
        p.set_defaults(func=cmd_cap)

    p = sub.add_parser("minaug", help="minimal valid augmentations of a bipartite instance")
    p.add_argument("instance", help="file with 'nL nR m' then m lines 'l r'")
    p.add_argument("--debug", action="store_true")
    p.set_defaults(func=cmd_minaug)

    p = sub.add_parser("reduce", help="build a transversal gadget from a hypergraph")
    p.add_argument("hypergraph")
    p.add_argument("--kind", required=True, choices=REDUCTION_KINDS)
    p.add_argument("--capacity-out", metavar="FILE", help="where to write capacities (capvc kinds)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a gadget against brute-force transversals")
    p.add_argument("hypergraph")
    p.add_argument("--kind", required=True, choices=REDUCTION_KINDS)
    p.add_argument("--method", default="quasipoly", choices=("quasipoly", "degree"),
                   help="CVC enumerator used on cvc gadgets")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force minimal families for small inputs")
    p.add_argument("input")
    p.add_argument("--problem", required=True, choices=("cvc", "cds", "capvc", "capds", "transversal", "minaug"))
    cap_flags(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, InputError, ContractViolation, UsageError, OracleTooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
