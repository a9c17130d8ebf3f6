"""Brute-force ground truth for small instances.

Everything here is written to be obviously correct rather than fast: subsets
are scanned by increasing size and a subset is reported when it satisfies
the predicate and contains no earlier report.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable

from .graph import CapacityFn, Graph, Hypergraph, bits, vset
from .minaug import ContractedBipartite

MAX_UNIVERSE = 25


class OracleTooLarge(ValueError):
    pass


def _canonical(family) -> list[int]:
    return sorted(family, key=lambda m: (m.bit_count(), tuple(bits(m))))


def brute_minimal(universe_size: int, prop: Callable[[int], bool], limit: int = MAX_UNIVERSE) -> list[int]:
    """All inclusion-minimal subsets of ``0..universe_size-1`` satisfying the monotone ``prop``."""
    if universe_size > limit:
        raise OracleTooLarge(f"universe of size {universe_size} exceeds the oracle limit {limit}")
    found: list[int] = []
    for size in range(universe_size + 1):
        for combo in combinations(range(universe_size), size):
            s = vset(combo)
            if any(f & s == f for f in found):
                continue
            if prop(s):
                found.append(s)
    return _canonical(found)


def brute_transversals(h: Hypergraph) -> list[int]:
    return brute_minimal(h.n, lambda s: all(e & s for e in h.edges))


def brute_min_valid_aug(h: ContractedBipartite, limit: int = 20) -> list[int]:
    """Minimal W within the right class such that H[L | W] is connected (plain graph search)."""
    ids = list(h.right)
    if len(ids) > limit:
        raise OracleTooLarge(f"{len(ids)} right vertices exceed the oracle limit {limit}")

    def connected(w: int) -> bool:
        nodes = [("L", i) for i in range(h.n_left)] + [("R", r) for r in bits(w)]
        if not nodes:
            return True
        adj = {node: set() for node in nodes}
        for r in bits(w):
            for i in bits(h.right[r]):
                adj[("R", r)].add(("L", i))
                adj[("L", i)].add(("R", r))
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(nodes)

    found = brute_minimal(len(ids), lambda s: connected(vset(ids[i] for i in bits(s))), limit)
    return _canonical(vset(ids[i] for i in bits(s)) for s in found)


# Plain-definition predicates, deliberately independent of graph.py's bit tricks.


def definition_predicate(g: Graph, kind: str) -> Callable[[int], bool]:
    edges = g.edges()
    adj = [set(a) for a in g.adjacency]

    def connected(s: set[int]) -> bool:
        if not s:
            return True
        start = next(iter(s))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u] & s:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == s

    def covers(s: set[int]) -> bool:
        return all(u in s or v in s for u, v in edges)

    def dominates(s: set[int]) -> bool:
        return all(v in s or adj[v] & s for v in range(g.n))

    tests = {
        "vc": lambda s: covers(s),
        "ds": lambda s: dominates(s),
        "connected-vc": lambda s: covers(s) and connected(s),
        "connected-ds": lambda s: dominates(s) and connected(s),
    }
    test = tests[kind]
    return lambda m: test(set(bits(m)))


def brute_assignment(g: Graph, c: CapacityFn, x: int, kind: str) -> dict | None:
    """Exhaustive search for a capacity-respecting assignment; returns one or None."""
    inside = set(bits(x))
    if kind == "vc":
        items = g.edges()
        choices = [[u for u in e if u in inside] for e in items]
    else:
        items = [v for v in range(g.n) if v not in inside]
        choices = [[u for u in g.adjacency[v] if u in inside] for v in items]
    for pick in product(*choices):
        load: dict[int, int] = {}
        for u in pick:
            load[u] = load.get(u, 0) + 1
        if all(load[u] <= c[u] for u in load):
            return dict(zip(items, pick))
    return None


def brute_oracle(problem: str, g: Graph | None = None, c: CapacityFn | None = None,
                 h: Hypergraph | None = None, b: ContractedBipartite | None = None) -> list[int]:
    """Dispatch used by the CLI ``oracle`` subcommand."""
    if problem == "transversal":
        return brute_transversals(h)
    if problem == "minaug":
        return brute_min_valid_aug(b)
    if problem in ("cvc", "cds"):
        kind = "connected-vc" if problem == "cvc" else "connected-ds"
        return brute_minimal(g.n, definition_predicate(g, kind))
    if problem in ("capvc", "capds"):
        kind = problem[3:]
        return brute_minimal(g.n, lambda s: brute_assignment(g, c, s, kind) is not None)
    raise ValueError(f"unknown oracle problem {problem!r}")
