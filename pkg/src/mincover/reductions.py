"""Gadget graphs that encode minimal hypergraph transversals.

Each builder turns a hypergraph into a graph (plus capacities for the
capacitated kinds) whose minimal solutions correspond to the minimal
transversals.  ``verify_reduction`` runs the library's own enumerators on
the gadget and checks that correspondence against the brute-force oracle.

Vertex numbering: hypergraph vertices first (same ids), then one gadget per
hyperedge in input order, then the apex ``r`` and its pendant ``r'`` where
the construction has them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .capacitated import CapacitatedProperty, enumerate_capacitated
from .connected_ds import enumerate_cds
from .connected_vc import AugmentationBudget, enumerate_cvc
from .graph import (
    CapacityFn,
    CoverProperty,
    DominationProperty,
    Graph,
    Hypergraph,
    InputError,
    bits,
    complement,
    degeneracy_ordering,
    is_bipartite,
    vset,
)
from .minaug import enumerate_cvc_quasipoly
from .oracle import brute_transversals
from .supergraph import is_minimal

REDUCTION_KINDS = ("cvc", "cvc-2deg", "cds-cobip", "capvc", "capvc-2deg")


class ReductionIntegrityError(RuntimeError):
    """A gadget solution lacks a structural necessity of the construction."""


@dataclass(frozen=True)
class ReductionInstance:
    kind: str
    hypergraph: Hypergraph
    graph: Graph
    capacity: CapacityFn | None
    roles: tuple[str, ...]
    # hyperedge index of each gadget vertex, -1 for V, r, r'
    edge_index: tuple[int, ...]
    # path position (1-based) of path vertices and their pendants, 0 elsewhere
    position: tuple[int, ...]

    def mask(self, *roles: str) -> int:
        return vset(v for v, role in enumerate(self.roles) if role in roles)

    @property
    def original(self) -> int:
        return self.mask("V")

    @property
    def forced(self) -> int:
        """Vertices every minimal gadget solution must contain."""
        if self.kind == "cds-cobip":
            return 0
        return self.mask("w", "p", "r")

    @property
    def pendants(self) -> int:
        return self.mask("w'", "p'", "r'")

    def lift(self, transversal: int) -> int:
        return transversal | self.forced

    def elimination_order(self) -> list[int]:
        """Pendants, even path vertices, odd path vertices, V, then r."""
        order = [v for v, role in enumerate(self.roles) if role in ("p'", "r'", "w'")]
        order += [v for v, role in enumerate(self.roles) if role == "p" and self.position[v] % 2 == 0]
        order += [v for v, role in enumerate(self.roles) if role == "p" and self.position[v] % 2 == 1]
        order += [v for v, role in enumerate(self.roles) if role in ("V", "w")]
        order += [v for v, role in enumerate(self.roles) if role == "r"]
        return order


class _Builder:
    def __init__(self, h: Hypergraph):
        self.roles = ["V"] * h.n
        self.edge_index = [-1] * h.n
        self.position = [0] * h.n
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str, edge: int = -1, pos: int = 0) -> int:
        self.roles.append(role)
        self.edge_index.append(edge)
        self.position.append(pos)
        return len(self.roles) - 1

    def link(self, u: int, v: int):
        self.edges.append((u, v))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)


def _edge_gadgets(b: _Builder, h: Hypergraph, paths: bool) -> list[int]:
    """Add w_e/w'_e pairs (or paths with pendants) and their incidences; returns the hub of each hyperedge."""
    hubs = []
    for i, e in enumerate(h.edges):
        if not paths:
            w = b.add("w", i)
            b.link(w, b.add("w'", i))
            for u in bits(e):
                b.link(u, w)
            hubs.append(w)
            continue
        members = list(bits(e))
        length = 2 * len(members) + 1
        path = [b.add("p", i, k) for k in range(1, length + 1)]
        for a, c in zip(path, path[1:]):
            b.link(a, c)
        for k, p in enumerate(path, start=1):
            b.link(p, b.add("p'", i, k))
        for j, u in enumerate(members, start=1):
            b.link(u, path[2 * j - 2])
        hubs.append(path[0])
    return hubs


def build_reduction(h: Hypergraph, kind: str) -> ReductionInstance:
    if kind not in REDUCTION_KINDS:
        raise ValueError(f"unknown reduction kind {kind!r}; expected one of {REDUCTION_KINDS}")
    if any(e == 0 for e in h.edges):
        raise InputError("hypergraph has an empty hyperedge")
    b = _Builder(h)
    capacity = None
    if kind == "cds-cobip":
        if not h.edges:
            raise InputError("the co-bipartite construction needs at least one hyperedge")
        hub = [b.add("w", i) for i in range(len(h.edges))]
        r = b.add("r")
        clique_a = list(range(h.n)) + [r]
        for i, u in enumerate(clique_a):
            for v in clique_a[i + 1:]:
                b.link(u, v)
        for i, u in enumerate(hub):
            for v in hub[i + 1:]:
                b.link(u, v)
        for i, e in enumerate(h.edges):
            for u in bits(e):
                b.link(u, hub[i])
        g = b.graph()
    else:
        _edge_gadgets(b, h, paths=kind.endswith("2deg"))
        if kind.startswith("cvc"):
            r = b.add("r")
            for u in range(h.n):
                b.link(u, r)
            b.link(r, b.add("r'"))
        g = b.graph()
        if kind.startswith("capvc"):
            cap = []
            for v, role in enumerate(b.roles):
                if role == "V":
                    cap.append(g.degree(v))
                elif role in ("w", "p"):
                    cap.append(g.degree(v) - 1)
                else:
                    cap.append(0)
            capacity = CapacityFn(tuple(cap))
    return ReductionInstance(kind, h, g, capacity, tuple(b.roles), tuple(b.edge_index), tuple(b.position))


def project_solution(inst: ReductionInstance, sol: int) -> int | None:
    """Hypergraph transversal encoded by a minimal gadget solution.

    Returns None for the co-bipartite extras {v, w_e}, which encode no transversal.
    """
    original = inst.original
    if inst.kind == "cds-cobip":
        if not sol & ~original:
            return sol
        hubs = sol & inst.mask("w")
        rest = sol & ~hubs
        if hubs.bit_count() == 1 and rest.bit_count() == 1 and rest & original:
            (i,) = (inst.edge_index[v] for v in bits(hubs))
            if inst.hypergraph.edges[i] & rest:
                return None
        raise ReductionIntegrityError(f"solution {sorted(bits(sol))} has neither admissible shape")
    if sol & inst.forced != inst.forced:
        raise ReductionIntegrityError(f"solution {sorted(bits(sol))} misses a forced vertex")
    if sol & inst.pendants:
        raise ReductionIntegrityError(f"solution {sorted(bits(sol))} contains a pendant")
    return sol & original


@dataclass
class ReductionReport:
    kind: str
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    solutions: int = 0
    transversals: int = 0
    extras: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and not self.failures

    def record(self, name: str, ok: bool, witness: str = ""):
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {witness}" if witness else name)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "solutions": self.solutions,
            "transversals": self.transversals,
            "extras": [sorted(bits(x)) for x in self.extras],
        }


def _valid_order(g: Graph, order: list[int], k: int) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    alive = g.full
    for v in order:
        alive &= ~(1 << v)
        if (g.nbr[v] & alive).bit_count() > k:
            return False
    return True


def gadget_solutions(inst: ReductionInstance, method: str = "quasipoly") -> list[int]:
    g = inst.graph
    out: list[int] = []
    if inst.kind.startswith("cvc"):
        if method == "quasipoly":
            enumerate_cvc_quasipoly(g, sink=out.append)
        else:
            enumerate_cvc(g, AugmentationBudget.bounded_degree(g), sink=out.append)
    elif inst.kind == "cds-cobip":
        enumerate_cds(g, sink=out.append)
    else:
        enumerate_capacitated(g, inst.capacity, "vc", sink=out.append)
    return out


def _gadget_property(inst: ReductionInstance):
    if inst.kind.startswith("cvc"):
        return CoverProperty(inst.graph, connected=True)
    if inst.kind == "cds-cobip":
        return DominationProperty(inst.graph, connected=True)
    return CapacitatedProperty(inst.graph, inst.capacity, "vc")


def verify_reduction(h: Hypergraph, kind: str, method: str = "quasipoly") -> ReductionReport:
    """Check that the gadget's minimal solutions match the minimal transversals of ``h``."""
    inst = build_reduction(h, kind)
    g = inst.graph
    report = ReductionReport(kind)

    # structure
    if kind in ("cvc", "cvc-2deg"):
        r = inst.mask("r")
        report.record("apex adjacent to all of V", all(g.nbr[v] & r for v in bits(inst.original)))
    if kind in ("cvc", "capvc"):
        report.record(
            "one pendant per edge vertex",
            all(sum(1 for u in g.adjacency[w] if inst.roles[u] == "w'") == 1 for w in bits(inst.mask("w"))),
        )
    if kind.endswith("2deg"):
        _, k = degeneracy_ordering(g)
        report.record("2-degenerate", k <= 2, f"degeneracy {k}")
        report.record("stated elimination order is 2-degenerate", _valid_order(g, inst.elimination_order(), 2))
        report.record("bipartite", is_bipartite(g))
    if kind == "cds-cobip":
        report.record("co-bipartite", is_bipartite(complement(g)))
    if kind.startswith("capvc"):
        c = inst.capacity
        ok = all(
            c[v] == (g.degree(v) if role == "V" else g.degree(v) - 1 if role in ("w", "p") else 0)
            for v, role in enumerate(inst.roles)
        )
        report.record("capacity table", ok)

    # correspondence
    truth = set(brute_transversals(h))
    report.transversals = len(truth)
    sols = gadget_solutions(inst, method)
    report.solutions = len(sols)
    report.record("no duplicate solutions", len(set(sols)) == len(sols))
    projected = set()
    for s in sols:
        try:
            t = project_solution(inst, s)
        except ReductionIntegrityError as exc:
            report.record("forced vertices", False, str(exc))
            continue
        if t is None:
            report.extras.append(s)
        else:
            projected.add(t)
    missing = truth - projected
    spurious = projected - truth
    report.record(
        "projection equals minimal transversals",
        not missing and not spurious,
        f"missing {[sorted(bits(t)) for t in missing]}, spurious {[sorted(bits(t)) for t in spurious]}",
    )
    prop = _gadget_property(inst)
    sol_set = set(sols)
    for t in sorted(truth):
        lifted = inst.lift(t)
        if not is_minimal(prop, lifted):
            report.record("lifted transversal is a minimal solution", False, str(sorted(bits(lifted))))
        elif lifted not in sol_set:
            report.record("lifted transversal was enumerated", False, str(sorted(bits(lifted))))
    report.checks.setdefault("lifted transversal is a minimal solution", True)
    report.checks.setdefault("lifted transversal was enumerated", True)

    if kind == "cds-cobip":
        hub_of = {inst.edge_index[w]: w for w in bits(inst.mask("w"))}
        expected = {
            (1 << v) | (1 << hub_of[i])
            for i, e in enumerate(h.edges)
            for v in bits(e)
            if not h.is_transversal(1 << v)
        }
        got = set(report.extras)
        report.record(
            "extras are the dominating pairs {v, w_e}",
            got == expected,
            f"unexpected {[sorted(bits(x)) for x in got - expected]}, "
            f"missing {[sorted(bits(x)) for x in expected - got]}",
        )
        report.record("extras at most quadratic", len(got) <= g.n ** 2, f"{len(got)} extras")
    return report
