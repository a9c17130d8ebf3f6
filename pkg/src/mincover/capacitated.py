"""Capacitated vertex covers and dominating sets.

Feasibility of a vertex set X is a bipartite matching question: items (the
edges of G for covers, the vertices outside X for domination) must be
matched into capacity slots, vertex u in X contributing c(u) slots.  X is
feasible iff a matching saturates every item.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connected_vc import merging_candidates
from .graph import (
    CapacityFn,
    ContractViolation,
    CoverProperty,
    Graph,
    InputError,
    Property,
    bits,
    induced_components,
    is_connected,
)
from .supergraph import CachedMinimizer, DelayStats, enumerate_solutions, is_minimal, minimal_extensions

CAP_KINDS = ("vc", "ds")


@dataclass(frozen=True)
class Assignment:
    """Witness map: edge -> covering endpoint (``alpha``) or outside vertex -> dominating neighbour (``beta``)."""

    kind: str
    map: dict

    def validate(self, g: Graph, c: CapacityFn, x: int) -> bool:
        load: dict[int, int] = {}
        if self.kind == "alpha":
            if set(self.map) != set(g.edges()):
                return False
            for (a, b), u in self.map.items():
                if u not in (a, b) or not x >> u & 1:
                    return False
                load[u] = load.get(u, 0) + 1
        elif self.kind == "beta":
            if set(self.map) != set(bits(g.full & ~x)):
                return False
            for w, u in self.map.items():
                if not x >> u & 1 or not g.nbr[w] >> u & 1:
                    return False
                load[u] = load.get(u, 0) + 1
        else:
            return False
        return all(load[u] <= c[u] for u in load)

    def lines(self) -> list[str]:
        if self.kind == "alpha":
            return [f"{a}-{b}->{u}" for (a, b), u in sorted(self.map.items())]
        return [f"{w}->{u}" for w, u in sorted(self.map.items())]


@dataclass(frozen=True)
class FeasibilityGraph:
    """Items on the left, capacity slots ``(vertex, i)`` on the right."""

    kind: str
    items: tuple
    slots: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, g: Graph, cap: list[int], x: int, kind: str) -> FeasibilityGraph:
        slot_ids: dict[int, list[int]] = {}
        slots = []
        for u in bits(x):
            ids = []
            for i in range(cap[u]):
                ids.append(len(slots))
                slots.append((u, i))
            slot_ids[u] = ids
        if kind == "vc":
            items = tuple(g.edges())
            adj = tuple(tuple(s for u in e if u in slot_ids for s in slot_ids[u]) for e in items)
        else:
            items = tuple(bits(g.full & ~x))
            adj = tuple(tuple(s for u in g.adjacency[w] if u in slot_ids for s in slot_ids[u]) for w in items)
        return cls(kind, items, tuple(slots), adj)

    def maximum_matching(self) -> list[int | None]:
        """Item -> matched slot, by repeated augmenting-path search."""
        slot_owner: list[int | None] = [None] * len(self.slots)
        item_slot: list[int | None] = [None] * len(self.items)
        adj = self.adj

        def augment(item: int, seen: set[int]) -> bool:
            for s in adj[item]:
                if s in seen:
                    continue
                seen.add(s)
                owner = slot_owner[s]
                if owner is None or augment(owner, seen):
                    slot_owner[s] = item
                    item_slot[item] = s
                    return True
            return False

        for item in range(len(self.items)):
            if not augment(item, set()):
                # one unsaturated item already decides infeasibility, but keep the
                # matching maximum for callers that inspect it
                continue
        return item_slot


def clamped_capacities(g: Graph, c: CapacityFn) -> list[int]:
    """A vertex never covers more than its incident edges nor dominates more than its neighbours."""
    if len(c) != g.n:
        raise ValueError(f"capacity function has {len(c)} entries for {g.n} vertices")
    return [min(c[v], g.degree(v)) for v in range(g.n)]


def _quick_reject(g: Graph, cap: list[int], x: int, kind: str) -> bool:
    if kind == "vc":
        useful = 0
        for u in bits(x):
            if cap[u]:
                useful |= 1 << u
        # every edge needs an endpoint with spare capacity
        rest = g.full & ~useful
        if any(g.nbr[v] & rest for v in bits(rest)):
            return True
        return sum(cap[u] for u in bits(x)) < g.m
    outside = g.full & ~x
    if any(not g.nbr[w] & x for w in bits(outside)):
        return True
    return sum(cap[u] for u in bits(x)) < outside.bit_count()


def _check_kind(kind: str):
    if kind not in CAP_KINDS:
        raise ValueError(f"unknown capacitated kind {kind!r}; expected 'vc' or 'ds'")


def cap_feasible(g: Graph, c: CapacityFn, x: int, kind: str) -> tuple[bool, Assignment | None]:
    """Decide whether ``x`` is a capacitated VC/DS and return a witness assignment if so."""
    _check_kind(kind)
    cap = clamped_capacities(g, c)
    if _quick_reject(g, cap, x, kind):
        return False, None
    fg = FeasibilityGraph.build(g, cap, x, kind)
    matched = fg.maximum_matching()
    if any(s is None for s in matched):
        return False, None
    mapping = {item: fg.slots[s][0] for item, s in zip(fg.items, matched)}
    return True, Assignment("alpha" if kind == "vc" else "beta", mapping)


class CapacitatedProperty(Property):
    """Memoised feasibility predicate for one (graph, capacity, kind)."""

    def __init__(self, g: Graph, c: CapacityFn, kind: str, maxsize: int = 1 << 16):
        _check_kind(kind)
        self.g = g
        self.c = c
        self.kind = kind
        self.cap = clamped_capacities(g, c)
        self.maxsize = maxsize
        self._memo: dict[int, bool] = {}

    def __call__(self, x: int) -> bool:
        try:
            return self._memo[x]
        except KeyError:
            pass
        if _quick_reject(self.g, self.cap, x, self.kind):
            ok = False
        else:
            matched = FeasibilityGraph.build(self.g, self.cap, x, self.kind).maximum_matching()
            ok = all(s is not None for s in matched)
        if len(self._memo) >= self.maxsize:
            self._memo.clear()
        self._memo[x] = ok
        return ok

    def can_drop(self, x: int, u: int) -> bool:
        nbr = self.g.nbr
        y = x & ~(1 << u)
        if self.kind == "vc":
            if nbr[u] & ~x:
                return False
        elif not nbr[u] & y:
            return False
        return self(y)

    @property
    def q(self) -> int:
        return max(self.cap, default=0)


class Conjunction(Property):
    def __init__(self, *props: Property):
        self.props = props

    def __call__(self, x: int) -> bool:
        return all(p(x) for p in self.props)

    def can_drop(self, x: int, u: int) -> bool:
        return all(p.can_drop(x, u) for p in self.props)


def _pool(prop: CapacitatedProperty, base: int) -> int:
    pool = prop.g.full & ~base
    if prop.kind == "vc":
        # a zero-capacity vertex covers nothing
        for u in bits(pool):
            if not prop.cap[u]:
                pool &= ~(1 << u)
    return pool


def _extension_budget(prop: CapacitatedProperty) -> int:
    return prop.q if prop.kind == "vc" else prop.q + 1


def cap_neighbors(prop: CapacitatedProperty, x: int, minimize) -> set[int]:
    budget = _extension_budget(prop)
    out = set()
    for v in bits(x):
        base = x & ~(1 << v)
        for w in minimal_extensions(base, _pool(prop, base), prop, budget):
            out.add(minimize(base | w))
    return out


def cap_neighborhood(g: Graph, c: CapacityFn, x: int, kind: str) -> set[int]:
    """Out-neighbourhood of a minimal capacitated VC/DS ``x``."""
    prop = CapacitatedProperty(g, c, kind)
    if not is_minimal(prop, x):
        raise ContractViolation(f"cap_neighborhood: x is not a minimal capacitated {kind}")
    return cap_neighbors(prop, x, CachedMinimizer(prop))


def enumerate_capacitated(g: Graph, c: CapacityFn, kind: str, sink=None, limit: int | None = None,
                          debug: bool = False) -> DelayStats:
    """Emit every minimal capacitated VC/DS once; emits nothing when V(G) itself is infeasible."""
    prop = CapacitatedProperty(g, c, kind)
    minimize = CachedMinimizer(prop)
    initial = minimize(g.full) if prop(g.full) else None
    return enumerate_solutions(
        initial, lambda x: cap_neighbors(prop, x, minimize), sink, limit=limit, check=prop if debug else None
    )


def connected_capacitated_vc_property(g: Graph, c: CapacityFn) -> Conjunction:
    return Conjunction(CoverProperty(g, connected=True), CapacitatedProperty(g, c, "vc"))


def ccvc_neighbors(g: Graph, x: int, cap_prop: CapacitatedProperty, minimize) -> set[int]:
    restore = min(cap_prop.q, g.max_degree)
    reconnect = max(2 * g.max_degree - 1, 0)
    out = set()
    for v in bits(x):
        base = x & ~(1 << v)
        for w in minimal_extensions(base, _pool(cap_prop, base), cap_prop, restore):
            s = base | w
            comps = induced_components(g, s)
            if len(comps) <= 1:
                out.add(minimize(s))
                continue
            pool = merging_candidates(g, s, comps)
            for w2 in minimal_extensions(s, pool, lambda y: is_connected(g, y), reconnect):
                out.add(minimize(s | w2))
    return out


def enumerate_connected_capacitated_vc(g: Graph, c: CapacityFn, sink=None, limit: int | None = None,
                                       debug: bool = False) -> DelayStats:
    """Minimal vertex sets that are both connected vertex covers and capacitated vertex covers."""
    if not is_connected(g):
        raise InputError("graph not connected")
    prop = connected_capacitated_vc_property(g, c)
    cap_prop = prop.props[1]
    minimize = CachedMinimizer(prop)
    initial = minimize(g.full) if prop(g.full) else None
    return enumerate_solutions(
        initial, lambda x: ccvc_neighbors(g, x, cap_prop, minimize), sink, limit=limit,
        check=prop if debug else None,
    )
