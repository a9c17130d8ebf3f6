"""Graph, hypergraph and capacity containers plus the basic cover/domination predicates.

Vertex sets are Python ints used as bit vectors: bit ``v`` is set iff vertex ``v``
is a member.  Equal subsets are equal ints, so they hash and compare canonically.
``vset`` and ``members`` convert from and to ordinary collections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed graph, hypergraph or capacity file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InputError(ValueError):
    """Input violates an algorithm precondition (e.g. a disconnected graph)."""


class ContractViolation(ValueError):
    """A function was called with arguments outside its documented contract."""


def vset(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def format_set(mask: int) -> str:
    return " ".join(str(v) for v in bits(mask))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    nbr: tuple[int, ...] = field(repr=False, compare=False)
    max_degree: int = field(compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        adjacency = tuple(tuple(sorted(a)) for a in adj)
        nbr = tuple(vset(a) for a in adjacency)
        max_degree = max((len(a) for a in adjacency), default=0)
        return cls(n, adjacency, nbr, max_degree)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighborhood(self, x: int) -> int:
        """Open neighbourhood N(x) = union of N(v) over v in x, minus x."""
        out = 0
        for v in bits(x):
            out |= self.nbr[v]
        return out & ~x

    def closed_neighborhood(self, x: int) -> int:
        return self.neighborhood(x) | x

    def to_text(self) -> str:
        edges = self.edges()
        lines = [f"{self.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on ``0..n-1``; ``edges`` holds one bitmask per hyperedge, in input order."""

    n: int
    edges: tuple[int, ...]

    def __post_init__(self):
        for i, e in enumerate(self.edges):
            if e == 0:
                raise ValueError(f"hyperedge {i} is empty")
            if e >> self.n:
                raise ValueError(f"hyperedge {i} has a vertex outside 0..{self.n - 1}")

    @classmethod
    def from_sets(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(n, tuple(vset(e) for e in edges))

    def is_transversal(self, s: int) -> bool:
        return all(e & s for e in self.edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"] + [format_set(e) for e in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CapacityFn:
    cap: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.cap):
            raise ValueError("capacities must be non-negative")

    @classmethod
    def uniform(cls, n: int, q: int) -> CapacityFn:
        return cls((q,) * n)

    @property
    def q(self) -> int:
        return max(self.cap, default=0)

    def __getitem__(self, v: int) -> int:
        return self.cap[v]

    def __len__(self) -> int:
        return len(self.cap)

    def to_text(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.cap))


def _int_rows(text: str) -> Iterator[tuple[int, list[int]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            yield lineno, [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-numeric token in {raw.strip()!r}", lineno) from None


def _header(rows, what: str, width: int = 2) -> tuple[int, list[int]]:
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise ParseError(f"empty {what} file") from None
    if len(header) != width or any(h < 0 for h in header):
        raise ParseError(f"header must be {width} non-negative integers", lineno)
    return lineno, header


def parse_graph(text: str) -> Graph:
    rows = _int_rows(text)
    _, (n, m) = _header(rows, "graph")
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, row in rows:
        if len(row) != 2:
            raise ParseError("edge line must hold exactly two vertex ids", lineno)
        u, v = row
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    rows = _int_rows(text)
    _, (n, m) = _header(rows, "hypergraph")
    edges = []
    for lineno, row in rows:
        if not row:
            raise ParseError("empty hyperedge", lineno)
        if any(not 0 <= v < n for v in row):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if len(set(row)) != len(row):
            raise ParseError("repeated vertex inside a hyperedge", lineno)
        edges.append(vset(row))
    if len(edges) != m:
        raise ParseError(f"header announces {m} hyperedges, found {len(edges)}")
    return Hypergraph(n, tuple(edges))


def parse_capacity(text: str, n: int) -> CapacityFn:
    cap: list[int | None] = [None] * n
    for lineno, row in _int_rows(text):
        if len(row) != 2:
            raise ParseError("capacity line must be 'vertex capacity'", lineno)
        v, c = row
        if not 0 <= v < n:
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if c < 0:
            raise ParseError("negative capacity", lineno)
        if cap[v] is not None:
            raise ParseError(f"capacity of vertex {v} given twice", lineno)
        cap[v] = c
    missing = [v for v, c in enumerate(cap) if c is None]
    if missing:
        raise ParseError(f"no capacity for vertices {missing[:5]}")
    return CapacityFn(tuple(cap))


# -- structural queries -------------------------------------------------------


def component_of(g: Graph, x: int, start: int) -> int:
    """Vertex set of the component of G[x] containing ``start`` (a member of x)."""
    comp = frontier = 1 << start
    nbr = g.nbr
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= nbr[v]
        frontier = grow & x & ~comp
        comp |= frontier
    return comp


def induced_components(g: Graph, x: int) -> list[int]:
    """Components of G[x], ordered by smallest member."""
    comps = []
    rest = x
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = component_of(g, rest, low)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, x: int | None = None) -> bool:
    """Whether G[x] is connected; the empty set counts as connected."""
    if x is None:
        x = g.full
    if not x:
        return True
    low = (x & -x).bit_length() - 1
    return component_of(g, x, low) == x


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Repeated removal of a minimum-degree vertex (lowest id on ties).

    Returns the elimination order and the degeneracy k: every vertex has at
    most k neighbours later in the order.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = g.full
    order = []
    k = 0
    for _ in range(g.n):
        v = min(bits(alive), key=lambda u: (deg[u], u))
        k = max(k, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for u in bits(g.nbr[v] & alive):
            deg[u] -= 1
    return order, k


def is_vertex_cover(g: Graph, x: int) -> bool:
    rest = g.full & ~x
    return all(not (g.nbr[v] & rest) for v in bits(rest))


def is_dominating(g: Graph, x: int) -> bool:
    return all(g.nbr[v] & x for v in bits(g.full & ~x))


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.nbr[u] >> v & 1]
    )


def has_induced_claw(g: Graph, d: int) -> bool:
    """Brute force: some vertex has d pairwise non-adjacent neighbours."""
    from itertools import combinations

    for center in range(g.n):
        for leaves in combinations(g.adjacency[center], d):
            if all(not g.nbr[a] >> b & 1 for a, b in combinations(leaves, 2)):
                return True
    return False


# -- properties ---------------------------------------------------------------

KINDS = ("vc", "ds", "connected-vc", "connected-ds")


class Property:
    """Monotone vertex-set predicate.

    ``can_drop(x, u)`` answers ``self(x - {u})`` assuming ``self(x)`` already
    holds; subclasses override it with an incremental test.
    """

    def __call__(self, x: int) -> bool:
        raise NotImplementedError

    def can_drop(self, x: int, u: int) -> bool:
        return self(x & ~(1 << u))


class FunctionProperty(Property):
    def __init__(self, fn: Callable[[int], bool]):
        self.fn = fn

    def __call__(self, x: int) -> bool:
        return bool(self.fn(x))


class CoverProperty(Property):
    def __init__(self, g: Graph, connected: bool = False):
        self.g = g
        self.connected = connected

    def __call__(self, x: int) -> bool:
        if not is_vertex_cover(self.g, x):
            return False
        return not self.connected or is_connected(self.g, x)

    def can_drop(self, x: int, u: int) -> bool:
        if self.g.nbr[u] & ~x:
            return False
        return not self.connected or is_connected(self.g, x & ~(1 << u))


class DominationProperty(Property):
    def __init__(self, g: Graph, connected: bool = False):
        self.g = g
        self.connected = connected

    def __call__(self, x: int) -> bool:
        if not is_dominating(self.g, x):
            return False
        return not self.connected or is_connected(self.g, x)

    def can_drop(self, x: int, u: int) -> bool:
        nbr = self.g.nbr
        y = x & ~(1 << u)
        if not nbr[u] & y:
            return False
        # vertices outside x that leaned on u
        if any(not nbr[w] & y for w in bits(nbr[u] & ~x)):
            return False
        return not self.connected or is_connected(self.g, y)


def basic_property(g: Graph, kind: str) -> Property:
    if kind == "vc":
        return CoverProperty(g)
    if kind == "connected-vc":
        return CoverProperty(g, connected=True)
    if kind == "ds":
        return DominationProperty(g)
    if kind == "connected-ds":
        return DominationProperty(g, connected=True)
    raise ValueError(f"unknown property kind {kind!r}; expected one of {KINDS}")


def check_basic_property(g: Graph, x: int, kind: str) -> bool:
    return basic_property(g, kind)(x)


def as_property(g: Graph, prop) -> Property:
    if isinstance(prop, Property):
        return prop
    if isinstance(prop, str):
        return basic_property(g, prop)
    return FunctionProperty(prop)
