"""Minimal valid augmentations in a bipartite graph and the general-graph CVC enumerator.

A bipartite instance H has a left class L (in the CVC setting: the components
of a broken cover, contracted to single nodes) and a right class R.  A set
W of right vertices is a *valid augmentation* when H[L | W] is connected, and
it is minimal exactly when every member of W is a cut vertex of H[L | W].

``min_valid_aug`` lists all minimal valid augmentations by branching on a
highest-degree right vertex v:

* v adjacent to more than half of L: the answer splits into the
  augmentations of H - v, plus the minimal ones among
  {W + v : W minimal for the contraction H_v};
* otherwise: for each W minimal for H_v, recurse on H_W - v (whose left
  class has at most |L|/2 nodes) and add W back, again keeping only the
  minimal sets, plus the same ``+ v`` family.

Either way one branch halves |L|, which gives quasi-polynomial total time.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .graph import ContractViolation, Graph, InputError, bits, induced_components, is_connected, vset
from .graph import CoverProperty, ParseError, _header, _int_rows
from .supergraph import CachedMinimizer, DelayStats, enumerate_solutions, is_minimal


@dataclass(frozen=True)
class ContractedBipartite:
    """Bipartite graph with left nodes ``0..n_left-1`` and right vertices keyed by id.

    ``right`` maps each right id to the bitmask of its left neighbours.
    ``origin[i]`` is the set of original left nodes merged into left node i and
    ``absorbed[i]`` the set of right ids swallowed by it.
    """

    n_left: int
    right: Mapping[int, int]
    origin: tuple[int, ...]
    absorbed: tuple[int, ...]

    @classmethod
    def from_edges(cls, n_left: int, right_ids: Iterable[int], edges: Iterable[tuple[int, int]]):
        adj = {r: 0 for r in right_ids}
        for left, r in edges:
            if not 0 <= left < n_left:
                raise ValueError(f"left node {left} out of range")
            if r not in adj:
                raise ValueError(f"unknown right vertex {r}")
            adj[r] |= 1 << left
        return cls(
            n_left,
            MappingProxyType(dict(sorted(adj.items()))),
            tuple(1 << i for i in range(n_left)),
            (0,) * n_left,
        )

    @property
    def right_mask(self) -> int:
        return vset(self.right)

    @property
    def full_left(self) -> int:
        return (1 << self.n_left) - 1

    def degree(self, r: int) -> int:
        return self.right[r].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(left, r) for r, lm in self.right.items() for left in bits(lm)]

    def without(self, r: int) -> ContractedBipartite:
        """H - r."""
        adj = {k: v for k, v in self.right.items() if k != r}
        return ContractedBipartite(self.n_left, MappingProxyType(adj), self.origin, self.absorbed)

    def is_connected(self) -> bool:
        """Connectivity of the whole of H (both classes)."""
        if self.n_left == 0:
            return len(self.right) <= 1
        if any(lm == 0 for lm in self.right.values()):
            return False
        return _merged_left(self, self.right_mask) == [self.full_left]

    def to_text(self) -> str:
        edges = self.edges()
        ids = list(self.right)
        index = {r: i for i, r in enumerate(ids)}
        lines = [f"{self.n_left} {len(ids)} {len(edges)}"]
        lines += [f"{left} {index[r]}" for left, r in edges]
        return "\n".join(lines) + "\n"


def parse_bipartite(text: str) -> ContractedBipartite:
    rows = _int_rows(text)
    _, (n_left, n_right, m) = _header(rows, "bipartite instance", width=3)
    edges = []
    seen = set()
    for lineno, row in rows:
        if len(row) != 2:
            raise ParseError("edge line must be 'left right'", lineno)
        left, r = row
        if not (0 <= left < n_left and 0 <= r < n_right):
            raise ParseError("vertex id out of range", lineno)
        if (left, r) in seen:
            raise ParseError(f"duplicate edge {left} {r}", lineno)
        seen.add((left, r))
        edges.append((left, r))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return ContractedBipartite.from_edges(n_left, range(n_right), edges)


def _merged_left(h: ContractedBipartite, w: int) -> list[int]:
    """Partition of the left nodes into the components of H[L | w], as left bitmasks."""
    parts: list[int] = []
    for i in range(h.n_left):
        parts.append(1 << i)
    for r in bits(w):
        lm = h.right[r]
        if not lm:
            continue
        merged = lm
        keep = []
        for p in parts:
            if p & lm:
                merged |= p
            else:
                keep.append(p)
        keep.append(merged)
        parts = keep
    parts.sort(key=lambda p: p & -p)
    return parts


def is_valid_augmentation(h: ContractedBipartite, w: int) -> bool:
    """Whether H[L | w] is connected."""
    if h.n_left == 0:
        return w.bit_count() <= 1
    if any(h.right[r] == 0 for r in bits(w)):
        return False
    return len(_merged_left(h, w)) == 1


def is_minimal_augmentation(h: ContractedBipartite, w: int) -> bool:
    """Valid, and every member of ``w`` is a cut vertex of H[L | w]."""
    return is_valid_augmentation(h, w) and all(
        not is_valid_augmentation(h, w & ~(1 << r)) for r in bits(w)
    )


def contract(h: ContractedBipartite, x: int) -> ContractedBipartite:
    """Contract each component of H[L | x] that contains a left node into one left node.

    Right vertices of ``x`` without left neighbours form components with no
    left node and are dropped, as are all members of ``x``.
    """
    if x & ~h.right_mask:
        raise ContractViolation("contract: x is not a subset of the right class")
    parts = _merged_left(h, x)
    new_index = [0] * h.n_left
    for j, p in enumerate(parts):
        for i in bits(p):
            new_index[i] = j
    origin = []
    absorbed = []
    for p in parts:
        o = a = 0
        for i in bits(p):
            o |= h.origin[i]
            a |= h.absorbed[i]
        origin.append(o)
        absorbed.append(a)
    for r in bits(x):
        lm = h.right[r]
        if lm:
            j = new_index[(lm & -lm).bit_length() - 1]
            absorbed[j] |= 1 << r
    adj = {}
    for r, lm in h.right.items():
        if x >> r & 1:
            continue
        nm = 0
        for i in bits(lm):
            nm |= 1 << new_index[i]
        adj[r] = nm
    return ContractedBipartite(len(parts), MappingProxyType(adj), tuple(origin), tuple(absorbed))


def min_filter(h: ContractedBipartite, family: Iterable[int]) -> set[int]:
    """Keep the members that are minimal valid augmentations for L in H."""
    out = set()
    for w in family:
        if not is_valid_augmentation(h, w):
            raise ContractViolation(f"min_filter: {sorted(bits(w))} is not a valid augmentation")
        if all(not is_valid_augmentation(h, w & ~(1 << r)) for r in bits(w)):
            out.add(w)
    return out


def _brute(h: ContractedBipartite) -> set[int]:
    # only reached when |L| <= 1 or |R| <= 1
    if is_valid_augmentation(h, 0):
        return {0}
    return {1 << r for r in h.right if is_valid_augmentation(h, 1 << r)}


def _pick_branch_vertex(h: ContractedBipartite) -> int:
    return max(h.right, key=lambda r: (h.degree(r), -r))


class _Recursion:
    def __init__(self, debug: bool):
        self.debug = debug
        self.calls = 0

    def run(self, h: ContractedBipartite) -> set[int]:
        self.calls += 1
        if min(h.n_left, len(h.right)) <= 1:
            return _brute(h)
        v = _pick_branch_vertex(h)
        deg = h.degree(v)
        if deg <= 1:
            return set()
        vbit = 1 << v
        s_v = self.run(contract(h, vbit))
        with_v = min_filter(h, (w | vbit for w in s_v))
        if deg > h.n_left / 2:
            out = self.run(h.without(v)) | with_v
        else:
            out = set(with_v)
            for w in s_v:
                sub = contract(h, w).without(v)
                out |= min_filter(h, (u | w for u in self.run(sub)))
        if self.debug:
            if len(s_v) > len(out):
                raise AssertionError("contraction produced more augmentations than the parent instance")
            for w in out:
                if not is_minimal_augmentation(h, w):
                    raise AssertionError(f"non-minimal augmentation {sorted(bits(w))}")
        return out


def min_valid_aug(h: ContractedBipartite, debug: bool = False) -> set[int]:
    """All minimal valid augmentations for L in the connected bipartite graph H."""
    if not h.is_connected():
        raise InputError("bipartite instance is not connected")
    return _Recursion(debug).run(h)


def augmentation_instance(g: Graph, xprime: int) -> tuple[ContractedBipartite, list[int]]:
    """Contract the components of G[xprime] into left nodes; right = V(G) - xprime.

    Returns the instance and the component vertex sets (indexed like the left nodes).
    """
    comps = induced_components(g, xprime)
    owner = {}
    for i, comp in enumerate(comps):
        for u in bits(comp):
            owner[u] = i
    adj = {}
    for w in bits(g.full & ~xprime):
        lm = 0
        for u in g.adjacency[w]:
            if u in owner:
                lm |= 1 << owner[u]
        adj[w] = lm
    h = ContractedBipartite(
        len(comps), MappingProxyType(adj), tuple(1 << i for i in range(len(comps))), (0,) * len(comps)
    )
    return h, comps


def cvc_quasipoly_neighbors(g: Graph, x: int, minimize, debug: bool = False) -> set[int]:
    out = set()
    for v in bits(x):
        xprime = (x & ~(1 << v)) | g.nbr[v]
        h, _ = augmentation_instance(g, xprime)
        for w in min_valid_aug(h, debug=debug):
            out.add(minimize(xprime | w))
    return out


def enumerate_cvc_quasipoly(g: Graph, sink=None, limit: int | None = None, debug: bool = False) -> DelayStats:
    """Minimal connected vertex covers of a connected graph of any degree."""
    if not is_connected(g):
        raise InputError("graph not connected")
    prop = CoverProperty(g, connected=True)
    minimize = CachedMinimizer(prop)
    initial = minimize(g.full)
    return enumerate_solutions(
        initial,
        lambda x: cvc_quasipoly_neighbors(g, x, minimize, debug),
        sink,
        limit=limit,
        check=prop if debug else None,
    )


__all__ = [
    "ContractedBipartite",
    "augmentation_instance",
    "contract",
    "enumerate_cvc_quasipoly",
    "is_minimal_augmentation",
    "is_valid_augmentation",
    "min_filter",
    "min_valid_aug",
    "parse_bipartite",
]
