"""Minimal connected vertex covers on bounded-degree and d-claw-free graphs.

Neighbour generation: drop a vertex v from the current solution X, add all of
N(v) so the set is a vertex cover again, then reconnect it with a small valid
augmentation W and minimise.  On a graph of maximum degree D the broken cover
has at most D components, so |W| <= D - 1 always suffices; on a d-claw-free
graph it has at most d - 1 components and |W| <= d - 2 suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    ContractViolation,
    CoverProperty,
    Graph,
    InputError,
    bits,
    has_induced_claw,
    induced_components,
    is_connected,
    is_vertex_cover,
)
from .supergraph import CachedMinimizer, DelayStats, enumerate_solutions, is_minimal, subsets_up_to


@dataclass(frozen=True)
class AugmentationBudget:
    k: int
    mode: str = "explicit"
    d: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("augmentation budget must be non-negative")
        if self.mode not in ("bounded-degree", "claw-free", "explicit"):
            raise ValueError(f"unknown budget mode {self.mode!r}")

    @classmethod
    def bounded_degree(cls, g: Graph) -> AugmentationBudget:
        return cls(max(g.max_degree - 1, 0), "bounded-degree")

    @classmethod
    def claw_free(cls, d: int) -> AugmentationBudget:
        if d < 1:
            raise ValueError("claw size d must be at least 1")
        return cls(max(d - 2, 0), "claw-free", d)

    @classmethod
    def explicit(cls, k: int) -> AugmentationBudget:
        return cls(k, "explicit")


def merging_candidates(g: Graph, xprime: int, comps: list[int]) -> int:
    """Vertices outside ``xprime`` adjacent to at least two components of G[xprime]."""
    owner = {}
    for i, comp in enumerate(comps):
        for u in bits(comp):
            owner[u] = i
    out = 0
    for w in bits(g.full & ~xprime):
        touched = {owner[u] for u in g.adjacency[w]}
        if len(touched) >= 2:
            out |= 1 << w
    return out


def valid_augmentations(g: Graph, xprime: int, k: int, prune: bool = True) -> list[int]:
    """W outside ``xprime`` with |W| <= k and G[xprime | W] connected.

    Ordered by (size, lexicographic).  By default the candidates are
    restricted to vertices touching two or more components, so an already
    connected ``xprime`` yields just the empty augmentation; any minimal
    augmentation uses only such vertices.  ``prune=False`` scans every
    vertex outside ``xprime``.
    """
    if not is_vertex_cover(g, xprime):
        raise ContractViolation("valid_augmentations: xprime is not a vertex cover")
    if prune:
        comps = induced_components(g, xprime)
        if len(comps) <= 1:
            return [0]
        pool = merging_candidates(g, xprime, comps)
    else:
        pool = g.full & ~xprime
    return [w for w in subsets_up_to(pool, k) if is_connected(g, xprime | w)]


def _component_bound(g: Graph, v: int, budget: AugmentationBudget) -> int:
    if budget.mode == "claw-free":
        return max(budget.d - 1, 1)
    return max(g.degree(v), 1)


def cvc_neighbors(g: Graph, x: int, budget: AugmentationBudget, minimize) -> set[int]:
    out = set()
    for v in bits(x):
        xprime = (x & ~(1 << v)) | g.nbr[v]
        comps = induced_components(g, xprime)
        # every component of G[X'] meets N(v)
        bound = _component_bound(g, v, budget)
        if len(comps) > bound:
            raise InputError(
                f"removing vertex {v} leaves {len(comps)} components, more than {bound}; "
                "is the graph really d-claw-free?"
            )
        for w in valid_augmentations(g, xprime, budget.k, prune=True):
            out.add(minimize(xprime | w))
    return out


def cvc_neighborhood(g: Graph, x: int, budget: AugmentationBudget | None = None) -> set[int]:
    """Out-neighbourhood of a minimal connected vertex cover ``x``."""
    prop = CoverProperty(g, connected=True)
    if not is_minimal(prop, x):
        raise ContractViolation("cvc_neighborhood: x is not a minimal connected vertex cover")
    if budget is None:
        budget = AugmentationBudget.bounded_degree(g)
    return cvc_neighbors(g, x, budget, CachedMinimizer(prop))


def enumerate_cvc(g: Graph, budget: AugmentationBudget | None = None, sink=None, limit: int | None = None,
                  debug: bool = False) -> DelayStats:
    """Emit every minimal connected vertex cover of the connected graph ``g`` once."""
    if not is_connected(g):
        raise InputError("graph not connected")
    if budget is None:
        budget = AugmentationBudget.bounded_degree(g)
    if debug and budget.mode == "claw-free" and has_induced_claw(g, budget.d):
        raise InputError(f"graph contains an induced {budget.d}-claw")
    prop = CoverProperty(g, connected=True)
    minimize = CachedMinimizer(prop)
    initial = minimize(g.full)
    return enumerate_solutions(
        initial,
        lambda x: cvc_neighbors(g, x, budget, minimize),
        sink,
        limit=limit,
        check=prop if debug else None,
    )
