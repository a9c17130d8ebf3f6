"""Minimal connected dominating sets on bounded-degree graphs.

For a solution X and v in X, any other solution Y can be approached by
first restoring domination with at most D vertices of Y, then reconnecting
the result with at most 2D - 2 more (D = maximum degree).  The neighbourhood
therefore tries every extension W of X - v with |W| <= 3D - 2.
"""

from __future__ import annotations

from .graph import ContractViolation, DominationProperty, Graph, InputError, bits, induced_components, is_connected
from .supergraph import CachedMinimizer, DelayStats, enumerate_solutions, is_minimal, minimal_extensions


def extension_pool(g: Graph, x: int, v: int) -> int:
    """Vertices worth adding after dropping v: N[N[v]] plus everything adjacent to a component of G[X - v].

    Since X dominates G this is all of V - (X - v); it is computed from the
    definition anyway so the pool stays correct for partial inputs.
    """
    base = x & ~(1 << v)
    near = g.closed_neighborhood(g.closed_neighborhood(1 << v))
    touching = 0
    for comp in induced_components(g, base):
        touching |= g.neighborhood(comp)
    return (near | touching) & ~base


def cds_neighbors(g: Graph, x: int, prop: DominationProperty, minimize) -> set[int]:
    budget = max(3 * g.max_degree - 2, 1)
    out = set()
    for v in bits(x):
        base = x & ~(1 << v)
        pool = extension_pool(g, x, v)
        for w in minimal_extensions(base, pool, prop, budget):
            out.add(minimize(base | w))
    return out


def cds_neighborhood(g: Graph, x: int) -> set[int]:
    """Out-neighbourhood of a minimal connected dominating set ``x``."""
    prop = DominationProperty(g, connected=True)
    if not is_minimal(prop, x):
        raise ContractViolation("cds_neighborhood: x is not a minimal connected dominating set")
    return cds_neighbors(g, x, prop, CachedMinimizer(prop))


def enumerate_cds(g: Graph, sink=None, limit: int | None = None, debug: bool = False) -> DelayStats:
    """Emit every minimal connected dominating set of the connected graph ``g`` once."""
    if not is_connected(g):
        raise InputError("graph not connected")
    prop = DominationProperty(g, connected=True)
    minimize = CachedMinimizer(prop)
    initial = minimize(g.full)
    return enumerate_solutions(
        initial,
        lambda x: cds_neighbors(g, x, prop, minimize),
        sink,
        limit=limit,
        check=prop if debug else None,
    )
