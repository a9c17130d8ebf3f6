"""Solution-graph traversal and greedy minimisation for monotone set families.

The traversal starts from one minimal solution and repeatedly asks a
neighbourhood oracle for more.  As long as every solution X and every other
solution Y admit some neighbour Z of X with |Z - Y| < |X - Y|, the directed
graph of solutions is strongly connected and a plain BFS visits all of it.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .graph import ContractViolation, Graph, Property, as_property, bits


class IntegrityError(RuntimeError):
    """A neighbourhood oracle returned something that is not a minimal solution."""


@dataclass
class DelayStats:
    outputs: int = 0
    max_gap: float = 0.0
    mean_gap: float = 0.0
    total_time: float = 0.0
    neighborhood_calls: int = 0
    truncated: bool = False
    gaps: list[float] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "outputs": self.outputs,
            "max_gap": self.max_gap,
            "mean_gap": self.mean_gap,
            "total_time": self.total_time,
            "neighborhood_calls": self.neighborhood_calls,
            "truncated": self.truncated,
        }


def minimize_monotone(g: Graph | None, x: int, prop) -> int:
    """Greedy minimal subset of ``x`` satisfying ``prop``, dropping vertices in ascending id.

    One pass suffices: if u survived because ``x' - u`` failed for some
    intermediate ``x'``, monotonicity makes ``result - u`` fail as well.
    """
    prop = as_property(g, prop) if g is not None else prop
    if not prop(x):
        raise ContractViolation("minimize_monotone: the starting set does not satisfy the property")
    for u in bits(x):
        if prop.can_drop(x, u):
            x &= ~(1 << u)
    return x


def is_minimal(prop: Property, x: int) -> bool:
    return prop(x) and not any(prop.can_drop(x, u) for u in bits(x))


class CachedMinimizer:
    """Memoised ``minimize_monotone`` for one enumeration run."""

    def __init__(self, prop: Property, maxsize: int = 1 << 16):
        self.prop = prop
        self.maxsize = maxsize
        self._memo: dict[int, int] = {}

    def __call__(self, x: int) -> int:
        try:
            return self._memo[x]
        except KeyError:
            pass
        y = minimize_monotone(None, x, self.prop)
        if len(self._memo) >= self.maxsize:
            self._memo.clear()
        self._memo[x] = y
        return y


def minimal_extensions(base: int, pool: int, pred: Callable[[int], bool], max_size: int):
    """Inclusion-minimal ``W`` within ``pool`` with ``|W| <= max_size`` and ``pred(base | W)``.

    ``pred`` must be monotone in ``W``.  Sets are produced size-ascending;
    level k+1 is grown only from level-k failures (apriori style), so supersets
    of a found extension are never evaluated.
    """
    if pred(base):
        yield 0
        return
    elems = list(bits(pool))
    found: list[int] = []
    # each frontier entry: (set, index of its largest element)
    frontier = [(0, -1)]
    for _size in range(1, max_size + 1):
        nxt = []
        for w, last in frontier:
            for i in range(last + 1, len(elems)):
                cand = w | (1 << elems[i])
                if any(f & cand == f for f in found):
                    continue
                if pred(base | cand):
                    found.append(cand)
                    yield cand
                else:
                    nxt.append((cand, i))
        if not nxt:
            return
        frontier = nxt


def subsets_up_to(pool: int, k: int) -> Iterable[int]:
    """All subsets of ``pool`` with at most k members, ordered by (size, lexicographic)."""
    elems = list(bits(pool))
    for size in range(0, min(k, len(elems)) + 1):
        for combo in combinations(elems, size):
            m = 0
            for v in combo:
                m |= 1 << v
            yield m


def traverse(initial: int, neighborhood: Callable[[int], Iterable[int]], stats: DelayStats | None = None,
             check: Property | None = None):
    """Breadth-first walk of the solution graph; yields each solution once, on dequeue."""
    visited = {initial}
    queue = deque([initial])
    while queue:
        x = queue.popleft()
        yield x
        if stats is not None:
            stats.neighborhood_calls += 1
        for z in neighborhood(x):
            if z in visited:
                continue
            if check is not None and not is_minimal(check, z):
                raise IntegrityError(f"neighbourhood produced a non-minimal set {sorted(bits(z))}")
            visited.add(z)
            queue.append(z)


def enumerate_solutions(initial: int | None, neighborhood, sink: Callable[[int], object] | None = None,
                        limit: int | None = None, check: Property | None = None) -> DelayStats:
    """Feed every solution reachable from ``initial`` to ``sink`` exactly once.

    ``initial=None`` denotes an empty family: nothing is emitted.  ``check``
    turns on the per-neighbour minimality assertion.  Gaps are measured from
    the start to the first output, between outputs, and from the last output
    to termination.
    """
    stats = DelayStats()
    start = last = time.perf_counter()
    if initial is not None:
        if check is not None and not is_minimal(check, initial):
            raise IntegrityError("initial solution is not minimal")
        for x in traverse(initial, neighborhood, stats, check):
            now = time.perf_counter()
            stats.gaps.append(now - last)
            last = now
            stats.outputs += 1
            if sink is not None:
                sink(x)
            if limit is not None and stats.outputs >= limit:
                stats.truncated = True
                break
    end = time.perf_counter()
    stats.gaps.append(end - last)
    stats.total_time = end - start
    stats.max_gap = max(stats.gaps)
    stats.mean_gap = sum(stats.gaps) / len(stats.gaps)
    return stats


def collect(run, *args, **kwargs) -> list[int]:
    """Run a sink-based enumerator and return its outputs in emission order."""
    out: list[int] = []
    run(*args, sink=out.append, **kwargs)
    return out


__all__ = [
    "CachedMinimizer",
    "DelayStats",
    "IntegrityError",
    "collect",
    "enumerate_solutions",
    "is_minimal",
    "minimal_extensions",
    "minimize_monotone",
    "subsets_up_to",
    "traverse",
]
