"""Exact treewidth through elimination orderings.

Parallel edges never matter, so everything runs on the neighbour masks of
the underlying simple graph.  For an eliminated prefix ``S`` and a vertex
``v`` outside it, ``q(S, v)`` counts the vertices outside ``S + v`` that can
be reached from ``v`` through ``S``; that is the degree ``v`` has when it is
eliminated after ``S``.  The width of the best ordering obeys

    f(S) = min over v in S of max(f(S - v), q(S - v, v)),   tw = f(V).

:func:`treewidth` decides ``f(V) <= k`` for increasing ``k`` by exploring
only prefixes whose steps all satisfy ``q <= k``, starting from a
contraction-degeneracy lower bound and stopping at a greedy upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotAPermutation, TooLarge
from .multigraph import Multigraph, members, popcount


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    elimination_order: tuple[int, ...]


def _q(nbr: Sequence[int], s: int, v: int) -> int:
    reach = 1 << v
    frontier = reach
    outside = 0
    while frontier:
        grow = 0
        for x in members(frontier):
            grow |= nbr[x]
        outside |= grow & ~s
        frontier = grow & s & ~reach
        reach |= frontier
    return popcount(outside & ~(1 << v))


def width_of_order(g: Multigraph, order: Sequence[int]) -> int:
    """Largest number of later neighbours met while eliminating in ``order`` with fill-in."""
    if sorted(order) != list(range(g.n)):
        raise NotAPermutation("order must list every vertex exactly once")
    adj = [set(members(g.neighbor_mask(v))) for v in range(g.n)]
    width = 0
    for v in order:
        nb = adj[v]
        width = max(width, len(nb))
        for a in nb:
            adj[a] |= nb
            adj[a].discard(a)
            adj[a].discard(v)
        adj[v] = set()
    return width


def _greedy_order(g: Multigraph, fill: bool) -> list[int]:
    adj = [set(members(g.neighbor_mask(v))) for v in range(g.n)]
    alive = set(range(g.n))
    order = []
    while alive:
        def score(v):
            nb = adj[v]
            if fill:
                missing = sum(1 for a in nb for b in nb if a < b and b not in adj[a])
                return (missing, len(nb), v)
            return (len(nb), v)

        v = min(alive, key=score)
        nb = adj[v]
        for a in nb:
            adj[a] |= nb
            adj[a].discard(a)
            adj[a].discard(v)
        alive.discard(v)
        order.append(v)
    return order


def minor_min_width(g: Multigraph) -> int:
    """Contraction-degeneracy lower bound: contract a min-degree vertex into its
    min-degree neighbour until one vertex is left; report the largest min degree seen."""
    adj = {v: set(members(g.neighbor_mask(v))) for v in range(g.n)}
    lb = 0
    while len(adj) > 1:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        lb = max(lb, len(adj[v]))
        u = min(adj[v], key=lambda x: (len(adj[x]), x))
        for a in adj[v]:
            adj[a].discard(v)
            if a != u:
                adj[a].add(u)
                adj[u].add(a)
        del adj[v]
    return lb


def _decide(g: Multigraph, k: int):
    """An elimination order of width <= k, or ``None``."""
    n = g.n
    nbr = [g.neighbor_mask(v) for v in range(n)]
    goal = n - k - 1
    if goal <= 0:
        return list(range(n))
    parent = {0: None}
    layer = [0]
    size = 0
    while layer:
        if size >= goal:
            s = layer[0]
            prefix = []
            while parent[s] is not None:
                prev = parent[s]
                prefix.append((s & ~prev).bit_length() - 1)
                s = prev
            prefix.reverse()
            return prefix + [v for v in range(n) if v not in prefix]
        nxt = []
        for s in layer:
            for v in range(n):
                if (s >> v) & 1:
                    continue
                t = s | 1 << v
                if t in parent:
                    continue
                if _q(nbr, s, v) <= k:
                    parent[t] = s
                    nxt.append(t)
        layer = nxt
        size += 1
    return None


def treewidth(g: Multigraph, vertex_cap: int = 20) -> TreewidthResult:
    if g.n > vertex_cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {vertex_cap}")
    if g.n == 1:
        return TreewidthResult(0, (0,))
    best_order = min(
        (_greedy_order(g, fill) for fill in (True, False)),
        key=lambda o: width_of_order(g, o),
    )
    ub = width_of_order(g, best_order)
    lb = minor_min_width(g)
    for k in range(lb, ub):
        found = _decide(g, k)
        if found is not None:
            return TreewidthResult(width_of_order(g, found), tuple(found))
    return TreewidthResult(ub, tuple(best_order))


def treewidth_dp(g: Multigraph, vertex_cap: int = 16) -> int:
    """The plain subset recurrence over all ``2^n`` prefixes (cross-check route)."""
    if g.n > vertex_cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {vertex_cap}")
    n = g.n
    nbr = [g.neighbor_mask(v) for v in range(n)]
    f = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = n
        for v in members(s):
            rest = s & ~(1 << v)
            best = min(best, max(f[rest], _q(nbr, rest, v)))
        f[s] = best
    return f[(1 << n) - 1]
