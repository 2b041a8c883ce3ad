"""Loopless connected multigraphs on dense integer vertex ids.

Vertex sets cross the public API as ``frozenset`` objects (any iterable of
ints is accepted on input).  Internally they are Python ints used as
bitmasks, which keeps the exhaustive routines in the other modules cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadParam,
    Disconnected,
    EmptyGraph,
    EmptySet,
    EmptySide,
    LoopEdge,
    NoColumnMetadata,
    NotAnEdge,
    TerminalsOverlap,
    ZeroFactor,
)


# ---------------------------------------------------------------- bitmasks


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def as_set(mask: int) -> frozenset[int]:
    return frozenset(members(mask))


# ---------------------------------------------------------------- the type


class Multigraph:
    """Immutable loopless connected multigraph.

    ``factors`` is set only on graphs built as a Cartesian product; it holds
    the vertex counts of the two factors and enables :meth:`column` and
    :meth:`row`.
    """

    __slots__ = ("n", "factors", "_adj", "_nbr", "_deg", "_edges")

    def __init__(self, n: int, mult: dict[tuple[int, int], int], factors=None):
        # private: use build(); mult holds u < v keys with positive values
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for (u, v), m in mult.items():
            adj[u][v] = m
            adj[v][u] = m
        self.n = n
        self.factors = factors
        self._adj = tuple(tuple(sorted(a.items())) for a in adj)
        self._nbr = tuple(mask_of(a) for a in adj)
        self._deg = tuple(sum(a.values()) for a in adj)
        self._edges = tuple(sorted((u, v, m) for (u, v), m in mult.items()))

    # basic queries
    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(m for _, _, m in self._edges)

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Edge bundles ``(u, v, mult)`` with ``u < v``, sorted."""
        return self._edges

    def mult(self, u: int, v: int) -> int:
        for w, m in self._adj[u]:
            if w == v:
                return m
        return 0

    def neighbors(self, u: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, multiplicity)`` pairs of ``u``."""
        return self._adj[u]

    def neighbor_mask(self, u: int) -> int:
        return self._nbr[u]

    def degree(self, u: int) -> int:
        return self._deg[u]

    def betti_number(self) -> int:
        return self.num_edges - self.n + 1

    # product metadata
    def column(self, v: int) -> frozenset[int]:
        """Fibre ``{(v, w) : w}`` of a Cartesian product, as vertex ids."""
        if self.factors is None:
            raise NoColumnMetadata("graph was not built as a Cartesian product")
        n1, n2 = self.factors
        if not 0 <= v < n1:
            raise BadParam(f"column index {v} out of range")
        return frozenset(v * n2 + w for w in range(n2))

    def row(self, w: int) -> frozenset[int]:
        if self.factors is None:
            raise NoColumnMetadata("graph was not built as a Cartesian product")
        n1, n2 = self.factors
        if not 0 <= w < n2:
            raise BadParam(f"row index {w} out of range")
        return frozenset(v * n2 + w for v in range(n1))

    # value semantics (metadata is not part of identity)
    def _key(self):
        return (self.n, self._edges)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class CutResult:
    value: int
    side: frozenset[int]


# ---------------------------------------------------------------- building


def build(n: int, edges: Iterable[Sequence[int]], factors=None) -> Multigraph:
    """Build a multigraph from ``(u, v, mult)`` triples.

    Repeated pairs accumulate.  A triple may omit ``mult`` (taken as 1).
    """
    if n <= 0:
        raise EmptyGraph("a graph needs at least one vertex")
    mult: dict[tuple[int, int], int] = {}
    for e in edges:
        u, v = int(e[0]), int(e[1])
        m = int(e[2]) if len(e) > 2 else 1
        if not (0 <= u < n and 0 <= v < n):
            raise BadParam(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if m < 1:
            raise BadParam(f"edge ({u}, {v}) has multiplicity {m}")
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + m
    g = Multigraph(n, mult, factors)
    if _component_mask(g, 1, g.full_mask) != g.full_mask:
        raise Disconnected("graph is not connected")
    return g


def _component_mask(g: Multigraph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from the mask ``start`` inside ``within``."""
    seen = start & within
    frontier = seen
    nbr = g._nbr
    while frontier:
        nxt = 0
        for u in members(frontier):
            nxt |= nbr[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Multigraph, within: int) -> list[int]:
    """Connected components of the subgraph induced on the mask ``within``."""
    out = []
    rest = within
    while rest:
        low = rest & -rest
        comp = _component_mask(g, low, within)
        out.append(comp)
        rest &= ~comp
    return out


def _cut_mask(g: Multigraph, a: int) -> int:
    total = 0
    for u in members(a):
        for v, m in g._adj[u]:
            if not (a >> v) & 1:
                total += m
    return total


def edge_cut(g: Multigraph, a: Iterable[int]) -> int:
    """Number of edges (with multiplicity) between ``a`` and its complement."""
    am = mask_of(a)
    if am == 0 or am == g.full_mask:
        raise EmptySide("cut side must be a proper nonempty subset")
    return _cut_mask(g, am)


def is_connected_subset(g: Multigraph, b: Iterable[int]) -> bool:
    bm = mask_of(b)
    if bm == 0:
        raise EmptySet("connectivity of the empty set is undefined")
    return _component_mask(g, bm & -bm, bm) == bm


# ---------------------------------------------------------------- max-flow


def _min_cut_masks(g: Multigraph, s: int, t: int) -> tuple[int, int]:
    """Max-flow/min-cut between vertex masks ``s`` and ``t``.

    Multiplicities are capacities.  Returns ``(value, side)`` where ``side``
    is the set reachable from ``s`` in the final residual graph, which is the
    inclusion-minimal minimum cut side.
    """
    n = g.n
    residual = [dict(a) for a in g._adj]
    value = 0
    while True:
        parent = [-1] * n
        seen = s
        queue = deque(members(s))
        hit = -1
        while queue and hit < 0:
            u = queue.popleft()
            for v, cap in residual[u].items():
                if cap > 0 and not (seen >> v) & 1:
                    seen |= 1 << v
                    parent[v] = u
                    if (t >> v) & 1:
                        hit = v
                        break
                    queue.append(v)
        if hit < 0:
            return value, seen
        # bottleneck along the path back to the source set
        bottleneck = None
        v = hit
        while not (s >> v) & 1:
            u = parent[v]
            c = residual[u][v]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = hit
        while not (s >> v) & 1:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] += bottleneck
            v = u
        value += bottleneck


def min_cut_between(g: Multigraph, s: Iterable[int], t: Iterable[int]) -> CutResult:
    """Minimum ``|E(A, A^c)|`` over ``A`` with ``s <= A`` and ``t`` disjoint from ``A``."""
    sm, tm = mask_of(s), mask_of(t)
    if sm == 0 or tm == 0:
        raise EmptySet("terminal sets must be nonempty")
    if sm & tm:
        raise TerminalsOverlap("source and sink terminals intersect")
    value, side = _min_cut_masks(g, sm, tm)
    return CutResult(value, as_set(side))


# ---------------------------------------------------------------- edits


def _require_edge(g: Multigraph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or g.mult(u, v) == 0:
        raise NotAnEdge(f"({u}, {v}) is not an edge")


def contract_edge(g: Multigraph, u: int, v: int) -> tuple[Multigraph, list[int]]:
    """Contract the bundle between ``u`` and ``v``.

    Returns the new graph and ``mapping`` with ``mapping[old] = new``.  The
    merged vertex takes id ``min(u, v)``; the bundle itself disappears.
    """
    _require_edge(g, u, v)
    keep, gone = min(u, v), max(u, v)
    mapping = []
    for x in range(g.n):
        if x == gone:
            mapping.append(keep)
        elif x > gone:
            mapping.append(x - 1)
        else:
            mapping.append(x)
    mult: dict[tuple[int, int], int] = {}
    for a, b, m in g.edges():
        a2, b2 = mapping[a], mapping[b]
        if a2 == b2:
            continue
        key = (a2, b2) if a2 < b2 else (b2, a2)
        mult[key] = mult.get(key, 0) + m
    return build(g.n - 1, [(a, b, m) for (a, b), m in mult.items()]), mapping


def subdivide_edge(g: Multigraph, u: int, v: int) -> Multigraph:
    """Replace one parallel copy of ``uv`` by a path through new vertex ``g.n``."""
    _require_edge(g, u, v)
    w = g.n
    edges = [list(e) for e in g.edges()]
    for e in edges:
        if {e[0], e[1]} == {u, v}:
            e[2] -= 1
    edges = [e for e in edges if e[2] > 0]
    edges += [[u, w, 1], [w, v, 1]]
    return build(g.n + 1, edges)


def ply(g: Multigraph, t: int) -> Multigraph:
    """Multiply every edge multiplicity by ``t``."""
    if t < 1:
        raise ZeroFactor("ply factor must be at least 1")
    return build(g.n, [(a, b, m * t) for a, b, m in g.edges()], g.factors)


def underlying_simple(g: Multigraph) -> Multigraph:
    return build(g.n, [(a, b, 1) for a, b, _ in g.edges()], g.factors)


def cartesian_product(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """``g1 □ g2`` with vertex ``(a, b)`` numbered ``a * g2.n + b``."""
    n1, n2 = g1.n, g2.n
    edges = []
    for a in range(n1):
        for b, b2, m in g2.edges():
            edges.append((a * n2 + b, a * n2 + b2, m))
    for a, a2, m in g1.edges():
        for b in range(n2):
            edges.append((a * n2 + b, a2 * n2 + b, m))
    return build(n1 * n2, edges, factors=(n1, n2))


def canonical_form(g: Multigraph) -> tuple:
    """Isomorphism-invariant key by brute force over permutations (small n only)."""
    from itertools import permutations

    best = None
    for perm in permutations(range(g.n)):
        key = tuple(
            sorted(
                (min(perm[a], perm[b]), max(perm[a], perm[b]), m)
                for a, b, m in g.edges()
            )
        )
        if best is None or key < best:
            best = key
    return (g.n, best)
