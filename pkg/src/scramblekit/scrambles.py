"""Scrambles, their order, and searches for the scramble number.

The order of a scramble is the minimum of two numbers:

* the hitting number, the fewest vertices meeting every egg;
* the cut number, the fewest edges in a cut that has a whole egg on each
  side (infinite when no two eggs are disjoint).

The cut number is computed as a minimum of max-flow values over disjoint
egg pairs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParam,
    InvalidScramble,
    NoColumnMetadata,
    NotASubdivision,
    NotASubgraph,
    TooLarge,
)
from .families import FIG2_EGGS, fig2_wheel
from .multigraph import (
    Multigraph,
    _component_mask,
    _cut_mask,
    _min_cut_masks,
    as_set,
    components,
    mask_of,
    members,
    popcount,
    subdivide_edge,
)


class Scramble:
    """A nonempty family of distinct connected vertex sets on one graph."""

    __slots__ = ("graph", "eggs", "masks")

    def __init__(self, graph: Multigraph, eggs: Iterable[Iterable[int]]):
        masks: list[int] = []
        for egg in eggs:
            m = mask_of(egg)
            if m == 0:
                raise InvalidScramble("eggs must be nonempty")
            if m & ~graph.full_mask:
                raise InvalidScramble(f"egg {sorted(as_set(m))} leaves the vertex range")
            if _component_mask(graph, m & -m, m) != m:
                raise InvalidScramble(f"egg {sorted(as_set(m))} is not connected")
            if m not in masks:
                masks.append(m)
        if not masks:
            raise InvalidScramble("a scramble needs at least one egg")
        self.graph = graph
        self.masks = tuple(masks)
        self.eggs = tuple(as_set(m) for m in masks)

    @classmethod
    def _from_masks(cls, graph: Multigraph, masks: Iterable[int]) -> "Scramble":
        return cls(graph, (members(m) for m in masks))

    def __len__(self):
        return len(self.masks)

    def __repr__(self):
        return f"Scramble({[sorted(e) for e in self.eggs]})"


@dataclass(frozen=True)
class OrderCertificate:
    order: int
    hitting_number: int
    hitting_set: frozenset[int]
    cut_number: float  # int, or math.inf
    cut_pair: Optional[tuple[frozenset[int], frozenset[int]]] = None
    cut_side: Optional[frozenset[int]] = None

    def verify(self, scramble: Scramble) -> None:
        """Re-check every witness from scratch; raises ``AssertionError`` on failure."""
        g = scramble.graph
        hs = mask_of(self.hitting_set)
        assert popcount(hs) == self.hitting_number
        assert all(m & hs for m in scramble.masks), "hitting set misses an egg"
        if self.cut_number == math.inf:
            assert self.cut_pair is None
            assert all(a & b for a, b in combinations(scramble.masks, 2))
        else:
            a, b = (mask_of(e) for e in self.cut_pair)
            side = mask_of(self.cut_side)
            assert a in scramble.masks and b in scramble.masks
            assert a & ~side == 0 and b & side == 0, "cut side does not separate the pair"
            assert _cut_mask(g, side) == self.cut_number
        assert self.order == min(self.hitting_number, self.cut_number)


@dataclass(frozen=True)
class SnSearchResult:
    value: int
    best_scramble: Scramble
    exhaustive: bool
    certificate: Optional[OrderCertificate] = None
    strategy: str = ""


# ---------------------------------------------------------------- hitting sets


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    # a set containing another egg is hit whenever the smaller one is
    ordered = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _disjoint_packing(masks: list[int]) -> int:
    used = 0
    count = 0
    for m in masks:  # already sorted small-first
        if not m & used:
            used |= m
            count += 1
    return count


def _greedy_hitting(masks: list[int], n: int) -> int:
    chosen = 0
    left = list(masks)
    while left:
        best_v, best_hits = -1, -1
        for v in range(n):
            hits = sum(1 for m in left if (m >> v) & 1)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        left = [m for m in left if not (m >> best_v) & 1]
    return chosen


def _min_hitting_mask(masks: Sequence[int], n: int) -> int:
    eggs = _minimal_masks(masks)
    best = [_greedy_hitting(eggs, n)]
    best_size = [popcount(best[0])]

    def search(chosen: int, size: int, left: list[int]) -> None:
        if not left:
            if size < best_size[0]:
                best[0], best_size[0] = chosen, size
            return
        if size + _disjoint_packing(left) >= best_size[0]:
            return
        branch = left[0]  # smallest uncovered egg, ties by mask
        for v in members(branch):
            bit = 1 << v
            search(chosen | bit, size + 1, [m for m in left if not m & bit])

    search(0, 0, eggs)
    return best[0]


def hitting_number(scramble: Scramble) -> tuple[int, frozenset[int]]:
    """Exact minimum hitting set by branch and bound."""
    hs = _min_hitting_mask(scramble.masks, scramble.graph.n)
    return popcount(hs), as_set(hs)


# ---------------------------------------------------------------- cuts


def _cut_number_masks(g: Multigraph, masks: Sequence[int], cache=None):
    best = math.inf
    witness = None
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b:
                continue
            key = (a, b)
            if cache is not None and key in cache:
                value, side = cache[key]
            else:
                value, side = _min_cut_masks(g, a, b)
                if cache is not None:
                    cache[key] = (value, side)
            if value < best:
                best, witness = value, (a, b, side)
    return best, witness


def cut_number(scramble: Scramble):
    """``(value, witness)``; ``value`` is ``math.inf`` when all eggs meet.

    ``witness`` is ``(egg, other_egg, side)`` with ``egg <= side`` and
    ``other_egg`` outside it, or ``None``.
    """
    value, w = _cut_number_masks(scramble.graph, scramble.masks)
    if w is None:
        return value, None
    a, b, side = w
    return value, (as_set(a), as_set(b), as_set(side))


def scramble_order(scramble: Scramble) -> OrderCertificate:
    h, hs = hitting_number(scramble)
    c, w = cut_number(scramble)
    if w is None:
        return OrderCertificate(h, h, hs, math.inf)
    return OrderCertificate(min(h, c), h, hs, c, (w[0], w[1]), w[2])


def _order_value(g: Multigraph, masks: Sequence[int], cache=None) -> int:
    h = popcount(_min_hitting_mask(masks, g.n))
    c, _ = _cut_number_masks(g, masks, cache)
    return int(min(h, c))


# ---------------------------------------------------------------- constructions


def singleton_scramble(g: Multigraph) -> Scramble:
    return Scramble(g, ([v] for v in g.vertices))


def whole_scramble(g: Multigraph) -> Scramble:
    return Scramble(g, [g.vertices])


def columns_scramble(g: Multigraph) -> Scramble:
    """The columns ``C_v`` of a Cartesian product."""
    if g.factors is None:
        raise NoColumnMetadata("columns need a graph built by cartesian_product")
    return Scramble(g, (g.column(v) for v in range(g.factors[0])))


def punctured_columns_scramble(g: Multigraph) -> Scramble:
    """``C_v`` minus one vertex, for every vertex of the product."""
    if g.factors is None:
        raise NoColumnMetadata("columns need a graph built by cartesian_product")
    n1, n2 = g.factors
    if n2 < 2:
        raise BadParam("punctured columns need columns of size >= 2")
    eggs = []
    for v in range(n1):
        col = g.column(v)
        eggs += [col - {x} for x in sorted(col)]
    return Scramble(g, eggs)


def fig2_scramble() -> Scramble:
    return Scramble(fig2_wheel(), FIG2_EGGS)


# ---------------------------------------------------------------- predicates


def is_strict_bramble(scramble: Scramble) -> bool:
    return all(a & b for a, b in combinations(scramble.masks, 2))


def is_bramble(scramble: Scramble) -> bool:
    g = scramble.graph
    for a, b in combinations(scramble.masks, 2):
        u = a | b
        if _component_mask(g, a, u) != u:
            return False
    return True


# ---------------------------------------------------------------- transports


def subgraph_transport(
    scramble: Scramble, g: Multigraph, mapping: Optional[Sequence[int]] = None
) -> Scramble:
    """Reinterpret a scramble on a subgraph inside the larger graph ``g``.

    ``mapping[u]`` is the vertex of ``g`` playing the role of ``u``; the
    identity when omitted.
    """
    sub = scramble.graph
    if mapping is None:
        mapping = list(range(sub.n))
    if len(mapping) != sub.n or len(set(mapping)) != sub.n:
        raise NotASubgraph("vertex map must be injective on the subgraph")
    if any(not 0 <= x < g.n for x in mapping):
        raise NotASubgraph("vertex map leaves the host graph")
    for a, b, m in sub.edges():
        if g.mult(mapping[a], mapping[b]) < m:
            raise NotASubgraph(f"edge ({a}, {b}) x{m} is not present in the host")
    return Scramble(g, ([mapping[u] for u in egg] for egg in scramble.eggs))


def subdivision_transport(scramble: Scramble, g_sub: Multigraph, v: int, w: int) -> Scramble:
    """Carry a scramble across the subdivision of edge ``vw``: eggs through ``v`` gain the new vertex."""
    g = scramble.graph
    if g_sub != subdivide_edge(g, v, w):
        raise NotASubdivision(f"graph is not the subdivision of ({v}, {w})")
    u = g.n
    return Scramble(g_sub, (egg | {u} if v in egg else egg for egg in scramble.eggs))


def subdivision_restrict(scramble: Scramble, g: Multigraph, v: int, w: int) -> Scramble:
    """Inverse direction: drop the subdivision vertex from every egg.

    The egg ``{u}`` on its own has no image and is rejected.
    """
    g_sub = scramble.graph
    if g_sub != subdivide_edge(g, v, w):
        raise NotASubdivision(f"scramble graph is not the subdivision of ({v}, {w})")
    u = g.n
    if frozenset({u}) in scramble.eggs:
        raise InvalidScramble("the lone subdivision vertex cannot be restricted")
    return Scramble(g, (egg - {u} for egg in scramble.eggs))


# ---------------------------------------------------------------- searching
#
# Deciding sn(G) >= k.  Suppose a scramble S has order >= k.  For every set
# C of k-1 vertices some egg E_C misses C, and being connected it lies in a
# component K_C of G - C.  The family {K_C} again has order >= k:
#   * it is not hit by any C of size k-1, because K_C avoids C;
#   * if A contains K_C and avoids K_C', it contains E_C and avoids E_C',
#     so |E(A, A^c)| >= k.
# Hence sn(G) >= k iff one can choose a component of G - C for every C so
# that any two disjoint choices are joined by >= k edge-disjoint paths.
# If the options for C contain all options of C', C can copy the choice
# made for C', and dropping values from a compatible family keeps it
# compatible, so only inclusion-minimal option sets need a decision.


class _Budget(Exception):
    pass


def _component_choice(g: Multigraph, k: int, node_budget: Optional[int] = None):
    """Masks of a scramble of order >= k, ``None`` if none exists.

    Raises ``_Budget`` when ``node_budget`` search nodes do not settle it.
    """
    n = g.n
    full = g.full_mask
    if k <= 1:
        return [full]
    if k - 1 >= n:
        return None
    option_sets = set()
    for c in combinations(range(n), k - 1):
        option_sets.add(frozenset(components(g, full & ~mask_of(c))))
    minimal: list[frozenset[int]] = []
    for opts in sorted(option_sets, key=len):
        if not any(m <= opts for m in minimal):
            minimal.append(opts)

    flow_cache: dict[tuple[int, int], bool] = {}

    def compatible(a: int, b: int) -> bool:
        if a & b:
            return True
        key = (a, b) if a < b else (b, a)
        if key not in flow_cache:
            flow_cache[key] = _min_cut_masks(g, key[0], key[1])[0] >= k
        return flow_cache[key]

    pending = [sorted(opts, key=lambda m: (-popcount(m), m)) for opts in minimal]
    stack = [([], pending)]
    nodes = 0
    while stack:
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _Budget
        chosen, pending = stack.pop()
        live = []
        for opts in pending:
            if any(x in chosen for x in opts):
                continue
            ok = [x for x in opts if all(compatible(x, y) for y in chosen)]
            if not ok:
                break
            live.append(ok)
        else:
            if not live:
                return chosen
            live.sort(key=len)
            for x in reversed(live[0]):
                stack.append((chosen + [x], live[1:]))
    return None


def sn_exact(g: Multigraph, vertex_cap: int = 6) -> SnSearchResult:
    """Exact scramble number by deciding ``sn >= k`` for k = 2, 3, ... ."""
    if g.n < 2:
        raise BadParam("scramble number needs at least two vertices")
    if g.n > vertex_cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {vertex_cap}")
    best = [g.full_mask]
    k = 2
    while True:
        found = _component_choice(g, k)
        if found is None:
            break
        best = found
        k += 1
    s = Scramble._from_masks(g, best)
    cert = scramble_order(s)
    assert cert.order == k - 1, (cert.order, k - 1)
    return SnSearchResult(cert.order, s, True, cert, "component-choice")


STRATEGIES = ("whole", "singletons", "columns", "punctured", "figure", "components", "local")


def _local_search(g: Multigraph, start: list[int], value: int, rng: random.Random, budget: int, cache):
    current, cur = list(start), value
    evals = 0
    while evals < budget:
        moves = []
        for i, e in enumerate(current):
            border = 0
            for x in members(e):
                border |= g.neighbor_mask(x)
            for x in members(border & ~e):
                moves.append(current[:i] + [e | 1 << x] + current[i + 1:])
            if len(current) > 1:
                moves.append(current[:i] + current[i + 1:])
        for i, j in combinations(range(len(current)), 2):
            u = current[i] | current[j]
            if _component_mask(g, current[i], u) == u:
                rest = [m for t, m in enumerate(current) if t not in (i, j)]
                moves.append(rest + [u])
        for x in range(g.n):
            if (1 << x) not in current:
                moves.append(current + [1 << x])
        rng.shuffle(moves)
        improved = False
        for masks in moves:
            if evals >= budget:
                break
            evals += 1
            val = _order_value(g, _minimal_masks(masks), cache)
            if val > cur:
                current, cur, improved = _minimal_masks(masks), val, True
                break
        if not improved:
            break
    return current, cur


def sn_lower_bound(
    g: Multigraph,
    strategies: Optional[Iterable[str]] = None,
    seed: int = 0,
    local_budget: int = 200,
    choice_budget: int = 500,
) -> SnSearchResult:
    """Best scramble order found by a portfolio of constructions.

    ``components`` runs the exact component-choice decision for increasing
    k while the number of (k-1)-subsets stays within ``choice_budget``;
    ``local`` hill-climbs from the best scramble so far.
    """
    if g.n < 2:
        raise BadParam("scramble number needs at least two vertices")
    chosen = STRATEGIES if strategies is None else tuple(strategies)
    unknown = set(chosen) - set(STRATEGIES)
    if unknown:
        raise BadParam(f"unknown strategies {sorted(unknown)}")
    cache: dict = {}
    best_masks, best_val, best_name = [g.full_mask], 1, "whole"

    def offer(masks, name):
        nonlocal best_masks, best_val, best_name
        val = _order_value(g, masks, cache)
        if val > best_val:
            best_masks, best_val, best_name = list(masks), val, name

    if "singletons" in chosen:
        offer([1 << v for v in range(g.n)], "singletons")
    if g.factors is not None:
        if "columns" in chosen:
            offer(list(columns_scramble(g).masks), "columns")
        if "punctured" in chosen and g.factors[1] >= 2:
            try:
                offer(list(punctured_columns_scramble(g).masks), "punctured")
            except InvalidScramble:
                pass  # a punctured path column falls apart
    if "figure" in chosen and g == fig2_wheel():
        offer([mask_of(e) for e in FIG2_EGGS], "figure")
    if "components" in chosen:
        k = best_val + 1
        while k - 1 < g.n and math.comb(g.n, k - 1) <= choice_budget:
            try:
                found = _component_choice(g, k, node_budget=5000)
            except _Budget:
                break
            if found is None:
                break
            offer(found, "components")
            k = max(k, best_val) + 1
    if "local" in chosen and local_budget > 0:
        rng = random.Random(seed)
        masks, val = _local_search(g, best_masks, best_val, rng, local_budget, cache)
        if val > best_val:
            best_masks, best_val, best_name = masks, val, "local"
    s = Scramble._from_masks(g, best_masks)
    cert = scramble_order(s)
    return SnSearchResult(cert.order, s, False, cert, best_name)
