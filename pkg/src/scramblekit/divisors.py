"""Chip-firing on multigraphs: reduced divisors, rank-one tests, gonality.

A divisor is any sequence of ints indexed by vertex; functions return
tuples.  Firing scripts are lists of frozensets, replayed with
:func:`replay`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BadParam, BadSet, CapExceeded, GraphMismatch, NotEffective
from .multigraph import Multigraph, as_set, mask_of, members

Divisor = tuple[int, ...]


@dataclass(frozen=True)
class GonalityResult:
    gonality: int
    witness: Divisor


def _check(g: Multigraph, d: Sequence[int], effective: bool = False) -> list[int]:
    if len(d) != g.n:
        raise GraphMismatch(f"divisor has length {len(d)}, graph has {g.n} vertices")
    chips = [int(x) for x in d]
    if effective and min(chips) < 0:
        raise NotEffective("divisor has a vertex in debt")
    return chips


def degree(d: Sequence[int]) -> int:
    return sum(d)


def point(g: Multigraph, v: int, k: int = 1) -> Divisor:
    """The divisor ``k * v``."""
    return tuple(k if u == v else 0 for u in range(g.n))


def _fire_mask(g: Multigraph, chips: list[int], a: int) -> None:
    for u in members(a):
        for w, m in g.neighbors(u):
            if not (a >> w) & 1:
                chips[u] -= m
                chips[w] += m


def fire_set(g: Multigraph, d: Sequence[int], a: Iterable[int]) -> Divisor:
    """Fire every vertex of ``a`` once."""
    chips = _check(g, d)
    am = mask_of(a)
    if am == 0 or am == g.full_mask:
        raise BadSet("fired set must be a proper nonempty subset")
    _fire_mask(g, chips, am)
    return tuple(chips)


def replay(g: Multigraph, d: Sequence[int], script: Iterable[Iterable[int]]) -> Divisor:
    chips = _check(g, d)
    for a in script:
        _fire_mask(g, chips, mask_of(a))
    return tuple(chips)


def _unburnt(g: Multigraph, chips: list[int], v: int) -> int:
    """Dhar's burning from ``v``; returns the mask of vertices left unburnt.

    A vertex catches fire once the burnt edges reaching it outnumber its
    chips.  The chip count at ``v`` itself is never consulted.
    """
    burnt = 1 << v
    heat = [0] * g.n
    stack = [v]
    while stack:
        x = stack.pop()
        for y, m in g.neighbors(x):
            if not (burnt >> y) & 1:
                heat[y] += m
                if heat[y] > chips[y]:
                    burnt |= 1 << y
                    stack.append(y)
    return g.full_mask & ~burnt


def _reduce_in_place(g: Multigraph, chips: list[int], v: int, script=None, stop_at_v=False):
    # chips must be nonnegative away from v; every fired set avoids v and keeps that
    while True:
        if stop_at_v and chips[v] > 0:
            return
        u = _unburnt(g, chips, v)
        if not u:
            return
        # an unburnt set can be fired repeatedly: its vertices only lose chips
        times = None
        for x in members(u):
            out = 0
            for y, m in g.neighbors(x):
                if not (u >> y) & 1:
                    out += m
            if out:
                k = chips[x] // out
                times = k if times is None else min(times, k)
        for x in members(u):
            for y, m in g.neighbors(x):
                if not (u >> y) & 1:
                    chips[x] -= m * times
                    chips[y] += m * times
        if script is not None:
            script.extend([u] * times)


def reduce(g: Multigraph, d: Sequence[int], v: int) -> tuple[Divisor, list[frozenset[int]]]:
    """The ``v``-reduced divisor equivalent to effective ``d``, with a firing script.

    Each scripted set avoids ``v`` and every intermediate divisor is
    effective.
    """
    chips = _check(g, d, effective=True)
    script: list[int] = []
    _reduce_in_place(g, chips, v, script)
    return tuple(chips), [as_set(a) for a in script]


def is_reduced(g: Multigraph, d: Sequence[int], v: int) -> bool:
    chips = _check(g, d, effective=True)
    return _unburnt(g, chips, v) == 0


def has_positive_rank(g: Multigraph, d: Sequence[int]) -> bool:
    """True iff ``d`` is equivalent to an effective divisor containing each vertex."""
    chips = _check(g, d, effective=True)
    return _positive_rank(g, chips)


def _positive_rank(g: Multigraph, chips: list[int], order=None) -> bool:
    # each check starts from the divisor left by the previous one (all are
    # equivalent), so consecutive nearby vertices need little work
    work = list(chips)
    for v in order if order is not None else range(g.n):
        if work[v] > 0:
            continue
        _reduce_in_place(g, work, v, stop_at_v=True)
        if work[v] <= 0:
            return False
    return True


def _far_first_order(g: Multigraph, base: int) -> list[int]:
    # vertices far from the base chip tend to refute a candidate soonest
    dist = [-1] * g.n
    dist[base] = 0
    q = deque([base])
    while q:
        x = q.popleft()
        for y, _ in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return sorted(range(g.n), key=lambda u: (-dist[u], u))


def superstable_levels(g: Multigraph, base: int):
    """Yield, for degree 0, 1, 2, ..., the list of ``base``-reduced divisors with no chip at ``base``.

    Reducedness is closed under removing chips, so each level is grown from
    the previous one by adding a chip in nondecreasing vertex order.  The
    generator stops after the first empty level.
    """
    others = [u for u in range(g.n) if u != base]
    level = [((0,) * g.n, 0)]
    while level:
        yield [chips for chips, _ in level]
        nxt = []
        for chips, start in level:
            for idx in range(start, len(others)):
                work = list(chips)
                work[others[idx]] += 1
                if _unburnt(g, work, base) == 0:
                    nxt.append((tuple(work), idx))
        level = nxt


def gonality(g: Multigraph, max_degree: Optional[int] = None, base: int = 0) -> GonalityResult:
    """Minimum degree of a positive-rank divisor, with the least witness found.

    A positive-rank class has a ``base``-reduced representative with a chip
    on ``base``, so only divisors ``c*base + S`` with ``c >= 1`` and ``S``
    superstable are tried.  Within a degree, candidates are tested in
    lexicographic order of their chip vectors.
    """
    if g.n < 2:
        raise BadParam("gonality needs at least two vertices")
    cap = g.n if max_degree is None else max_degree
    order = _far_first_order(g, base)
    levels = superstable_levels(g, base)
    seen: list[list[Divisor]] = []
    for d in range(1, cap + 1):
        seen.append(next(levels, []))
        candidates = []
        for sdeg, level in enumerate(seen):
            for s in level:
                chips = list(s)
                chips[base] = d - sdeg
                candidates.append(tuple(chips))
        candidates.sort()
        for c in candidates:
            if _positive_rank(g, list(c), order):
                return GonalityResult(d, c)
    raise CapExceeded(f"no positive-rank divisor of degree <= {cap}")


# ---------------------------------------------------------------- equivalence


def _make_effective_off(g: Multigraph, chips: list[int], q: int) -> None:
    """Fire balls around ``q`` until every vertex other than ``q`` is out of debt.

    Firing the ball of radius ``r`` only takes chips from distance ``r`` and
    gives at least one chip to each vertex at distance ``r + 1``, so sweeping
    radii from the outside in fixes one distance layer per step.
    """
    dist = [-1] * g.n
    dist[q] = 0
    dq = deque([q])
    while dq:
        x = dq.popleft()
        for y, _ in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                dq.append(y)
    radius = max(dist)
    for r in range(radius - 1, -1, -1):
        ball = mask_of(u for u in range(g.n) if dist[u] <= r)
        need = 0
        for w in range(g.n):
            if dist[w] == r + 1 and chips[w] < 0:
                inflow = sum(m for y, m in g.neighbors(w) if dist[y] == r)
                need = max(need, (-chips[w] + inflow - 1) // inflow)
        for _ in range(need):
            _fire_mask(g, chips, ball)


def reduced_form(g: Multigraph, d: Sequence[int], q: int = 0) -> Divisor:
    """Canonical ``q``-reduced representative of any divisor (``q`` may end in debt)."""
    chips = _check(g, d)
    _make_effective_off(g, chips, q)
    _reduce_in_place(g, chips, q)
    return tuple(chips)


def equivalent(g: Multigraph, d1: Sequence[int], d2: Sequence[int]) -> bool:
    if len(d1) != g.n or len(d2) != g.n:
        raise GraphMismatch("divisors do not match the graph")
    if sum(d1) != sum(d2):
        return False
    return reduced_form(g, d1) == reduced_form(g, d2)
