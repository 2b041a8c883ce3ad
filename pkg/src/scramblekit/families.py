"""Generators for the named graph families and the small figure graphs.

Every generator is deterministic; the random ones take an explicit seed.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import BadParam, Disconnected
from .multigraph import Multigraph, build, cartesian_product, subdivide_edge


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParam(msg)


def path(n: int) -> Multigraph:
    _need(n >= 1, "path needs n >= 1")
    return build(n, [(i, i + 1, 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    """``C_n``; ``n = 2`` gives two parallel edges."""
    _need(n >= 2, "cycle needs n >= 2")
    return build(n, [(i, (i + 1) % n, 1) for i in range(n)])


def random_tree(n: int, seed: int = 0) -> Multigraph:
    """Uniform labelled tree drawn through a random Prüfer sequence."""
    _need(n >= 1, "tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x, 1))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v, 1))
    return build(n, edges)


def grid(m: int, n: int) -> Multigraph:
    _need(m >= 1 and n >= 1, "grid needs m, n >= 1")
    return cartesian_product(path(m), path(n))


def stacked_prism(m: int, n: int) -> Multigraph:
    """``Y_{m,n} = C_m □ P_n``; columns are the copies of the path."""
    _need(m >= 2 and n >= 1, "stacked prism needs m >= 2, n >= 1")
    return cartesian_product(cycle(m), path(n))


def torus(m: int, n: int) -> Multigraph:
    """``T_{m,n} = C_m □ C_n``."""
    _need(m >= 2 and n >= 2, "torus needs m, n >= 2")
    return cartesian_product(cycle(m), cycle(n))


def plied_path(k: int) -> Multigraph:
    """Path on ``k`` vertices with every edge replaced by ``k`` parallel copies."""
    _need(k >= 2, "plied path needs k >= 2")
    return build(k, [(i, i + 1, k) for i in range(k - 1)])


def chain_of_loops(k: int) -> Multigraph:
    """Doubled ``P_k`` with one copy of each doubled edge subdivided ``k - 1`` times.

    Path vertices keep ids ``0..k-1``; the subdivision vertices of loop ``i``
    are ``k + i*(k-1) .. k + (i+1)*(k-1) - 1`` in order from ``i`` to ``i+1``.
    """
    _need(k >= 2, "chain of loops needs k >= 2")
    edges = []
    nxt = k
    for i in range(k - 1):
        edges.append((i, i + 1, 1))
        chain = [i] + list(range(nxt, nxt + k - 1)) + [i + 1]
        nxt += k - 1
        edges += [(a, b, 1) for a, b in zip(chain, chain[1:])]
    return build(nxt, edges)


# ---------------------------------------------------------------- figures
#
# Figure 1 drawing coordinates -> ids:
#   v=(0,1)->0  (1,0)->1  (1,1)->2  (1,2)->3  (2,0)->4  (2,1)->5  (2,2)->6  (3,1)->7
FIG1_V = 0
FIG1_E = (2, 5)
_FIG1_EDGES = [
    (0, 1), (0, 2), (0, 3),  # v to the left column
    (1, 2), (2, 3),          # left column
    (1, 4), (3, 6),          # horizontals top/bottom
    (2, 5),                  # the marked edge e
    (4, 5), (5, 6),          # right column
    (4, 7), (5, 7), (6, 7),  # to (3,1)
]

# Wheel after contracting e: hub keeps id 2, (2,0)->4, (2,2)->5, (3,1)->6.
FIG2_HUB = 2
_FIG2_RIM = [0, 1, 4, 6, 5, 3]  # hexagon in cyclic order
FIG2_EGGS = [
    frozenset({0, 3}),  # Y: (0,1), (1,2)
    frozenset({1, 4}),  # B: (1,0), (2,0)
    frozenset({5, 6}),  # G: (2,2), (3,1)
    frozenset({2}),     # R: hub
]

# Figure 4 left: (0,1)->0 (1,0)->1 (1,2)->2 (2,0)->3 (2,2)->4 (3,1)->5.
# The segments through (1,1) and (2,1) are single edges 1-2 and 3-4.
_FIG4_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
FIG4_SUBDIVIDED = (1, 3)  # bottom edge; new vertex (5.5,0) gets id 6


def fig1_graph() -> Multigraph:
    return build(8, _FIG1_EDGES)


def fig2_wheel() -> Multigraph:
    rim = _FIG2_RIM
    edges = [(rim[i], rim[(i + 1) % 6]) for i in range(6)]
    edges += [(FIG2_HUB, r) for r in rim]
    return build(7, edges)


def fig4_left() -> Multigraph:
    return build(6, _FIG4_EDGES)


def fig4_right() -> Multigraph:
    return subdivide_edge(fig4_left(), *FIG4_SUBDIVIDED)


# ---------------------------------------------------------------- random


def random_connected_multigraph(
    n: int, edge_prob: float, max_mult: int = 1, seed: int = 0
) -> Multigraph:
    """Erdős–Rényi skeleton with uniform multiplicities, resampled until connected."""
    _need(n >= 2, "need n >= 2")
    _need(0 < edge_prob <= 1, "edge_prob must be in (0, 1]")
    _need(max_mult >= 1, "max_mult must be >= 1")
    rng = random.Random(seed)
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < edge_prob:
                    edges.append((u, v, rng.randint(1, max_mult)))
        try:
            return build(n, edges)
        except Disconnected:
            continue


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = field(default_factory=tuple)
    seed: Optional[int] = None


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "tree": (random_tree, 1),
    "grid": (grid, 2),
    "prism": (stacked_prism, 2),
    "torus": (torus, 2),
    "plied": (plied_path, 1),
    "chain": (chain_of_loops, 1),
    "fig1": (fig1_graph, 0),
    "fig2": (fig2_wheel, 0),
    "fig4-left": (fig4_left, 0),
    "fig4-right": (fig4_right, 0),
    "random": (random_connected_multigraph, 3),  # n, edge_prob, max_mult
}


def generate(spec: FamilySpec) -> Multigraph:
    if spec.name not in FAMILIES:
        raise BadParam(f"unknown family {spec.name!r}")
    fn, arity = FAMILIES[spec.name]
    if len(spec.params) != arity:
        raise BadParam(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    seed = 0 if spec.seed is None else spec.seed
    if spec.name == "tree":
        return fn(*spec.params, seed=seed)
    if spec.name == "random":
        return fn(*spec.params, seed=seed)
    return fn(*spec.params)
