"""
Multigraphs, cuts and max-flow
==============================

Graphs are loopless, connected and may carry parallel edges.  Vertices are
the integers ``0..n-1``; vertex sets come back as frozensets.
"""

from scramblekit import families
from scramblekit.multigraph import (
    build,
    canonical_form,
    contract_edge,
    edge_cut,
    min_cut_between,
    ply,
    subdivide_edge,
)

# A bundle of three parallel edges is the smallest interesting multigraph.
bundle = build(2, [(0, 1, 3)])
print(bundle, "edges:", bundle.num_edges)

# Repeated pairs accumulate, so this is the same path with every edge tripled.
g3 = build(3, [(0, 1, 2), (0, 1, 1), (1, 2, 3)])
print("plied path?", g3 == families.plied_path(3))

# The cut of a set counts crossing edges with multiplicity.
wheel = families.fig2_wheel()
print("edges leaving the hub:", edge_cut(wheel, {families.FIG2_HUB}))

# min_cut_between runs max-flow between two vertex sets and returns a side.
prism = families.stacked_prism(4, 2)
res = min_cut_between(prism, prism.column(0), prism.column(2))
print("column-to-column min cut:", res.value, "side", sorted(res.side))

# Contracting the marked edge of the Figure 1 graph gives the 6-spoke wheel.
g1 = families.fig1_graph()
minor, mapping = contract_edge(g1, *families.FIG1_E)
print("contraction is the wheel:", canonical_form(minor) == canonical_form(wheel))
print("old -> new ids:", mapping)

# Subdividing and plying are also available; both keep the graph connected.
print(subdivide_edge(families.path(2), 0, 1))
print(ply(families.cycle(3), 2))
