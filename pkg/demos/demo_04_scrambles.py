"""
Scrambles and their order
=========================

The order of a scramble is the smaller of its hitting number and its cut
number.  Both come with witnesses that can be re-checked.
"""

from scramblekit import families as F
from scramblekit import scrambles as S

s = S.fig2_scramble()
cert = S.scramble_order(s)
print(s)
print("order", cert.order, "| hitting set", sorted(cert.hitting_set))
a, b = cert.cut_pair
print("tightest pair", sorted(a), sorted(b), "cut", cert.cut_number, "side", sorted(cert.cut_side))
cert.verify(s)  # raises if any witness is wrong

# All eggs overlapping: no cut can separate two of them.
print(S.scramble_order(S.whole_scramble(F.path(3))))

# Named constructions on products.
print("Y_4,2 columns:", S.scramble_order(S.columns_scramble(F.stacked_prism(4, 2))).order)
print("T_3,3 punctured columns:", S.scramble_order(S.punctured_columns_scramble(F.torus(3, 3))).order)
print("plied path singletons:", S.scramble_order(S.singleton_scramble(F.plied_path(3))).order)

# Lower bounds from a portfolio of constructions, and the exact value on small graphs.
for name, g in [("fig2 wheel", F.fig2_wheel()), ("T_3,3", F.torus(3, 3)), ("fig1", F.fig1_graph())]:
    lo = S.sn_lower_bound(g)
    print(f"{name}: sn >= {lo.value} via {lo.strategy}")
print("exact sn(fig1):", S.sn_exact(F.fig1_graph(), vertex_cap=8).value)

# Carrying a scramble across an edge subdivision keeps its order.
left, right = F.fig4_left(), F.fig4_right()
v, w = F.FIG4_SUBDIVIDED
single = S.singleton_scramble(left)
moved = S.subdivision_transport(single, right, v, w)
print(S.scramble_order(single).order, "->", S.scramble_order(moved).order, moved)
