"""
tw <= sn <= gon across families
===============================

compute_invariants runs all three and re-verifies every certificate.
"""

from scramblekit import families as F
from scramblekit import scrambles as S
from scramblekit.report import compute_invariants

cases = [
    ("grid 3x3", F.grid(3, 3)),
    ("Y_4,2", F.stacked_prism(4, 2)),  # treewidth strictly below the other two
    ("T_3,3", F.torus(3, 3)),
    ("fig1", F.fig1_graph()),
    ("fig2 wheel", F.fig2_wheel()),
    ("fig4 left", F.fig4_left()),
    ("fig4 right", F.fig4_right()),  # same sn, larger gonality
]
for name, g in cases:
    rep = compute_invariants(g, sn_exact=g.n <= 8, sn_cap=8)
    print(f"{name:11s} {rep.summary()}")

# A minor with a larger scramble number: contracting one edge of fig1.
print("sn(fig1) =", S.sn_exact(F.fig1_graph(), 8).value,
      "< order of the wheel scramble =", S.scramble_order(S.fig2_scramble()).order)

# Chains of loops keep sn = 2 while gonality grows.
for k in range(2, 6):
    g = F.chain_of_loops(k)
    rep = compute_invariants(g, sn_lower=False, sn_exact=True, sn_cap=g.n, tw_cap=g.n)
    print(f"chain {k}: {rep.summary()}")

# The machine-readable block is stable across runs.
print("\n".join(compute_invariants(F.cycle(5)).machine_lines()))
