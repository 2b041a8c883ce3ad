"""
Exact treewidth
===============

Treewidth ignores parallel edges.  The result carries an elimination order
whose width can be replayed independently.
"""

from scramblekit import families as F
from scramblekit.treewidth import minor_min_width, treewidth, treewidth_dp, width_of_order

for name, g in [
    ("plied path 4", F.plied_path(4)),
    ("Y_4,2", F.stacked_prism(4, 2)),
    ("grid 4x4", F.grid(4, 4)),
    ("T_4,4", F.torus(4, 4)),
    ("fig1", F.fig1_graph()),
]:
    res = treewidth(g)
    print(f"{name}: tw = {res.width}, lower bound {minor_min_width(g)}, order {res.elimination_order}")
    assert width_of_order(g, res.elimination_order) == res.width

# The plain subset recurrence agrees on anything small enough to tabulate.
print("subset DP on fig1:", treewidth_dp(F.fig1_graph()))
