"""
Graph families
==============

Products carry their factor sizes, so rows and columns can be addressed.
"""

from scramblekit import families as F

y = F.stacked_prism(4, 2)  # C_4 x P_2
print("Y_4,2:", y.n, "vertices,", y.num_edges, "edges")
print("columns:", [sorted(y.column(v)) for v in range(4)])
print("row 0:", sorted(y.row(0)))

t = F.torus(4, 4)
print("T_4,4 degrees:", {t.degree(v) for v in t.vertices})

# A chain of k-1 loops; its first Betti number counts the loops.
for k in range(2, 6):
    c = F.chain_of_loops(k)
    print(f"chain_of_loops({k}): n={c.n}, loops={c.betti_number()}")

# Seeded random multigraphs are reproducible.
a = F.random_connected_multigraph(6, 0.4, 3, seed=11)
b = F.random_connected_multigraph(6, 0.4, 3, seed=11)
print("same seed, same graph:", a == b)
print(a.edges())

# Every family is reachable by name, which is what the command line uses.
print(F.generate(F.FamilySpec("grid", (2, 3), None)))
