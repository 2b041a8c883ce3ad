"""
Chip-firing, reduced divisors and gonality
==========================================

A divisor is a tuple of chip counts.  Firing a set sends one chip along
every edge leaving it.
"""

from scramblekit import divisors as D
from scramblekit import families as F

c4 = F.cycle(4)
d = (2, 0, 0, 0)
print("fire {0}:", D.fire_set(c4, d, {0}))

# reduce() runs the burning algorithm and reports the sets it fired.
red, script = D.reduce(c4, d, 2)
print("2-reduced form:", red, "script:", [sorted(a) for a in script])
print("replay reproduces it:", D.replay(c4, d, script) == red)

# Positive rank: every vertex can be reached with a chip.
print("2*v0 on C_4 has positive rank:", D.has_positive_rank(c4, d))
print("v0 alone:", D.has_positive_rank(c4, (1, 0, 0, 0)))

# Gonality is the least degree of a positive-rank divisor.
for name, g in [("grid 3x3", F.grid(3, 3)), ("Y_4,2", F.stacked_prism(4, 2)), ("fig1", F.fig1_graph())]:
    res = D.gonality(g)
    print(f"gon({name}) = {res.gonality}, witness {res.witness}")

# Equivalence compares canonical reduced forms; divisors may have debt.
print(D.equivalent(c4, (2, 0, 0, 0), (0, 0, 2, 0)), D.equivalent(c4, (1, 0, 0, 0), (0, 1, 0, 0)))
in_debt = D.fire_set(c4, (1, 0, 1, 0), {1})
print(in_debt, "is equivalent to (1, 0, 1, 0):", D.equivalent(c4, in_debt, (1, 0, 1, 0)))
