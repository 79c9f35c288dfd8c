"""
How often is a random form generic?
===================================

The generic cactus rank of a degree-l binary form is floor((l + 2) / 2). Lower
strata have positive codimension, so a random integer form almost always lands
in the top stratum. Because it does, it also lands in the generic fiber
dimension. The census below samples seeded random forms and tabulates the pair
(cactus rank, fiber dimension).
"""

from apolar.moduli import census

for l in range(2, 9):
    d = l // 3
    table = census(l, d, samples=100, seed=7, coeff_bound=10)
    cells = ", ".join(f"(crank {r}, s {s}): {c}" for r, s, c in table.rows())
    print(f"l = {l}, d = {d}: top stratum {table.top_rank} holds {float(table.top_fraction):.0%}  [{cells}]")

# Small coefficients make degenerate forms visible: with coefficients in [-1, 1]
# repeated roots and perfect powers show up often enough to populate lower strata.
table = census(4, 1, samples=300, seed=7, coeff_bound=1)
print("\nquartics with coefficients in [-1, 1]:")
for r, s, c in table.rows():
    print(f"  crank {r}, dim C^1 = {s}: {c}")
