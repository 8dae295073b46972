#!/usr/bin/env python3
"""A tour of proper colourings, the greedy-maximal convention, and rainbow
neighbourhoods.

Run top to bottom:  python3 demos/01_colourings_and_neighbourhoods.py
"""

from jrainbow import (
    ConventionInfeasibleError,
    FamilySpec,
    build_graph,
    chromatic_number,
    convention_colouring,
    enumerate_proper_colourings,
    generate,
    inverse_colouring,
    rainbow_neighbourhood_number,
    yields_rainbow,
)

# ---------------------------------------------------------------------------
# Chromatic numbers are exact, with a witness colouring
# ---------------------------------------------------------------------------

petersen = build_graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)
chi, witness = chromatic_number(petersen)
print(f"Petersen graph: chi = {chi}, witness = {witness.assignment}")

# ---------------------------------------------------------------------------
# The convention colouring peels off maximum independent sets
# ---------------------------------------------------------------------------

c5 = generate(FamilySpec("cycle", (5,)))
conv = convention_colouring(c5, 3)
print(f"\nC_5 convention colouring: {conv.assignment}, class sizes {conv.theta}")

# the discipline can be infeasible: two adjacent hubs with two leaves each
double_star = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
try:
    convention_colouring(double_star, 2)
except ConventionInfeasibleError as exc:
    print(f"double star at ell=2: {exc}")
print(f"double star at ell=3: {convention_colouring(double_star, 3).assignment}")

# the inverse convention relabels colours back to front, and is an involution
print(f"\ninverse of {conv.assignment} is {inverse_colouring(conv).assignment}")
assert inverse_colouring(inverse_colouring(conv)) == conv

# ---------------------------------------------------------------------------
# Rainbow neighbourhoods: which closed neighbourhoods see every colour?
# ---------------------------------------------------------------------------

print(f"\nC_5 under {conv.assignment}:")
for v in range(5):
    print(f"  vertex {v} yields: {yields_rainbow(c5, conv, v)}")

for mode in ("convention", "exists-max", "exists-min"):
    rep = rainbow_neighbourhood_number(c5, mode)
    print(f"r[{mode}](C_5) = {rep.r}   (yielding {sorted(rep.yielding)})")

# ---------------------------------------------------------------------------
# Enumerating every surjective proper colouring (the oracle backend)
# ---------------------------------------------------------------------------

p3 = generate(FamilySpec("path", (3,)))
print(f"\nall proper 2-colourings of P_3: "
      f"{[c.assignment for c in enumerate_proper_colourings(p3, 2)]}")
k3 = generate(FamilySpec("complete", (3,)))
print(f"K_3 has {sum(1 for _ in enumerate_proper_colourings(k3, 3))} proper 3-colourings")
