#!/usr/bin/env python3
"""J and J* numbers: the most colours a proper colouring can use while
every vertex (or every internal vertex) still sees all of them in its
closed neighbourhood.

Run:  python3 demos/02_j_numbers.py
"""

from jrainbow import (
    Colouring,
    FamilySpec,
    generate,
    is_j_colouring,
    j_number,
    j_star_number,
    jc_number,
    jstarc_number,
    maximise_colouring,
    minimise_colouring,
)

# ---------------------------------------------------------------------------
# Connected graphs
# ---------------------------------------------------------------------------

print("cycles: a cycle admits a J-colouring iff its length is divisible by 2 or 3")
for n in range(3, 13):
    res = j_number(generate(FamilySpec("cycle", (n,))))
    print(f"  C_{n:<2} -> {res.value if res.admits else 'none'}")

print("\nwheels (hub + rim): 4 when the rim is divisible by 3, 3 when even")
for order in range(4, 12):
    res = j_number(generate(FamilySpec("wheel", (order,))))
    print(f"  W_{order:<2} (rim {order - 1}) -> {res.value if res.admits else 'none'}")

p4 = generate(FamilySpec("path", (4,)))
print(f"\nP_4: J = {j_number(p4).value} (pendants cap it at delta+1 = 2), "
      f"J* = {j_star_number(p4).value} (only internal vertices must yield)")

star = generate(FamilySpec("complete_multipartite", (1, 4)))
print(f"K_1,4: J = {j_number(star).value}, J* = {j_star_number(star).value} = Delta+1")

# ---------------------------------------------------------------------------
# Componentwise numbers for disconnected graphs
# ---------------------------------------------------------------------------

g = generate(FamilySpec(
    "disjoint_union",
    parts=(FamilySpec("complete", (4,)), FamilySpec("null", (2,))),
))
res = jc_number(g)
print(f"\nK_4 + 2 K_1: per-component J = {[r.value for r in res.per_component]}, "
      f"max = {res.value}")

bad = generate(FamilySpec(
    "disjoint_union",
    parts=(FamilySpec("cycle", (5,)), FamilySpec("complete", (2,))),
))
print(f"C_5 + K_2 admits componentwise J-colouring: {jc_number(bad).admits}"
      " (the 5-cycle component fails)")

forest = generate(FamilySpec("forest_union", (1, 4, 3)))
print(f"forest K_1 + P_4 + P_3: jc = {jc_number(forest).value}, "
      f"jstarc = {jstarc_number(forest).value}")

# ---------------------------------------------------------------------------
# Shrinking and growing a colouring while a property is preserved
# ---------------------------------------------------------------------------

c6 = generate(FamilySpec("cycle", (6,)))
three = Colouring(3, (1, 2, 3, 1, 2, 3))
two = minimise_colouring(c6, three, is_j_colouring)
print(f"\nC_6: {three.assignment} minimises to {two.assignment} (both J-colourings)")
back = maximise_colouring(c6, two, is_j_colouring)
print(f"     {two.assignment} maximises to {back.assignment} with {back.ell} colours")
