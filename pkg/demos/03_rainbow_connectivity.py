#!/usr/bin/env python3
"""Rainbow connectivity: is every vertex pair joined by a simple path
whose vertex colours cover the whole colour set?

Run:  python3 demos/03_rainbow_connectivity.py
"""

from jrainbow import (
    Colouring,
    FamilySpec,
    NotJColourable,
    build_graph,
    export_dot,
    generate,
    is_chi_rainbow_connected,
    is_jc_rainbow_connected,
    j_number,
    min_rainbow_path_lengths,
    rainbow_path_exists,
)

# ---------------------------------------------------------------------------
# Single rainbow paths
# ---------------------------------------------------------------------------

c6 = generate(FamilySpec("cycle", (6,)))
col = Colouring(3, (1, 2, 3, 1, 2, 3))
w = rainbow_path_exists(c6, col, 0, 1)
print(f"C_6, pair (0,1): the direct edge misses a colour, so the witness "
      f"goes the long way: {w.path}")

lengths = min_rainbow_path_lengths(c6, col)
print(f"shortest rainbow path lengths on C_6: {lengths}")

# a DOT rendering with the witness path drawn bold
print("\nDOT with the bold witness path:")
print(export_dot(c6, col, [w.path]))

# ---------------------------------------------------------------------------
# Whole-graph predicates
# ---------------------------------------------------------------------------

unions = generate(FamilySpec(
    "disjoint_union",
    parts=(FamilySpec("complete", (4,)), FamilySpec("cycle", (6,))),
))
rep = is_jc_rainbow_connected(unions, "exists")
print(f"K_4 + C_6 rainbow connected: {rep.connected} "
      f"({len(rep.witness_map())} witness paths)")

try:
    is_jc_rainbow_connected(generate(FamilySpec("cycle", (5,))))
except NotJColourable as exc:
    print(f"C_5: {exc}")

# chi-rainbow connectivity is defined for every graph; C_5 satisfies it
c5 = generate(FamilySpec("cycle", (5,)))
print(f"C_5 chi-rainbow connected (exists): "
      f"{is_chi_rainbow_connected(c5, 'exists').connected}")

# ---------------------------------------------------------------------------
# A graph that admits a J-colouring but is NOT rainbow connected
# ---------------------------------------------------------------------------

# two triangles joined by a bridge: the bridge pair has exactly one
# connecting path (the bridge itself), which can never carry 3 colours
bowtie_bridge = build_graph(6, [(0, 1), (0, 5), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)])
print(f"\ntriangles-with-bridge: J = {j_number(bowtie_bridge).value}")
rep = is_jc_rainbow_connected(bowtie_bridge, "exists")
print(f"rainbow connected: {rep.connected}")
print("pair (4,5) is the obstruction: its only path is the bridge edge")
