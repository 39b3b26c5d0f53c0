#!/usr/bin/env python3
"""An induced monochromatic B_{4,2} inside a 2-colored B_{n,3}.

No complete host can contain an induced B_{4,2}: the pattern has
non-edges and a complete graph has none.  Set-membership hosts work.
Each right vertex X = {z_1 < z_2 < z_3} of B_{n,3} receives a derived
value (c, {i, j}): the majority color c of its three edges and the two
positions carrying it.  On a set H where all triples agree on (c, {i,j}),
taking the left vertices at ranks 2, 4, 6, 8 of H and padding each pair
of them into a triple (fillers placed off the chosen ranks, at exactly
the positions {i, j}) yields an induced all-c B_{4,2}.

With |H| = 9 the construction is exact and small enough to print, and a
brute-force oracle confirms independently that a copy exists.
"""

from bipartite_ramsey import (
    DerivedColor,
    RED,
    BLUE,
    build_right_vertex,
    coloring_from_map,
    decode_derived,
    derive_coloring,
    extract_induced,
    find_homogeneous_set,
    find_induced_monochromatic,
    set_bipartite,
    verify_witness,
)

host = set_bipartite(9, 3)

# Color edge (z_p, X) RED exactly when p is in {1, 3}: every triple then
# derives to (RED, {1, 3}), so the whole ground set is homogeneous.
positions = (1, 3)
colors = {}
for X in host.right_labels:
    for p, z in enumerate(X, 1):
        colors[(z, X)] = RED if p in positions else BLUE
coloring = coloring_from_map(host, colors)

derived = derive_coloring(coloring, b=2)
print("derived palette size:", derived.palette_size)
found = find_homogeneous_set(derived, 9)
vertices, value = found
print("homogeneous set:", vertices, "value:", decode_derived(value, 2))

print("\npadding chosen rank pairs into triples (fillers in between):")
for S in [(2, 4), (2, 8), (6, 8)]:
    print(f"  S={S}, I={positions} ->", build_right_vertex(S, positions, 4, 2))

witness = extract_induced(vertices, DerivedColor(RED, positions), 4, 2, host, coloring)
print("\nextracted left vertices: ", witness.host_left)
print("extracted right vertices:", witness.host_right)
print("claimed color:", witness.claimed_color.name)
print("checker accepts:", verify_witness(host, witness, coloring))

oracle = find_induced_monochromatic(host, coloring, set_bipartite(4, 2))
print("\nbrute-force oracle agrees:", oracle is not None and verify_witness(host, oracle, coloring))
