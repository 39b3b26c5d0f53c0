#!/usr/bin/env python3
"""Bipartite graphs, induced subgraphs, and checkable witnesses.

An induced subgraph keeps ALL host edges between its vertices: missing
edges matter as much as present ones.  The same vertex set can therefore
carry a valid induced copy of one pattern and an invalid "copy" of
another that merely drops edges.
"""

from bipartite_ramsey import (
    InducedCopyWitness,
    complete_bipartite,
    export_dot,
    induced_subgraph,
    make_graph,
    set_bipartite,
    verify_witness,
)

# A 3 + 3 host with 7 edges.
host = make_graph(3, (1, 2, 3), {(1, 1), (1, 2), (1, 3), (2, 2), (3, 1), (3, 2), (3, 3)})
print("host:", host)

# Restricting to rights {1, 2} keeps five edges; that IS the induced subgraph.
sub = induced_subgraph(host, {1, 2, 3}, {1, 2})
print("induced subgraph on rights {1,2}:", sorted(sub.sorted_edges()))

good = InducedCopyWitness(sub, (1, 2, 3), (1, 2))
print("witness for the 5-edge pattern accepted:", verify_witness(host, good))

# Dropping two of those edges gives a subgraph, but not an induced one:
# the host still has the edges the pattern pretends are absent.
partial = make_graph(3, (1, 2), {(1, 1), (2, 2), (3, 2)})
bad = InducedCopyWitness(partial, (1, 2, 3), (1, 2))
print("witness for the 3-edge pattern accepted:", verify_witness(host, bad))

# The two host families.  K_{n,k} has every edge; B_{n,k} has lefts [n],
# one right vertex per k-subset of [n], and edges given by membership.
k33 = complete_bipartite(3, 3)
b42 = set_bipartite(4, 2)
print("\nK_{3,3}:", k33)
print("B_{4,2}:", b42)
print("B_{4,2} right vertices:", b42.right_labels)
print("every left vertex of B_{4,2} has degree C(3,1) = 3")

print("\nDOT rendering of B_{4,2}:\n")
print(export_dot(b42))
