#!/usr/bin/env python3
"""Exact Ramsey thresholds at micro scale, by exhausting every coloring.

R_{a,c}(s) is the least n such that every c-coloring of the a-subsets of
[n] has a homogeneous s-set.  The numbers the induced constructions
actually need (like a homogeneous 9-set under 6 colors of triples) are
astronomically out of reach; tiny parameters are not, and they are
computed here by brute force, counterexamples included.
"""

from bipartite_ramsey import (
    find_homogeneous_set,
    lower_bound_coloring,
    ramsey_number_exact,
)

print("pigeonhole case, arity 1: R_{1,2}(3) =", ramsey_number_exact(1, 2, 3, 10))
print("single pair, arity 2:     R_{2,2}(2) =", ramsey_number_exact(2, 2, 2, 5))

value = ramsey_number_exact(2, 2, 3, 6)
print("graph triangle case:      R_{2,2}(3) =", value)

print("\nthe last failing ground set is n = 5; its first counterexample:")
cx = lower_bound_coloring(2, 2, 3, 5)
ones = [pair for pair, v in cx.items() if v == 1]
twos = [pair for pair, v in cx.items() if v == 2]
print("  value 1 pairs:", ones)
print("  value 2 pairs:", twos)
print("  (value 1 traces a 5-cycle; both color classes are triangle-free)")
print("  homogeneous 3-set in it:", find_homogeneous_set(cx, 3))

print("\nbudget guard: infeasible requests are refused, not attempted")
try:
    ramsey_number_exact(3, 6, 9, 30)
except Exception as exc:
    print("  refused:", exc)
