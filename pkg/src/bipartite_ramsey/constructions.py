"""Builders for the two host families, and the pattern embedding.

complete_bipartite(n, k) is the all-edges host on n + k vertices.
set_bipartite(n, k) is the set-membership graph: lefts 1..n, one right
vertex per k-subset of [n] in lexicographic order, edge (x, X) iff x in X.

embed_into_set_bipartite places an arbitrary pattern inside a
set-membership graph as an induced subgraph.  With c pattern lefts and d
pattern rights the target is B_{a,b} with a = 2c + d and b = c + 1:
indices 1..c of the ground set play the pattern lefts, c+1..2c are
spare filler elements, and 2c+1..2c+d are per-right distinguishers.
Pattern right j becomes the b-set

    N(j)  u  {2c + j}  u  {c+1, ..., c + (b - |N(j)| - 1)}

where N(j) is j's neighborhood in the pattern.  The distinguisher 2c+j
keeps distinct rights distinct even when their neighborhoods agree, and
the fillers pad the set up to size b without touching 1..c, so the copy
is induced.  No attempt is made to minimize a or b.
"""

from dataclasses import dataclass

from .errors import ParameterError
from .graphs import BipartiteGraph, InducedCopyWitness, MembershipEdgeSet, verify_witness
from .subsets import k_subsets


def complete_bipartite(n, k):
    """K_{n,k}: every (left, right) pair is an edge; rights labeled 1..k."""
    if n < 1 or k < 1:
        raise ParameterError(f"complete_bipartite needs n, k >= 1, got ({n}, {k})")
    labels = tuple(range(1, k + 1))
    edges = frozenset((x, y) for x in range(1, n + 1) for y in labels)
    return BipartiteGraph(n, labels, edges)


def set_bipartite(n, k):
    """B_{n,k}: rights are the k-subsets of [n], edge (x, X) iff x in X.

    Edges are exposed through a set-like view rather than materialized;
    the construction stays cheap even when C(n,k) runs into the millions.
    """
    if n < 1 or k < 1:
        raise ParameterError(f"set_bipartite needs n, k >= 1, got ({n}, {k})")
    if k > n:
        raise ParameterError(f"set_bipartite needs k <= n, got k={k} > n={n}")
    # Trusted builder: the labels below are exactly what the view expects,
    # so the per-label validation of the general constructor is skipped.
    graph = object.__new__(BipartiteGraph)
    object.__setattr__(graph, "left_count", n)
    object.__setattr__(graph, "right_labels", tuple(k_subsets(n, k)))
    object.__setattr__(graph, "edges", MembershipEdgeSet(n, k))
    return graph


@dataclass(frozen=True)
class EmbeddingResult:
    """An induced placement of a pattern inside B_{a,b}.

    left_map sends pattern left i to ground element i; right_map sends
    pattern right j (1-based position) to its image b-subset of [a].
    The witness is the same data in certificate form, already verified
    against set_bipartite(a, b).
    """

    a: int
    b: int
    left_map: dict
    right_map: dict
    witness: InducedCopyWitness


def embed_into_set_bipartite(pattern):
    """Embed a pattern with c lefts and d rights induced into B_{2c+d, c+1}."""
    c = pattern.left_count
    d = len(pattern.right_labels)
    if c < 1 or d < 1:
        raise ParameterError(
            f"pattern must have at least one vertex on each side, got {c} lefts, {d} rights"
        )
    a = 2 * c + d
    b = c + 1

    adjacency = pattern.adjacency_by_right
    right_map = {}
    for j, label in enumerate(pattern.right_labels, 1):
        neighbors = sorted(adjacency[label])
        fillers = range(c + 1, c + (b - len(neighbors) - 1) + 1)
        image = tuple(sorted([*neighbors, 2 * c + j, *fillers]))
        right_map[j] = image

    left_map = {i: i for i in range(1, c + 1)}
    witness = InducedCopyWitness(
        pattern,
        host_left=tuple(left_map[i] for i in range(1, c + 1)),
        host_right=tuple(right_map[j] for j in range(1, d + 1)),
        claimed_color=None,
    )
    host = set_bipartite(a, b)
    if not verify_witness(host, witness):
        raise AssertionError("embedding produced a non-induced placement (bug)")
    return EmbeddingResult(a=a, b=b, left_map=left_map, right_map=right_map, witness=witness)
