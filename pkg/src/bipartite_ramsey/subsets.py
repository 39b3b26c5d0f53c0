"""Lexicographic ranking of k-subsets of {1, ..., n}.

Subsets are sorted tuples of 1-based integers, ordered lexicographically:
(1,2,3) < (1,2,4) < ... < (n-2,n-1,n).  Ranks are 0-based; flat indices
exposed to users (file formats, right-vertex indices) are rank + 1.
"""

from itertools import combinations
from math import comb


def k_subsets(n, k):
    """All k-subsets of {1,...,n} as sorted tuples, in lexicographic order."""
    return combinations(range(1, n + 1), k)


def subset_rank(subset, n):
    """0-based lexicographic rank of a sorted k-subset of {1,...,n}."""
    k = len(subset)
    rank = 0
    prev = 0
    for j, s in enumerate(subset):
        for v in range(prev + 1, s):
            rank += comb(n - v, k - j - 1)
        prev = s
    return rank


def subset_unrank(rank, n, k):
    """Inverse of subset_rank: the k-subset of {1,...,n} at the given rank."""
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n},{k})")
    out = []
    prev = 0
    remaining = rank
    for j in range(k):
        v = prev + 1
        while True:
            block = comb(n - v, k - j - 1)
            if remaining < block:
                break
            remaining -= block
            v += 1
        out.append(v)
        prev = v
    return tuple(out)


def validate_subset(subset, n, k=None):
    """Check a sorted k-subset of {1,...,n}; return it as a tuple."""
    t = tuple(subset)
    if k is not None and len(t) != k:
        raise ValueError(f"expected a {k}-subset, got {len(t)} elements")
    if any(not isinstance(x, int) for x in t):
        raise ValueError(f"subset elements must be integers: {t}")
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"subset must be strictly increasing: {t}")
    if t and (t[0] < 1 or t[-1] > n):
        raise ValueError(f"subset {t} not contained in [1,{n}]")
    return t
