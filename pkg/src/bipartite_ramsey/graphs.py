"""Bipartite graphs, 2-colorings of their edges, and induced-copy witnesses.

A bipartite graph has left vertices 1..left_count and an ordered list of
right vertices.  Right vertices carry labels: either opaque integers
(conventionally 1..right_count) or sorted tuples of integers for
set-membership graphs, whose right vertices *are* k-subsets of the left
ground set.  Edges are stored explicitly as (left, right_label) pairs, so
non-edges are first-class: the induced-subgraph checks below depend on
them as much as on the edges.

Everything here is an immutable value; operations are pure functions and
safe to call concurrently.

The brute-force searcher find_induced_monochromatic is the module's
oracle: deliberately unclever, exhaustive over injective vertex maps, and
trusted by the rest of the package as ground truth at desk scale.
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from itertools import combinations, permutations
from typing import Optional, Union

from .errors import BudgetMeter, ValidationError

RightLabel = Union[int, tuple]
Edge = tuple  # (left: int, right_label: RightLabel)


class Color(IntEnum):
    """Edge color.  RED sorts before BLUE everywhere a tie must be broken."""

    RED = 0
    BLUE = 1

    @property
    def letter(self):
        return "R" if self is Color.RED else "B"

    @classmethod
    def from_letter(cls, s):
        if s == "R":
            return cls.RED
        if s == "B":
            return cls.BLUE
        raise ValidationError(f"unknown color letter {s!r} (expected R or B)")


RED = Color.RED
BLUE = Color.BLUE


def _normalize_label(label):
    if isinstance(label, int):
        return label
    if isinstance(label, (tuple, list)):
        t = tuple(label)
        if not all(isinstance(x, int) for x in t):
            raise ValidationError(f"subset label must contain integers: {t}")
        if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
            raise ValidationError(f"subset label must be strictly increasing: {t}")
        return t
    raise ValidationError(f"right label must be an int or an int tuple, got {label!r}")


class MembershipEdgeSet:
    """Set-like view of the edges of a full set-membership graph.

    Behaves like the frozenset of all pairs (x, X) with X a k-subset of
    [n] and x in X, but holds nothing: B_{35,7} has 47 million edges,
    which never fit in memory as tuples.  Supports exactly what edge
    storage needs: membership, length, iteration, equality.
    """

    __slots__ = ("n", "k", "_len")

    def __init__(self, n, k):
        from math import comb

        self.n = n
        self.k = k
        self._len = k * comb(n, k)

    def __contains__(self, edge):
        if type(edge) is not tuple or len(edge) != 2:
            return False
        x, label = edge
        if type(label) is not tuple or len(label) != self.k or type(x) is not int:
            return False
        prev = 0
        for v in label:
            if type(v) is not int or v <= prev:
                return False
            prev = v
        return prev <= self.n and x in label

    def __iter__(self):
        for label in combinations(range(1, self.n + 1), self.k):
            for x in label:
                yield (x, label)

    def __len__(self):
        return self._len

    def __eq__(self, other):
        if isinstance(other, MembershipEdgeSet):
            return (self.n, self.k) == (other.n, other.k)
        if isinstance(other, (set, frozenset)):
            return len(other) == self._len and all(e in self for e in other)
        return NotImplemented

    def __hash__(self):
        return hash(("membership-edges", self.n, self.k))

    def __repr__(self):
        return f"MembershipEdgeSet(n={self.n}, k={self.k})"


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Left class 1..left_count, labeled right class, edges between them.

    edges is a frozenset of (left, right_label) pairs, or a
    MembershipEdgeSet view for full set-membership graphs built by
    set_bipartite.
    """

    left_count: int
    right_labels: tuple
    edges: object

    def __post_init__(self):
        if self.left_count < 0:
            raise ValidationError(f"left_count must be >= 0, got {self.left_count}")
        if isinstance(self.edges, MembershipEdgeSet):
            view = self.edges
            labels = tuple(combinations(range(1, view.n + 1), view.k))
            if self.left_count != view.n or tuple(self.right_labels) != labels:
                raise ValidationError("edge view does not match the graph shape")
            object.__setattr__(self, "right_labels", labels)
            return
        labels = tuple(_normalize_label(l) for l in self.right_labels)
        if len(set(labels)) != len(labels):
            raise ValidationError("right labels must be pairwise distinct")
        object.__setattr__(self, "right_labels", labels)
        label_set = set(labels)
        edges = set()
        for e in self.edges:
            try:
                left, label = e
            except (TypeError, ValueError):
                raise ValidationError(f"edge must be a (left, right_label) pair: {e!r}")
            label = _normalize_label(label)
            if not (isinstance(left, int) and 1 <= left <= self.left_count):
                raise ValidationError(f"edge {e!r} references unknown left vertex")
            if label not in label_set:
                raise ValidationError(f"edge {e!r} references unknown right label")
            edges.add((left, label))
        object.__setattr__(self, "edges", frozenset(edges))

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.left_count == other.left_count
            and self.right_labels == other.right_labels
            and self.edges == other.edges
        )

    def __hash__(self):
        # Cheap but consistent with __eq__; avoids hashing huge edge sets.
        return hash((self.left_count, len(self.right_labels), len(self.edges)))

    # -- basic queries ------------------------------------------------

    @property
    def right_count(self):
        return len(self.right_labels)

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def lefts(self):
        return range(1, self.left_count + 1)

    @cached_property
    def _label_index(self):
        # label -> 1-based position in right_labels
        return {label: i for i, label in enumerate(self.right_labels, 1)}

    def has_right_label(self, label):
        if isinstance(self.edges, MembershipEdgeSet):
            view = self.edges
            return (
                isinstance(label, tuple)
                and len(label) == view.k
                and all(isinstance(v, int) for v in label)
                and all(a < b for a, b in zip(label, label[1:]))
                and 1 <= label[0]
                and label[-1] <= view.n
            )
        return label in self._label_index

    def right_index(self, label):
        """1-based position of a right label in the stored order."""
        if isinstance(self.edges, MembershipEdgeSet):
            if not self.has_right_label(label):
                raise ValidationError(f"unknown right label {label!r}")
            from .subsets import subset_rank

            return subset_rank(label, self.left_count) + 1
        try:
            return self._label_index[label]
        except KeyError:
            raise ValidationError(f"unknown right label {label!r}")

    def label_at(self, index):
        """Right label at a 1-based position."""
        if not 1 <= index <= len(self.right_labels):
            raise ValidationError(f"right index {index} out of range")
        return self.right_labels[index - 1]

    def has_edge(self, left, label):
        return (left, label) in self.edges

    def sorted_edges(self):
        """Edges ordered by (left, right position); the canonical order."""
        idx = self._label_index
        return sorted(self.edges, key=lambda e: (e[0], idx[e[1]]))

    @cached_property
    def adjacency_by_right(self):
        """Right label -> frozenset of adjacent left vertices."""
        adj = {label: set() for label in self.right_labels}
        for left, label in self.edges:
            adj[label].add(left)
        return {label: frozenset(s) for label, s in adj.items()}

    def is_complete(self):
        return self.edge_count == self.left_count * len(self.right_labels)

    @cached_property
    def membership_arity(self):
        """k if this graph is exactly the set-membership graph B_{n,k}, else None.

        B_{n,k} has lefts [n], one right vertex per k-subset of [n] in
        lexicographic order, and an edge (x, X) exactly when x is in X.
        """
        if isinstance(self.edges, MembershipEdgeSet):
            return self.edges.k
        from .subsets import k_subsets

        if not self.right_labels:
            return None
        first = self.right_labels[0]
        if not isinstance(first, tuple):
            return None
        k = len(first)
        n = self.left_count
        if self.right_labels != tuple(k_subsets(n, k)):
            return None
        from math import comb

        if self.edge_count != k * comb(n, k):
            return None
        if any(left not in label for left, label in self.edges):
            return None
        return k

    def __repr__(self):
        return (
            f"BipartiteGraph(left_count={self.left_count}, "
            f"rights={len(self.right_labels)}, edges={self.edge_count})"
        )


def make_graph(left_count, right_labels, edges):
    """Build a BipartiteGraph from plain iterables."""
    return BipartiteGraph(left_count, tuple(right_labels), frozenset(edges))


class ConstantEdgeMap:
    """Read-only total edge->color map that never materializes its entries.

    Used for constant colorings of large hosts, where a dict with one
    entry per edge would dominate memory.
    """

    __slots__ = ("_graph", "_color")

    def __init__(self, graph, color):
        self._graph = graph
        self._color = Color(color)

    def __getitem__(self, edge):
        if edge not in self._graph.edges:
            raise KeyError(edge)
        return self._color

    def __contains__(self, edge):
        return edge in self._graph.edges

    def __iter__(self):
        return iter(self._graph.edges)

    def __len__(self):
        return len(self._graph.edges)

    def keys(self):
        return self._graph.edges

    def __eq__(self, other):
        if isinstance(other, ConstantEdgeMap):
            return self._graph == other._graph and self._color == other._color
        if isinstance(other, dict):
            return len(other) == len(self) and all(
                other.get(e) == self._color for e in self
            )
        return NotImplemented


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total map from a graph's edges to {RED, BLUE}."""

    graph: BipartiteGraph
    colors: object  # Mapping edge -> Color, with exactly graph.edges as keys

    def __post_init__(self):
        colors = self.colors
        if isinstance(colors, ConstantEdgeMap):
            return
        colors = {k: Color(v) for k, v in dict(colors).items()}
        if set(colors.keys()) != set(self.graph.edges):
            missing = len(self.graph.edges) - len(colors.keys() & self.graph.edges)
            extra = len(colors.keys() - self.graph.edges)
            raise ValidationError(
                f"coloring is not total over the graph's edges "
                f"({missing} missing, {extra} unknown)"
            )
        object.__setattr__(self, "colors", colors)

    def color_of(self, left, label):
        try:
            return self.colors[(left, label)]
        except KeyError:
            raise ValidationError(f"no edge ({left}, {label!r}) in the colored graph")

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors

    def __repr__(self):
        return f"EdgeColoring(graph={self.graph!r}, edges={len(self.graph.edges)})"


def constant_coloring(graph, color):
    """Color every edge of the graph the same."""
    return EdgeColoring(graph, ConstantEdgeMap(graph, color))


def coloring_from_map(graph, mapping):
    """EdgeColoring from an explicit edge -> color dict (validated total)."""
    return EdgeColoring(graph, dict(mapping))


def random_coloring(graph, rng):
    """Independent fair RED/BLUE choice per edge, in canonical edge order."""
    return EdgeColoring(
        graph, {e: (RED if rng.random() < 0.5 else BLUE) for e in graph.sorted_edges()}
    )


@dataclass(frozen=True)
class InducedCopyWitness:
    """Certificate that a pattern occurs induced (and maybe monochromatic).

    host_left[i-1] is the host image of pattern left vertex i, and
    host_right[j-1] the host image of the pattern's j-th right vertex.
    The certificate is checkable in polynomial time by verify_witness.
    """

    pattern: BipartiteGraph
    host_left: tuple
    host_right: tuple
    claimed_color: Optional[Color] = None

    def __post_init__(self):
        object.__setattr__(self, "host_left", tuple(self.host_left))
        object.__setattr__(
            self, "host_right", tuple(_normalize_label(l) for l in self.host_right)
        )
        if self.claimed_color is not None:
            object.__setattr__(self, "claimed_color", Color(self.claimed_color))
        if len(self.host_left) != self.pattern.left_count:
            raise ValidationError(
                f"witness maps {len(self.host_left)} left vertices, "
                f"pattern has {self.pattern.left_count}"
            )
        if len(self.host_right) != len(self.pattern.right_labels):
            raise ValidationError(
                f"witness maps {len(self.host_right)} right vertices, "
                f"pattern has {len(self.pattern.right_labels)}"
            )
        if len(set(self.host_left)) != len(self.host_left):
            raise ValidationError("witness left map is not injective")
        if len(set(self.host_right)) != len(self.host_right):
            raise ValidationError("witness right map is not injective")


def verify_witness(host, witness, coloring=None):
    """Check an induced-copy certificate against its host.

    True iff mapped adjacency matches pattern adjacency exactly in both
    directions (the induced condition: host non-edges must be pattern
    non-edges too), and, when the witness claims a color and a coloring
    is supplied, every mapped host edge carries that color.

    Malformed witnesses (dangling references; shape errors are already
    rejected at construction) raise ValidationError rather than
    returning False.
    """
    for left in witness.host_left:
        if not (isinstance(left, int) and 1 <= left <= host.left_count):
            raise ValidationError(f"witness references unknown host left {left!r}")
    for label in witness.host_right:
        if not host.has_right_label(label):
            raise ValidationError(f"witness references unknown host right {label!r}")
    if coloring is not None and coloring.graph is not host and coloring.graph != host:
        raise ValidationError("coloring refers to a different graph than the host")

    pattern = witness.pattern
    check_color = witness.claimed_color is not None and coloring is not None
    for i in range(1, pattern.left_count + 1):
        hl = witness.host_left[i - 1]
        for j, plabel in enumerate(pattern.right_labels, 1):
            hr = witness.host_right[j - 1]
            in_pattern = pattern.has_edge(i, plabel)
            in_host = host.has_edge(hl, hr)
            if in_pattern != in_host:
                return False
            if in_host and check_color:
                if coloring.color_of(hl, hr) != witness.claimed_color:
                    return False
    return True


def induced_subgraph(host, lefts, rights):
    """The subgraph on the chosen vertices with ALL host edges between them.

    Chosen lefts are renumbered 1..|lefts| in increasing order of their
    host ids; right labels are preserved and keep their host order.
    """
    lefts = sorted(set(lefts))
    for left in lefts:
        if not (isinstance(left, int) and 1 <= left <= host.left_count):
            raise ValidationError(f"unknown left vertex {left!r}")
    rights = set(_normalize_label(r) for r in rights)
    for label in rights:
        if not host.has_right_label(label):
            raise ValidationError(f"unknown right label {label!r}")
    kept_labels = tuple(l for l in host.right_labels if l in rights)
    renumber = {old: new for new, old in enumerate(lefts, 1)}
    edges = frozenset(
        (renumber[left], label)
        for (left, label) in host.edges
        if left in renumber and label in rights
    )
    return BipartiteGraph(len(lefts), kept_labels, edges)


def find_induced_monochromatic(host, coloring, pattern, budget=None):
    """Exhaustively search the host for an induced monochromatic pattern copy.

    Enumerates left-vertex combinations in lexicographic order, then for
    each arrangement of them tries RED before BLUE and assigns host right
    vertices to pattern right vertices depth-first in host order, so the
    first witness found is deterministic.  Injective maps that reorder a
    combination are all considered: absence means no copy exists under
    any vertex mapping.

    Returns a witness accepted by verify_witness (claimed_color set;
    RED by convention when the pattern has no edges), or None when no
    induced monochromatic copy exists.  Raises BudgetExceededError if
    the number of candidate checks passes the budget, which is an
    "unknown", not an "absent".
    """
    a = pattern.left_count
    b = len(pattern.right_labels)
    if a > host.left_count or b > len(host.right_labels):
        return None
    if coloring.graph is not host and coloring.graph != host:
        raise ValidationError("coloring refers to a different graph than the host")

    meter = BudgetMeter(budget)
    host_adj = host.adjacency_by_right
    pattern_adj = pattern.adjacency_by_right
    # Pattern right neighborhoods in pattern right order.
    pat_needs = [pattern_adj[label] for label in pattern.right_labels]
    host_labels = host.right_labels
    pattern_has_edges = pattern.edge_count > 0

    for left_combo in combinations(range(1, host.left_count + 1), a):
        for left_perm in permutations(left_combo):
            left_set = frozenset(left_perm)
            # Host lefts that must be the exact neighborhood of each mapped right.
            needs = [frozenset(left_perm[i - 1] for i in need) for need in pat_needs]
            for color in (RED, BLUE):
                if color is BLUE and not pattern_has_edges:
                    break  # vacuous witnesses are RED by convention
                chosen = _assign_rights(
                    host, coloring, host_labels, host_adj, needs, left_set, color, meter
                )
                if chosen is not None:
                    return InducedCopyWitness(pattern, left_perm, chosen, color)
    return None


def _assign_rights(host, coloring, host_labels, host_adj, needs, left_set, color, meter):
    """Depth-first injective assignment of host rights to pattern rights."""
    b = len(needs)
    chosen = []
    used = set()

    def extend(j):
        for idx, label in enumerate(host_labels):
            if idx in used:
                continue
            meter.charge()
            if host_adj[label] & left_set != needs[j]:
                continue
            if any(coloring.color_of(l, label) != color for l in needs[j]):
                continue
            used.add(idx)
            chosen.append(label)
            if j + 1 == b or extend(j + 1):
                return True
            used.discard(idx)
            chosen.pop()
        return False

    if b == 0 or extend(0):
        return tuple(chosen)
    return None
