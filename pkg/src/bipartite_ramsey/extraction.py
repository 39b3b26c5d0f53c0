"""Constructing an induced monochromatic B_{a,b} from a homogeneous set.

Suppose every (2b-1)-subset of a homogeneous set H (for the derived
coloring of a 2-colored B_{n,2b-1}) carries the same value (c, I): the
edges at positions I = {i_1 < ... < i_b} into any such subset all have
color c.  Take s = a*b + b - 1 elements of H.  The copy's left vertices
are the elements of H at ranks b, 2b, ..., ab; consecutive chosen ranks
are b apart, leaving b-1 unchosen ranks between neighbors, b-1 below the
first and b-1 above the last.  For each b-subset S of the chosen ranks,
build_right_vertex pads S with b-1 filler ranks so that, in sorted
order, the elements of S land exactly at the positions I.  The pads fit
inside the surrounding gaps, so they never hit a chosen rank: the right
vertex is adjacent to precisely the chosen lefts in S, its edges to them
sit at positions I, and the whole copy is induced and colored c.

Filler placement is the one free choice.  The rule pinned here fills the
gap after s_j upward from s_j + 1 and the gap before s_1 downward to
s_1 - 1.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError
from .graphs import InducedCopyWitness, verify_witness
from .hypergraph import majority_positions
from .subsets import k_subsets, validate_subset


@dataclass(frozen=True)
class ExtractionPlan:
    """The derived constants of one extraction: which ranks of the
    homogeneous set become lefts, and at which positions (with which
    color) the right vertices meet them."""

    a: int
    b: int
    s: int
    chosen_ranks: tuple
    positions: tuple
    color: object

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ParameterError(f"need a, b >= 1, got ({self.a}, {self.b})")
        if self.s != self.a * self.b + self.b - 1:
            raise ParameterError(f"s must equal a*b + b - 1, got {self.s}")
        if self.chosen_ranks != tuple(t * self.b for t in range(1, self.a + 1)):
            raise ParameterError(f"chosen ranks must be b, 2b, ..., ab, got {self.chosen_ranks}")
        validate_subset(self.positions, 2 * self.b - 1, self.b)


def plan_extraction(a, b, derived):
    return ExtractionPlan(
        a=a,
        b=b,
        s=a * b + b - 1,
        chosen_ranks=tuple(t * b for t in range(1, a + 1)),
        positions=tuple(derived.positions),
        color=derived.color,
    )


def build_right_vertex(chosen, positions, a, b):
    """Pad a b-subset of the chosen ranks into a (2b-1)-subset of [ab+b-1]
    whose sorted entries carry the chosen ranks exactly at the given
    positions, using fillers that avoid every multiple of b in [b, ab].

    chosen = {s_1 < ... < s_b} must be a subset of {b, 2b, ..., ab};
    positions = {i_1 < ... < i_b} a b-subset of [2b-1].  The gap of size
    i_1 - 1 before s_1 is filled with s_1 - g, ..., s_1 - 1; the gap of
    size i_{j+1} - i_j - 1 after s_j with s_j + 1, ..., s_j + g; the gap
    of size (2b-1) - i_b after s_b likewise upward.
    """
    if a < 1 or b < 1:
        raise ParameterError(f"need a, b >= 1, got ({a}, {b})")
    positions = validate_subset(positions, 2 * b - 1, b)
    chosen = validate_subset(chosen, a * b, b)
    if any(s % b != 0 for s in chosen):
        raise ParameterError(f"chosen ranks {chosen} must be multiples of b={b}")

    out = []
    gap = positions[0] - 1  # ranks below s_1
    out.extend(range(chosen[0] - gap, chosen[0]))
    for j in range(b):
        out.append(chosen[j])
        if j + 1 < b:
            gap = positions[j + 1] - positions[j] - 1
        else:
            gap = (2 * b - 1) - positions[b - 1]
        out.extend(range(chosen[j] + 1, chosen[j] + gap + 1))

    vertex = tuple(sorted(out))
    # Feasibility of the gaps; each is at most b-1 wide, so the fillers
    # stay strictly between consecutive chosen ranks, above 0, below
    # ab + b, and off the multiples of b.
    assert len(vertex) == 2 * b - 1 and len(set(vertex)) == 2 * b - 1
    assert all(vertex[positions[j] - 1] == chosen[j] for j in range(b))
    assert vertex[0] >= 1 and vertex[-1] <= a * b + b - 1
    assert all(x % b != 0 or x in chosen for x in vertex if b <= x <= a * b)
    return vertex


def extract_induced(homogeneous, derived, a, b, host, coloring):
    """Witness for an induced monochromatic B_{a,b} inside a 2-colored
    B_{n,2b-1}, given a homogeneous set for its derived coloring.

    The homogeneous set must have at least a*b + b - 1 elements; only
    the smallest a*b + b - 1 are used.  Homogeneity (with exactly the
    claimed derived value) is re-verified here from the edge coloring
    before anything is built: the witness is a certificate, so it is not
    constructed from unchecked assumptions.  The host need not have its
    ground set equal to the homogeneous set; elements are addressed by
    rank, i.e. the r-th smallest member plays the role of r.
    """
    from .constructions import set_bipartite

    plan = plan_extraction(a, b, derived)
    k = 2 * b - 1
    if host.membership_arity != k:
        raise ParameterError(
            f"host must be the full set-membership graph B_(n,{k}), got {host!r}"
        )
    members = sorted(set(homogeneous))
    if len(members) < plan.s:
        raise ParameterError(
            f"homogeneous set has {len(members)} elements, need a*b + b - 1 = {plan.s}"
        )
    if members and (members[0] < 1 or members[-1] > host.left_count):
        raise ParameterError(f"homogeneous set not contained in [1,{host.left_count}]")
    members = members[: plan.s]

    for X in combinations(members, k):
        colors = [coloring.color_of(z, X) for z in X]
        if majority_positions(colors, b) != derived:
            raise ParameterError(
                f"set is not homogeneous with value {derived}: subset {X} disagrees"
            )

    host_left = tuple(members[rank - 1] for rank in plan.chosen_ranks)
    host_right = []
    for T in k_subsets(a, b):
        ranks = build_right_vertex(tuple(t * b for t in T), plan.positions, a, b)
        host_right.append(tuple(members[r - 1] for r in ranks))

    witness = InducedCopyWitness(
        pattern=set_bipartite(a, b),
        host_left=host_left,
        host_right=tuple(host_right),
        claimed_color=plan.color,
    )
    if not verify_witness(host, witness, coloring):
        raise AssertionError("extraction produced an invalid witness (bug)")
    return witness
