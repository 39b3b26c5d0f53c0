"""Colorings of k-subsets, homogeneous sets, and exact micro Ramsey numbers.

A SubsetColoring assigns one of palette_size values to every arity-subset
of {1,...,n}; values are stored densely, indexed by the subset's
lexicographic rank, so lookups are O(1).  A vertex set H is homogeneous
when all arity-subsets of H get the same value (vacuously so when H is
smaller than the arity).

derive_coloring turns an edge 2-coloring of the set-membership graph
B_{n,2b-1} into a subset coloring: each (2b-1)-subset X = {z_1 < ... <
z_{2b-1}} receives the pair (c, I), where c is the color appearing at
least b times among the edges (z_p, X) (the counts sum to an odd number,
so exactly one color qualifies) and I is the set of the b smallest
positions p with that color.  Which b positions to record is a free
choice; smallest-first is pinned here for determinism.  The palette has
exactly 2 * C(2b-1, b) values.

Everything exhaustive is budgeted: searches refuse loudly instead of
running unboundedly, since interesting homogeneous-set thresholds are
astronomically out of reach.  Only micro parameters terminate.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import BudgetExceededError, BudgetMeter, ParameterError, ValidationError
from .graphs import BLUE, RED, Color
from .subsets import k_subsets, subset_rank, subset_unrank, validate_subset


@dataclass(frozen=True)
class SubsetColoring:
    """Total map from the arity-subsets of [n] to values 1..palette_size."""

    n: int
    arity: int
    palette_size: int
    values: tuple  # values[r] colors the subset of lexicographic rank r

    def __post_init__(self):
        if self.n < 0 or self.arity < 0 or self.palette_size < 1:
            raise ValidationError(
                f"bad subset-coloring shape (n={self.n}, arity={self.arity}, "
                f"palette={self.palette_size})"
            )
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        expected = comb(self.n, self.arity)
        if len(values) != expected:
            raise ValidationError(
                f"coloring must cover all C({self.n},{self.arity}) = {expected} "
                f"subsets, got {len(values)} values"
            )
        if any(not (1 <= v <= self.palette_size) for v in values):
            raise ValidationError(
                f"palette values must lie in 1..{self.palette_size}"
            )

    def value_of(self, subset):
        """Value of a sorted arity-subset of [n]."""
        t = validate_subset(subset, self.n, self.arity)
        return self.values[subset_rank(t, self.n)]

    def items(self):
        """(subset, value) pairs in lexicographic subset order."""
        return zip(k_subsets(self.n, self.arity), self.values)

    @classmethod
    def from_map(cls, n, arity, palette_size, mapping):
        """Build from a {subset: value} dict; must be total."""
        values = [None] * comb(n, arity)
        for subset, value in mapping.items():
            t = validate_subset(subset, n, arity)
            values[subset_rank(t, n)] = value
        if any(v is None for v in values):
            raise ValidationError("mapping does not cover every subset")
        return cls(n, arity, palette_size, tuple(values))


@dataclass(frozen=True)
class DerivedColor:
    """A palette value of the derived coloring: a color plus b positions."""

    color: Color
    positions: tuple  # sorted b-subset of [2b-1]

    def __post_init__(self):
        object.__setattr__(self, "color", Color(self.color))
        object.__setattr__(self, "positions", tuple(self.positions))


def derived_palette_size(b):
    return 2 * comb(2 * b - 1, b)


def encode_derived(derived, b):
    """Palette value in 1..2*C(2b-1,b): RED block first, positions by rank."""
    positions = validate_subset(derived.positions, 2 * b - 1, b)
    return derived.color.value * comb(2 * b - 1, b) + subset_rank(positions, 2 * b - 1) + 1


def decode_derived(value, b):
    """Inverse of encode_derived."""
    block = comb(2 * b - 1, b)
    if not 1 <= value <= 2 * block:
        raise ValidationError(f"derived palette value {value} out of range 1..{2 * block}")
    color = Color((value - 1) // block)
    rank = (value - 1) % block
    return DerivedColor(color, subset_unrank(rank, 2 * b - 1, b))


def majority_positions(colors, b):
    """(color, positions) for one subset: the color covering >= b of the
    2b-1 incoming edges, and the b smallest positions carrying it."""
    if len(colors) != 2 * b - 1:
        raise ParameterError(f"expected {2 * b - 1} edge colors, got {len(colors)}")
    red = [p for p, c in enumerate(colors, 1) if c is RED]
    blue = [p for p, c in enumerate(colors, 1) if c is BLUE]
    # Counts sum to 2b-1, so exactly one color reaches b.
    assert (len(red) >= b) != (len(blue) >= b)
    if len(red) >= b:
        return DerivedColor(RED, tuple(red[:b]))
    return DerivedColor(BLUE, tuple(blue[:b]))


def derive_coloring(coloring, b):
    """Derived subset coloring of a 2-colored B_{n,2b-1}.

    The host must be exactly the set-membership graph of arity 2b-1 with
    every (2b-1)-subset present; anything else is a shape mismatch.
    """
    if b < 1:
        raise ParameterError(f"b must be >= 1, got {b}")
    k = 2 * b - 1
    host = coloring.graph
    if host.membership_arity != k:
        raise ParameterError(
            f"host must be the full set-membership graph B_(n,{k}) "
            f"for b={b}, got {host!r}"
        )
    n = host.left_count
    values = []
    for X in k_subsets(n, k):
        colors = [coloring.color_of(z, X) for z in X]
        values.append(encode_derived(majority_positions(colors, b), b))
    return SubsetColoring(n=n, arity=k, palette_size=derived_palette_size(b), values=tuple(values))


def _common_value(coloring, vertices, meter=None):
    """The single value taken on all arity-subsets of the vertex set,
    or None if two subsets disagree.  Vacuous sets report value None
    through homogeneous=True in is_homogeneous."""
    if len(vertices) == coloring.n and coloring.values:
        # Whole ground set: its subsets are the dense value table itself.
        if meter is not None:
            meter.charge(len(coloring.values))
        first = coloring.values[0]
        return (first, True) if all(v == first for v in coloring.values) else (None, False)
    first = None
    for subset in combinations(vertices, coloring.arity):
        if meter is not None:
            meter.charge()
        value = coloring.values[subset_rank(subset, coloring.n)]
        if first is None:
            first = value
        elif value != first:
            return None, False
    return first, True


def is_homogeneous(coloring, vertices):
    """True iff all arity-subsets of the vertex set share one value.

    Vacuously true when the set has fewer than arity elements.
    """
    vset = sorted(set(vertices))
    if vset and (vset[0] < 1 or vset[-1] > coloring.n):
        raise ParameterError(f"vertex set {vset} not contained in [1,{coloring.n}]")
    if len(vset) < coloring.arity:
        return True
    _, ok = _common_value(coloring, vset)
    return ok


def find_homogeneous_set(coloring, s, budget=None):
    """Lexicographically first homogeneous s-subset of [n], with its value.

    Returns (vertices, value) or None when no s-subset is homogeneous
    (including the trivial case s > n, where no s-subset exists at all).
    The value is None in the vacuous case s < arity.  Counting one check
    per subset-color lookup, raises BudgetExceededError past the budget.
    """
    if s < 0:
        raise ParameterError(f"s must be >= 0, got {s}")
    if s > coloring.n:
        return None
    meter = BudgetMeter(budget)
    for candidate in combinations(range(1, coloring.n + 1), s):
        if len(candidate) < coloring.arity:
            return candidate, None
        value, ok = _common_value(coloring, candidate, meter)
        if ok:
            return candidate, value
    return None


def _first_counterexample(arity, palette, s, n, meter):
    """First coloring of C([n],arity), in odometer order, with no
    homogeneous s-set; None if every coloring has one.

    Odometer order: values listed by subset rank, the last position
    (lexicographically largest subset) ticking fastest, all-1s first.
    """
    m = comb(n, arity)
    candidates = list(combinations(range(1, n + 1), s))
    subset_ranks = [
        tuple(subset_rank(sub, n) for sub in combinations(candidate, arity))
        for candidate in candidates
    ]
    for values in product(range(1, palette + 1), repeat=m):
        found = False
        for ranks in subset_ranks:
            meter.charge(len(ranks))
            first = values[ranks[0]] if ranks else None
            if all(values[r] == first for r in ranks):
                found = True
                break
        if not found:
            return SubsetColoring(n, arity, palette, values)
    return None


def _estimate_checks(arity, palette, s, n):
    return palette ** comb(n, arity)


def lower_bound_coloring(arity, palette, s, n, budget=None):
    """A concrete coloring of C([n],arity) with no homogeneous s-set,
    or None when every coloring has one (the first such coloring in
    odometer order, so the result is reproducible)."""
    if s > n:
        raise ParameterError(f"s={s} exceeds n={n}; every coloring lacks an s-set")
    meter = BudgetMeter(budget)
    estimate = _estimate_checks(arity, palette, s, n)
    if estimate > meter.limit:
        raise BudgetExceededError(
            f"enumerating {palette}^C({n},{arity}) = {estimate} colorings "
            f"exceeds the budget of {meter.limit}",
            estimate=estimate,
            limit=meter.limit,
        )
    return _first_counterexample(arity, palette, s, n, meter)


def ramsey_number_exact(arity, palette, s, max_n, budget=None):
    """Least n <= max_n such that EVERY palette-coloring of the
    arity-subsets of [n] has a homogeneous s-set; None if no n <= max_n
    qualifies.

    Exhaustive over all palette^C(n,arity) colorings per candidate n, so
    only micro parameters are feasible; candidate ns whose estimated
    enumeration exceeds the budget are refused with the estimate.  Once
    some n qualifies the search stops: adding a vertex cannot destroy
    the property, so the first success is the minimum.
    """
    if arity < 1 or palette < 1 or s < 1 or max_n < 1:
        raise ParameterError("arity, palette, s, max_n must all be >= 1")
    meter = BudgetMeter(budget)
    for n in range(max(s, 1), max_n + 1):
        estimate = _estimate_checks(arity, palette, s, n)
        if estimate > meter.limit:
            raise BudgetExceededError(
                f"enumerating {palette}^C({n},{arity}) = {estimate} colorings at n={n} "
                f"exceeds the budget of {meter.limit}",
                estimate=estimate,
                limit=meter.limit,
                used=meter.used,
            )
        if _first_counterexample(arity, palette, s, n, meter) is None:
            return n
    return None
