"""hv-switching pairs, free regions and the two hv-convexity conditions.

The covering condition (every point owns a free quadrant) and the pairwise
opposite-quadrant exclusion are deliberately computed by separate code
paths that share nothing except :func:`in_quadrant`; their agreement on
every enumerated switching is the main self-check of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AmbiguousFree,
    CardinalityMismatch,
    Collision,
    EmptyInput,
    NotAMember,
    NotContained,
    Overlap,
    ProjectionMismatch,
)
from .lattice import (
    QUADRANTS,
    LatticeSet,
    Point,
    ProjectionVector,
    as_point,
    horizontal_projection,
    in_quadrant,
    opposite,
    vertical_projection,
)


@dataclass(frozen=True)
class SwitchingPair:
    """A validated pair of disjoint point sets with equal h/v projections.

    Build instances through :func:`validate_switching`; the constructor
    itself does not check anything.
    """

    s0: LatticeSet
    s1: LatticeSet

    @property
    def points(self) -> frozenset:
        return self.s0.points | self.s1.points

    def component(self, x) -> int:
        x = as_point(x)
        if x in self.s0.points:
            return 0
        if x in self.s1.points:
            return 1
        raise NotAMember(f"{tuple(x)} is not a point of the switching")

    def other(self, c: int) -> LatticeSet:
        return self.s1 if c == 0 else self.s0

    def mirror(self) -> "SwitchingPair":
        return SwitchingPair(self.s1, self.s0)

    def __len__(self) -> int:
        return len(self.s0)


def _first_difference(a: ProjectionVector, b: ProjectionVector) -> int:
    lo = min(a.origin, b.origin)
    hi = max(a.origin + len(a), b.origin + len(b))
    for line in range(lo, hi):
        if a.count(line) != b.count(line):
            return line
    raise AssertionError("projections are equal")


def validate_switching(s0, s1) -> SwitchingPair:
    """Check the hv-switching axioms and return the pair.

    Raises ``Overlap`` for a shared point, ``CardinalityMismatch`` for
    unequal sizes and ``ProjectionMismatch`` naming the first row (or
    column) whose counts differ.
    """
    s0 = s0 if isinstance(s0, LatticeSet) else LatticeSet(s0)
    s1 = s1 if isinstance(s1, LatticeSet) else LatticeSet(s1)
    if not s0 or not s1:
        raise EmptyInput("switching components must be non-empty")
    shared = s0.points & s1.points
    if shared:
        p = min(shared)
        raise Overlap(f"point {tuple(p)} belongs to both components")
    if len(s0) != len(s1):
        raise CardinalityMismatch(f"|s0| = {len(s0)} but |s1| = {len(s1)}")
    for direction, proj in (("row", horizontal_projection), ("column", vertical_projection)):
        a, b = proj(s0), proj(s1)
        if a != b:
            line = _first_difference(a, b)
            raise ProjectionMismatch(
                f"{direction} {line}: s0 has {a.count(line)} points, s1 has {b.count(line)}",
                direction=direction,
                line=line,
            )
    pair = SwitchingPair(s0, s1)
    _check_line_partners(pair)
    return pair


def line_partners(pair: SwitchingPair, x) -> tuple[list[Point], list[Point]]:
    """Points of the other component on the row and on the column of ``x``."""
    x = as_point(x)
    others = pair.other(pair.component(x)).points
    row = sorted(p for p in others if p.j == x.j)
    col = sorted(p for p in others if p.i == x.i)
    return row, col


def _check_line_partners(pair: SwitchingPair) -> None:
    # Only meaningful when every populated line carries exactly two points,
    # which is the situation of spiral-induced switchings.
    union = LatticeSet(pair.points)
    if set(horizontal_projection(union).counts) - {0} != {2}:
        return
    if set(vertical_projection(union).counts) - {0} != {2}:
        return
    for x in union.points:
        row, col = line_partners(pair, x)
        if len(row) != 1 or len(col) != 1:
            raise ProjectionMismatch(f"point {tuple(x)} lacks a row or column partner")


def free_region(pair: SwitchingPair, x) -> int | None:
    """Index of the unique closed quadrant of ``x`` that avoids the other component.

    Returns ``None`` when every quadrant meets the other component and
    raises ``AmbiguousFree`` if more than one quadrant qualifies.
    """
    x = as_point(x)
    others = pair.other(pair.component(x)).points
    free = [q for q in QUADRANTS if not any(in_quadrant(w, x, q) for w in others)]
    if len(free) > 1:
        raise AmbiguousFree(f"point {tuple(x)} has free quadrants {free}")
    return free[0] if free else None


@dataclass(frozen=True)
class FreeRegionMap:
    regions: dict
    by_quadrant: tuple

    def __getitem__(self, x) -> int | None:
        return self.regions[as_point(x)]

    def points_with(self, q: int) -> list[Point]:
        return list(self.by_quadrant[q])

    @property
    def complete(self) -> bool:
        return all(q is not None for q in self.regions.values())


def free_regions(pair: SwitchingPair) -> FreeRegionMap:
    regions = {x: free_region(pair, x) for x in sorted(pair.points)}
    by_q = tuple(tuple(x for x, r in regions.items() if r == q) for q in QUADRANTS)
    return FreeRegionMap(regions, by_q)


def is_hv_convex_by_cover(pair: SwitchingPair) -> bool:
    """Covering condition: every point of the pair has a free region."""
    return all(free_region(pair, x) is not None for x in pair.points)


def _candidate_quadrant(x: Point, partners: Iterable[Point]) -> int | None:
    blocked = set()
    for w in partners:
        if w.j == x.j:
            blocked.update((1, 2) if w.i > x.i else (0, 3))
        else:
            blocked.update((2, 3) if w.j > x.j else (0, 1))
    left = [q for q in QUADRANTS if q not in blocked]
    return left[0] if len(left) == 1 else None


def is_hv_convex_by_pairs(pair: SwitchingPair) -> bool:
    """Opposite-quadrant exclusion over all pairs ``v in s0``, ``w in s1``.

    Each point is first assigned the only quadrant its row and column
    partners leave open (a point whose partners close every quadrant, or
    leave more than one open, cannot satisfy the condition).  Then, for
    ``v`` assigned ``i`` and any ``w`` of the other component,
    ``v`` must not lie in ``Z_{i+2}(w)``, and symmetrically for ``w``.
    """
    s0, s1 = sorted(pair.s0.points), sorted(pair.s1.points)
    cls = {}
    for own, others in ((s0, s1), (s1, s0)):
        for x in own:
            partners = [w for w in others if w.i == x.i or w.j == x.j]
            c = _candidate_quadrant(x, partners)
            if c is None:
                return False
            cls[x] = c
    for v in s0:
        jv = opposite(cls[v])
        for w in s1:
            if in_quadrant(v, w, jv) or in_quadrant(w, v, opposite(cls[w])):
                return False
    return True


def dual_set(a, pair: SwitchingPair) -> LatticeSet:
    """Replace ``s0`` by ``s1`` inside ``a``; projections are preserved."""
    a = a if isinstance(a, LatticeSet) else LatticeSet(a)
    missing = pair.s0.points - a.points
    if missing:
        raise NotContained(f"s0 point {tuple(min(missing))} is not in the set")
    hit = pair.s1.points & a.points
    if hit:
        raise Collision(f"s1 point {tuple(min(hit))} is already in the set")
    return LatticeSet((a.points - pair.s0.points) | pair.s1.points)
