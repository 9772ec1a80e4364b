"""Integer lattice points, finite point sets, projections and quadrants.

Coordinates follow the usual mathematical orientation: ``i`` grows to the
right and ``j`` grows upward, so quadrant 0 is the closed lower-left
quarter-plane anchored at a point and the indices advance counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import EmptyInput


class Point(NamedTuple):
    i: int
    j: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.i + other[0], self.j + other[1])

    def __sub__(self, other):
        return Point(self.i - other[0], self.j - other[1])


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    i, j = p
    return Point(int(i), int(j))


Q0, Q1, Q2, Q3 = 0, 1, 2, 3
QUADRANTS = (Q0, Q1, Q2, Q3)


def opposite(q: int) -> int:
    return (q + 2) % 4


def in_quadrant(p, v, q: int) -> bool:
    """Return True when ``p`` lies in the closed quadrant ``q`` anchored at ``v``.

    ``p`` and ``v`` may carry non-integer coordinates (``Fraction``), which
    is how window certificates probe off-lattice points.
    """
    pi, pj = p
    vi, vj = v
    if q == 0:
        return pi <= vi and pj <= vj
    if q == 1:
        return pi >= vi and pj <= vj
    if q == 2:
        return pi >= vi and pj >= vj
    if q == 3:
        return pi <= vi and pj >= vj
    raise ValueError(f"quadrant index must be 0..3, got {q!r}")


def quadrants_of(p, v) -> tuple[int, ...]:
    """All closed quadrants of ``v`` containing ``p`` (between one and four)."""
    return tuple(q for q in QUADRANTS if in_quadrant(p, v, q))


@dataclass(frozen=True)
class ProjectionVector:
    """Line counts of a lattice set, starting at the first populated line."""

    origin: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.counts and (self.counts[0] <= 0 or self.counts[-1] <= 0):
            raise ValueError("first and last counts must be positive")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    def __len__(self) -> int:
        return len(self.counts)

    def count(self, line: int) -> int:
        k = line - self.origin
        if 0 <= k < len(self.counts):
            return self.counts[k]
        return 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict:
        return {"origin": self.origin, "counts": list(self.counts)}


def _projection(coords: Iterable[int]) -> ProjectionVector:
    tally: dict[int, int] = {}
    for c in coords:
        tally[c] = tally.get(c, 0) + 1
    if not tally:
        raise EmptyInput("projection of an empty set")
    lo, hi = min(tally), max(tally)
    return ProjectionVector(lo, tuple(tally.get(c, 0) for c in range(lo, hi + 1)))


@dataclass(frozen=True)
class LatticeSet:
    """A finite set of lattice points.

    Construction from an iterable with repeated points raises ``ValueError``;
    use ``LatticeSet.from_iterable(..., dedupe=True)`` to collapse them.
    """

    points: frozenset
    _bbox: tuple | None = field(default=None, compare=False, repr=False)

    def __init__(self, points: Iterable = ()):
        pts = [as_point(p) for p in points]
        fs = frozenset(pts)
        if len(fs) != len(pts):
            raise ValueError("duplicate points in lattice set")
        object.__setattr__(self, "points", fs)
        if fs:
            bbox = (
                min(p.i for p in fs),
                min(p.j for p in fs),
                max(p.i for p in fs),
                max(p.j for p in fs),
            )
        else:
            bbox = None
        object.__setattr__(self, "_bbox", bbox)

    @classmethod
    def from_iterable(cls, points: Iterable, dedupe: bool = False) -> "LatticeSet":
        pts = [as_point(p) for p in points]
        if dedupe:
            pts = list(dict.fromkeys(pts))
        return cls(pts)

    def __contains__(self, p) -> bool:
        return as_point(p) in self.points

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __bool__(self) -> bool:
        return bool(self.points)

    def __or__(self, other: "LatticeSet") -> "LatticeSet":
        return LatticeSet(self.points | other.points)

    def __and__(self, other: "LatticeSet") -> "LatticeSet":
        return LatticeSet(self.points & other.points)

    def __sub__(self, other: "LatticeSet") -> "LatticeSet":
        return LatticeSet(self.points - other.points)

    @property
    def bbox(self) -> tuple[int, int, int, int]:
        """``(min_i, min_j, max_i, max_j)``; raises ``EmptyInput`` when empty."""
        if self._bbox is None:
            raise EmptyInput("empty lattice set has no bounding box")
        return self._bbox

    def sorted(self) -> list[Point]:
        return sorted(self.points)

    def translate(self, di: int, dj: int) -> "LatticeSet":
        return LatticeSet(Point(p.i + di, p.j + dj) for p in self.points)


def horizontal_projection(a: LatticeSet) -> ProjectionVector:
    """Number of points on each row, indexed by the row coordinate ``j``."""
    if not a:
        raise EmptyInput("horizontal projection of an empty set")
    return _projection(p.j for p in a.points)


def vertical_projection(a: LatticeSet) -> ProjectionVector:
    """Number of points on each column, indexed by the column coordinate ``i``."""
    if not a:
        raise EmptyInput("vertical projection of an empty set")
    return _projection(p.i for p in a.points)


def _lines(a: LatticeSet, axis: int) -> dict[int, list[int]]:
    lines: dict[int, list[int]] = {}
    for p in a.points:
        lines.setdefault(p[axis], []).append(p[1 - axis])
    return lines


def _is_interval(values: list[int]) -> bool:
    return max(values) - min(values) + 1 == len(values)


def is_4_connected(a: LatticeSet) -> bool:
    if not a:
        return False
    start = next(iter(a.points))
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for d in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            n = Point(p.i + d[0], p.j + d[1])
            if n in a.points and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(a.points)


def is_hv_convex_polyomino(a: LatticeSet) -> bool:
    """4-connected set whose every row and every column is one contiguous run."""
    if not a:
        raise EmptyInput("polyomino test on an empty set")
    for axis in (0, 1):
        if not all(_is_interval(vals) for vals in _lines(a, axis).values()):
            return False
    return is_4_connected(a)


def is_q_convex(a: LatticeSet) -> bool:
    """Quadrant convexity along the horizontal and vertical directions.

    Every lattice point of the bounding box whose four closed quadrants all
    meet ``a`` must belong to ``a``.  Points outside the bounding box always
    have an empty quadrant, so the box is the whole search range.
    """
    if not a:
        raise EmptyInput("Q-convexity test on an empty set")
    lo_i, lo_j, hi_i, hi_j = a.bbox
    pts = list(a.points)
    for v in product(range(lo_i, hi_i + 1), range(lo_j, hi_j + 1)):
        if v in a.points:
            continue
        if all(any(in_quadrant(p, v, q) for p in pts) for q in QUADRANTS):
            return False
    return True
