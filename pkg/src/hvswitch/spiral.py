"""Squared spirals: validation, turning analysis, hv-sequences and Z-paths."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CollinearTriple,
    DuplicateVertex,
    InvalidSpiral,
    NonAlternating,
    OddVertexCount,
    ZeroLengthSegment,
)
from .lattice import LatticeSet, Point, as_point
from .switching import SwitchingPair, validate_switching

CCW = 1
CW = -1


class Kind(str, enum.Enum):
    WINDOW = "Window"
    CURL = "Curl"

    def __str__(self) -> str:
        return self.value


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SquaredSpiral:
    """Cyclic vertex list of a closed rectilinear curve.

    Use :func:`build_spiral` to obtain validated, canonically ordered
    instances.  Segments may cross and overlap; vertices may not repeat.
    """

    vertices: tuple

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, k: int) -> Point:
        return self.vertices[k % len(self.vertices)]

    def segment(self, k: int) -> tuple[Point, Point]:
        """Segment leaving vertex ``k``."""
        return self[k], self[k + 1]

    def direction(self, k: int) -> tuple[int, int]:
        a, b = self.segment(k)
        return _sign(b.i - a.i), _sign(b.j - a.j)

    def reversed(self) -> "SquaredSpiral":
        vs = self.vertices
        return SquaredSpiral((vs[0],) + tuple(reversed(vs[1:])))

    def rotated(self, k: int) -> "SquaredSpiral":
        k %= len(self.vertices)
        return SquaredSpiral(self.vertices[k:] + self.vertices[:k])

    def translate(self, di: int, dj: int) -> "SquaredSpiral":
        return SquaredSpiral(tuple(Point(p.i + di, p.j + dj) for p in self.vertices))

    def canonical(self) -> "SquaredSpiral":
        """Start at the lexicographically smallest vertex, leaving it rightward.

        The smallest vertex is the lowest point of the leftmost column, so
        its horizontal neighbour lies to the right and its vertical
        neighbour above; leaving along the horizontal segment makes the turn
        at vertex 0 counterclockwise.
        """
        vs = self.vertices
        k = vs.index(min(vs))
        out = self.rotated(k)
        if out.vertices[1].j != out.vertices[0].j:
            out = out.reversed()
        return out

    def normalized(self) -> "SquaredSpiral":
        """Canonical order translated so the bounding box starts at the origin."""
        lo_i = min(p.i for p in self.vertices)
        lo_j = min(p.j for p in self.vertices)
        return self.canonical().translate(-lo_i, -lo_j)

    def anchored(self) -> "SquaredSpiral":
        """Canonical order translated so vertex 0 (the smallest) is ``(0, 0)``."""
        c = self.canonical()
        return c.translate(-c.vertices[0].i, -c.vertices[0].j)

    @property
    def bounding_rectangle(self) -> "BoundingRectangle":
        return BoundingRectangle(
            min(p.i for p in self.vertices),
            min(p.j for p in self.vertices),
            max(p.i for p in self.vertices),
            max(p.j for p in self.vertices),
        )

    def as_lists(self) -> list[list[int]]:
        return [[p.i, p.j] for p in self.vertices]


@dataclass(frozen=True)
class BoundingRectangle:
    min_i: int
    min_j: int
    max_i: int
    max_j: int


def build_spiral(vertices: Iterable, canonical: bool = True) -> SquaredSpiral:
    """Validate a cyclic vertex list and return the spiral.

    With ``canonical=True`` (the default) the cycle is re-rooted at its
    lexicographically smallest vertex and oriented so that the first
    segment runs to the right; pass ``False`` to keep the given order.
    """
    vs = tuple(as_point(p) for p in vertices)
    n = len(vs)
    if n % 2:
        raise OddVertexCount(f"a squared spiral needs an even vertex count, got {n}")
    if n < 4:
        raise InvalidSpiral(f"a squared spiral needs at least 4 vertices, got {n}")
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        if a == b:
            raise ZeroLengthSegment(f"segment {k} from {tuple(a)} has zero length")
        if a.i != b.i and a.j != b.j:
            raise NonAlternating(f"segment {k} from {tuple(a)} to {tuple(b)} is not axis-parallel")
    for k in range(n):
        prev, v, nxt = vs[k - 1], vs[k], vs[(k + 1) % n]
        if (prev.j == v.j) == (v.j == nxt.j):
            din = (_sign(v.i - prev.i), _sign(v.j - prev.j))
            dout = (_sign(nxt.i - v.i), _sign(nxt.j - v.j))
            if din == dout:
                raise NonAlternating(f"two consecutive parallel moves through vertex {k} {tuple(v)}")
            raise CollinearTriple(f"the path folds back on itself at vertex {k} {tuple(v)}")
    if len(set(vs)) != n:
        seen = set()
        for p in vs:
            if p in seen:
                raise DuplicateVertex(f"vertex {tuple(p)} occurs twice")
            seen.add(p)
    s = SquaredSpiral(vs)
    return s.canonical() if canonical else s


# Turning


def turn_profile(s: SquaredSpiral) -> tuple[int, ...]:
    """Turn sign at each vertex: ``CCW`` (+1) or ``CW`` (-1)."""
    out = []
    n = len(s)
    for k in range(n):
        prev, v, nxt = s[k - 1], s[k], s[k + 1]
        cross = (v.i - prev.i) * (nxt.j - v.j) - (v.j - prev.j) * (nxt.i - v.i)
        out.append(CCW if cross > 0 else CW)
    return tuple(out)


def turning_number(s: SquaredSpiral) -> int:
    """Net quarter turns divided by four."""
    return sum(turn_profile(s)) // 4


def classify(s: SquaredSpiral) -> Kind:
    prof = turn_profile(s)
    return Kind.WINDOW if len(set(prof)) == 1 else Kind.CURL


def runs_with_offsets(profile: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal same-sign runs as ``(start_index, length)`` in cycle order.

    For a constant profile the single run starts at 0.  Otherwise runs are
    listed starting from the first changing point (the first vertex whose
    sign differs from its predecessor).
    """
    n = len(profile)
    changes = [k for k in range(n) if profile[k] != profile[k - 1]]
    if not changes:
        return [(0, n)]
    out = []
    for a, b in zip(changes, changes[1:] + [changes[0] + n]):
        out.append((a, b - a))
    return out


@dataclass(frozen=True)
class HvSequence:
    """Run lengths ``(k_1, ..., k_n)`` repeated ``repeat`` times around a spiral."""

    runs: tuple
    repeat: int = 1

    @property
    def expanded(self) -> tuple[int, ...]:
        return tuple(self.runs) * self.repeat

    @property
    def vertex_count(self) -> int:
        return sum(self.runs) * self.repeat

    @property
    def is_single_run(self) -> bool:
        return len(self.runs) == 1 and self.repeat == 1

    def __str__(self) -> str:
        body = "(" + ",".join(str(k) for k in self.runs) + ")"
        if self.is_single_run:
            return body
        return f"{body}_{self.repeat}"

    @classmethod
    def parse(cls, text: str) -> "HvSequence":
        text = text.strip()
        body, _, rep = text.partition("_")
        runs = tuple(int(x) for x in body.strip("()").split(","))
        return cls.from_runs(runs * (int(rep) if rep else 1))

    @classmethod
    def from_runs(cls, runs: Sequence[int]) -> "HvSequence":
        """Canonicalize a cyclic run list: smallest rotation, then fold periods.

        Curl periods are restricted to an even number of runs because the
        runs alternate between the two turning senses.
        """
        runs = tuple(runs)
        if any(k <= 0 for k in runs):
            raise ValueError("runs must be positive")
        n = len(runs)
        if n == 1:
            return cls(runs, 1)
        if n % 2:
            raise ValueError("a cyclic run list of a curl has an even length")
        best = min(runs[k:] + runs[:k] for k in range(n))
        for p in range(2, n + 1, 2):
            if n % p == 0 and best == best[:p] * (n // p):
                return cls(best[:p], n // p)
        raise AssertionError("unreachable")


def hv_sequence(s: SquaredSpiral) -> HvSequence:
    return HvSequence.from_runs([length for _, length in runs_with_offsets(turn_profile(s))])


# Z-paths

SW_NE = "SW-NE"
SE_NW = "SE-NW"


@dataclass(frozen=True)
class ZPath:
    """A staircase piece of a spiral.

    ``vertices`` holds both endpoints and the interior vertices in
    traversal order; ``start`` is the cycle index of the first endpoint.
    """

    start: int
    vertices: tuple
    level: int
    type: str
    shape: str

    @property
    def degenerate(self) -> bool:
        return self.level == 0

    @property
    def interior(self) -> tuple:
        return self.vertices[1:-1]


def _z_type(a: Point, b: Point) -> str:
    return SW_NE if (b.i - a.i) * (b.j - a.j) > 0 else SE_NW


def _shape(vertices: Sequence[Point]) -> str:
    # read from the southern endpoint towards the northern one
    if vertices[-1].j < vertices[0].j:
        vertices = list(reversed(vertices))
    segs = "".join("h" if a.j == b.j else "v" for a, b in zip(vertices, vertices[1:]))
    if len(segs) == 2:
        return "L"
    first, second = segs[0], segs[1]
    if len(segs) % 2:
        return f"{first}({second}{first})_{len(segs) // 2}"
    return f"({first}{second})_{len(segs) // 2}"


def z_path_decomposition(s: SquaredSpiral) -> list[ZPath]:
    """Split the cycle into Z-paths ordered by their starting index.

    Maximal stretches of alternating turn signs are the interiors of the
    non-degenerate Z-paths (level = interior size - 1).  Every vertex that
    is neither such an interior vertex nor an endpoint of one is the corner
    of a degenerate, L-shaped path.  Cutting the cycle at the ``start``
    indices yields consecutive slices that tile it exactly.
    """
    prof = turn_profile(s)
    n = len(s)
    interior: dict[int, int] = {}
    paths = []
    breaks = [k for k in range(n) if prof[k] == prof[(k + 1) % n]]
    if breaks and len(breaks) < n:
        # stretches lie between consecutive same-sign adjacencies
        for a, b in zip(breaks, breaks[1:] + [breaks[0] + n]):
            length = b - a
            if length < 2:
                continue
            idx = [(a + 1 + t) % n for t in range(length)]
            for t in idx:
                interior[t] = len(paths)
            verts = tuple(s[k] for k in [a] + [a + 1 + t for t in range(length)] + [b + 1])
            paths.append(ZPath(a % n, verts, length - 1, _z_type(verts[0], verts[-1]), _shape(verts)))
    endpoints = {p.start for p in paths} | {(p.start + len(p.vertices) - 1) % n for p in paths}
    for k in range(n):
        if k in interior or k in endpoints:
            continue
        verts = (s[k - 1], s[k], s[k + 1])
        paths.append(ZPath((k - 1) % n, verts, 0, _z_type(verts[0], verts[2]), "L"))
    paths.sort(key=lambda p: p.start)
    return paths


def z_path_slices(s: SquaredSpiral, paths: Sequence[ZPath]) -> list[tuple[Point, ...]]:
    """Vertices owned by each path: from its start up to the next path's start."""
    n = len(s)
    starts = [p.start for p in paths]
    out = []
    for a, b in zip(starts, starts[1:] + [starts[0] + n]):
        out.append(tuple(s[k] for k in range(a, b)))
    return out


# Conversion


def spiral_to_switching(s: SquaredSpiral) -> SwitchingPair:
    """Even-position vertices form ``s0``, odd-position vertices ``s1``."""
    vs = s.vertices
    return validate_switching(LatticeSet(vs[0::2]), LatticeSet(vs[1::2]))
