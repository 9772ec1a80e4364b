"""Exhaustive desk-scale search over squared spirals and hv-convex polyominoes.

Everything here is meant to serve as an assumption-free oracle: the search
never prunes by any property that the theorems under test talk about, and
:func:`brute_force_hv_convex` re-derives hv-convexity from scratch.
"""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import GridTooLarge
from .lattice import LatticeSet, Point, horizontal_projection, in_quadrant, is_hv_convex_polyomino, vertical_projection
from .spiral import HvSequence, SquaredSpiral, hv_sequence, spiral_to_switching
from .switching import SwitchingPair, is_hv_convex_by_cover, validate_switching

INTERACTIVE_LIMIT = (5, 4)
LONG_RUNNING_LIMIT = (6, 5)
POLYOMINO_LIMIT = 4


@dataclass(frozen=True)
class SearchSpace:
    """Vertices in ``[0, grid_side)^2`` and at most ``2 * max_half`` of them."""

    grid_side: int
    max_half: int

    def __post_init__(self):
        if self.grid_side < 2 or self.max_half < 2:
            raise ValueError("grid_side and max_half must both be at least 2")

    @property
    def max_vertices(self) -> int:
        return 2 * self.max_half

    def check_cost(self, override: bool = False, long_running: bool = False) -> None:
        m, k = LONG_RUNNING_LIMIT if long_running else INTERACTIVE_LIMIT
        if not override and (self.grid_side > m or self.max_half > k):
            raise GridTooLarge(
                f"grid {self.grid_side} with up to {self.max_vertices} vertices exceeds "
                f"the default limit (grid {m}, {2 * k} vertices); pass the override flag"
            )


def _chains(m: int, half: int, x0: int, x1: int, ccw: bool = False) -> Iterator[tuple[Point, ...]]:
    """All closed alternating chains whose first segment runs from column x0 to x1.

    The cycle is ``(x_0, y_0) -> (x_1, y_0) -> (x_1, y_1) -> (x_2, y_1) ...``
    closing with a vertical move back to ``(x_0, y_0)``.  With ``ccw`` the
    chain must turn counterclockwise at every vertex (east, north, west,
    south, east, ...), which yields exactly the windows.
    """
    if ccw and x1 < x0:
        return
    for y0 in range(m):
        first = (Point(x0, y0), Point(x1, y0))
        yield from _extend(m, half, list(first), set(first), x0, y0, 1, ccw)


def _ok(a: int, b: int, step: int, ccw: bool) -> bool:
    # moves alternate increasing/decreasing when every turn is counterclockwise
    if a == b:
        return False
    return not ccw or (b > a) == (step % 2 == 0)


def _extend(m, half, path, used, x0, y0, t, ccw):
    # path ends at (x_t, y_{t-1}); choose y_t, then either close or pick x_{t+1}
    last = path[-1]
    for y in range(m):
        if not _ok(last.j, y, t - 1, ccw):
            continue
        v = Point(last.i, y)
        if v in used:
            continue
        if _ok(last.i, x0, t, ccw) and _ok(y, y0, t, ccw) and not (ccw and t % 2 == 0):
            close = Point(x0, y)
            if close not in used:
                yield tuple(path + [v, close])
        if t + 1 >= half:
            continue
        used.add(v)
        path.append(v)
        for x in range(m):
            w = Point(x, y)
            if not _ok(last.i, x, t, ccw) or w in used:
                continue
            used.add(w)
            path.append(w)
            yield from _extend(m, half, path, used, x0, y0, t + 1, ccw)
            path.pop()
            used.discard(w)
        path.pop()
        used.discard(v)


def _partition(args) -> list[tuple]:
    m, half, x0, x1, translations, ccw = args
    found = set()
    for vs in _chains(m, half, x0, x1, ccw):
        s = SquaredSpiral(vs)
        s = s.normalized() if translations else s.canonical()
        found.add(s.vertices)
    return sorted(found)


def _sort_key(vs: tuple) -> tuple:
    return (len(vs), vs)


def enumerate_spirals(
    space: SearchSpace, jobs: int = 1, translations: bool = True, windows_only: bool = False
) -> list[SquaredSpiral]:
    """Every squared spiral of the space, once per canonical form.

    With ``translations=True`` spirals that differ by a translation are
    identified (representatives have their bounding box at the origin);
    otherwise every placement in the grid is reported.  Start vertex and
    traversal direction are always quotiented out.  The result is sorted
    by vertex count, then by vertex tuple, whatever ``jobs`` is.

    ``windows_only`` restricts the search to chains that always turn the
    same way; it is a cheap route to windows with more vertices than the
    full search can afford.
    """
    m, half = space.grid_side, space.max_half
    tasks = [(m, half, x0, x1, translations, windows_only) for x0 in range(m) for x1 in range(m) if x0 != x1]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_partition, tasks))
    else:
        parts = [_partition(t) for t in tasks]
    merged = set()
    for part in parts:
        merged.update(part)
    return [SquaredSpiral(vs) for vs in sorted(merged, key=_sort_key)]


def iter_spirals(space: SearchSpace, translations: bool = True) -> Iterator[SquaredSpiral]:
    yield from enumerate_spirals(space, 1, translations)


def brute_force_hv_convex(pair: SwitchingPair) -> bool:
    """Naive re-check of hv-convexity: scan every point against every quadrant."""
    comp = {}
    for p in pair.s0.points:
        comp[p] = 0
    for p in pair.s1.points:
        comp[p] = 1
    everything = list(comp)
    for x in everything:
        has_free = False
        for q in (0, 1, 2, 3):
            clean = True
            for y in everything:
                if comp[y] != comp[x] and in_quadrant(y, x, q):
                    clean = False
                    break
            if clean:
                has_free = True
                break
        if not has_free:
            return False
    return True


@dataclass
class CensusEntry:
    sequence: HvSequence
    realizable_count: int = 0
    hv_convex_count: int = 0
    witness: SquaredSpiral | None = None

    def add(self, s: SquaredSpiral, hv_convex: bool) -> None:
        self.realizable_count += 1
        if hv_convex:
            self.hv_convex_count += 1
            if self.witness is None or _sort_key(s.vertices) < _sort_key(self.witness.vertices):
                self.witness = s

    def merge(self, other: "CensusEntry") -> None:
        self.realizable_count += other.realizable_count
        self.hv_convex_count += other.hv_convex_count
        if other.witness is not None and (
            self.witness is None or _sort_key(other.witness.vertices) < _sort_key(self.witness.vertices)
        ):
            self.witness = other.witness

    def csv_row(self) -> list:
        runs = "(" + ",".join(str(k) for k in self.sequence.runs) + ")"
        witness = json.dumps({"vertices": self.witness.as_lists()}, separators=(",", ":")) if self.witness else ""
        return [runs, self.sequence.repeat, self.realizable_count, self.hv_convex_count, witness]


CSV_HEADER = ["sequence", "repeat", "realizable", "hv_convex", "witness_json"]


def _census_chunk(chunk: list[tuple]) -> dict:
    out: dict = {}
    for vs in chunk:
        s = SquaredSpiral(vs)
        seq = hv_sequence(s)
        entry = out.setdefault(seq, CensusEntry(seq))
        entry.add(s, is_hv_convex_by_cover(spiral_to_switching(s)))
    return out


def census_key(entry: CensusEntry) -> tuple:
    seq = entry.sequence
    return (seq.vertex_count, len(seq.runs) * seq.repeat, seq.runs, seq.repeat)


def census(space: SearchSpace, jobs: int = 1, spirals: list[SquaredSpiral] | None = None) -> list[CensusEntry]:
    """Group the spirals of ``space`` by hv-sequence and count hv-convex ones."""
    if spirals is None:
        spirals = enumerate_spirals(space, jobs)
    vertex_lists = [s.vertices for s in spirals]
    if jobs > 1:
        size = max(1, len(vertex_lists) // (4 * jobs) + 1)
        chunks = [vertex_lists[k:k + size] for k in range(0, len(vertex_lists), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_census_chunk, chunks))
    else:
        partials = [_census_chunk(vertex_lists)]
    total: dict = {}
    for part in partials:
        for seq, entry in part.items():
            if seq in total:
                total[seq].merge(entry)
            else:
                total[seq] = entry
    return sorted(total.values(), key=census_key)


# Polyominoes


def hv_convex_polyominoes(m: int) -> list[LatticeSet]:
    """All hv-convex polyominoes with cells in ``[0, m)^2`` (every placement)."""
    cells = [Point(i, j) for j in range(m) for i in range(m)]
    out = []
    for mask in range(1, 1 << len(cells)):
        pts = [c for b, c in enumerate(cells) if mask >> b & 1]
        a = LatticeSet(pts)
        if is_hv_convex_polyomino(a):
            out.append(a)
    return out


def polyomino_pair_scan(m: int, override: bool = False) -> list[tuple[LatticeSet, LatticeSet, SwitchingPair]]:
    """Tomographically equivalent pairs of hv-convex polyominoes in an m-by-m grid.

    Each pair is reported once, ordered so the first polyomino has the
    smaller sorted point list, together with the induced switching
    ``(P1 - P2, P2 - P1)``.
    """
    if m > POLYOMINO_LIMIT and not override:
        raise GridTooLarge(f"grid side {m} exceeds {POLYOMINO_LIMIT}; pass override=True")
    groups = defaultdict(list)
    for p in hv_convex_polyominoes(m):
        groups[(horizontal_projection(p), vertical_projection(p))].append(p)
    out = []
    for key in sorted(groups, key=lambda k: (k[0].origin, k[0].counts, k[1].origin, k[1].counts)):
        members = sorted(groups[key], key=lambda a: a.sorted())
        for a_idx in range(len(members)):
            for b_idx in range(a_idx + 1, len(members)):
                p1, p2 = members[a_idx], members[b_idx]
                out.append((p1, p2, validate_switching(p1 - p2, p2 - p1)))
    return out
