"""Constructive families of hv-convex windows and curls.

Every generator returns a spiral anchored so that its lexicographically
smallest vertex is ``(0, 0)``.  The curl families were derived by hand and
are pinned by tests against all three hv-convexity predicates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotApplicable
from .lattice import Point
from .spiral import HvSequence, SquaredSpiral, build_spiral, classify, hv_sequence, Kind

CONSECUTIVE = "consecutive"
L_CONNECTED = "L-connected"
STYLES = (CONSECUTIVE, L_CONNECTED)

# Two rectangles glued at a corner, labelled x1..x6 with uneven column
# spacing; their free regions read Z1, Z0, Z3, Z1, Z2, Z3.
CURL_33_FIXTURE = ((0, 0), (-2, 0), (-2, 1), (1, 1), (1, 2), (0, 2))

CURL_35 = (
    (0, 0), (6, 0), (6, -3), (3, -3), (3, 3), (2, 3), (2, -2), (7, -2),
    (7, -1), (1, -1), (1, 2), (4, 2), (4, -4), (5, -4), (5, 1), (0, 1),
)


def _spiral(vertices) -> SquaredSpiral:
    return build_spiral(vertices).anchored()


def _zigzag(xs: list[int], ys: list[int]) -> list[tuple[int, int]]:
    # horizontal segment t runs along row ys[t] from column xs[t] to xs[t+1]
    k = len(xs)
    out = []
    for t in range(k):
        out.append((xs[t], ys[t]))
        out.append((xs[(t + 1) % k], ys[t]))
    return out


def gen_window(n: int) -> SquaredSpiral:
    """Window of size ``n``: ``n`` nested rounds spiralling into the centre.

    Round ``r`` visits ``(r, r)``, ``(2n-1-r, r)``, ``(2n-1-r, 2n-1-r)`` and
    ``(r+1, 2n-1-r)``; the last round closes on column 0.  Lower-left
    corners sit on ``i = j <= n-1`` and upper-right ones on ``i = j >= n``,
    so the square ``[n-1, n]^2`` separates the four corner classes.
    """
    if n < 1:
        raise ValueError(f"window size must be positive, got {n}")
    top = 2 * n - 1
    vs = []
    for r in range(n):
        nxt = r + 1 if r + 1 < n else 0
        vs += [(r, r), (top - r, r), (top - r, top - r), (nxt, top - r)]
    return _spiral(vs)


def _curl_33_consecutive(h: int) -> list[tuple[int, int]]:
    # h copies of the glued-rectangle motif shifted along the diagonal;
    # every vertex gets its own row and column
    xs, ys = [], []
    for r in range(h):
        xs += [r, 2 * h + r, h + r]
        ys += [h + r, r, 2 * h + r]
    width = 3 * h - 1
    return [(width - i, j) for i, j in _zigzag(xs, ys)]


def _curl_33_l_connected(h: int) -> list[tuple[int, int]]:
    # consecutive motifs share the bottom row and the outer column, so they
    # are chained through L-shaped corners
    vs = []
    for r in range(h):
        start, c, top, low = h + 1 + r, r + 1, 2 * h - r, h - r
        nxt = h + 1 + (r + 1) % h
        vs += [(start, 0), (c, 0), (c, top), (0, top), (0, low), (nxt, low)]
    return [(2 * h - i, j) for i, j in vs]


def gen_curl_33(h: int, style: str = CONSECUTIVE) -> SquaredSpiral:
    """hv-convex curl with sequence ``(3,3)_h``.

    For ``h = 1`` both styles return the glued pair of rectangles.  For
    larger ``h`` the consecutive style shifts copies of that motif along
    the diagonal; the L-connected style lets neighbouring copies share
    a row and a column.
    """
    if h < 1:
        raise ValueError(f"repeat count must be positive, got {h}")
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {', '.join(STYLES)}")
    if h == 1:
        return _spiral(CURL_33_FIXTURE)
    builder = _curl_33_consecutive if style == CONSECUTIVE else _curl_33_l_connected
    return _spiral(builder(h))


def _trace(points) -> list[Point]:
    # follow row partner, column partner, row partner, ... from the smallest point
    pts = sorted(Point(*p) for p in points)
    rows: dict[int, list[Point]] = {}
    cols: dict[int, list[Point]] = {}
    for p in pts:
        rows.setdefault(p.j, []).append(p)
        cols.setdefault(p.i, []).append(p)
    start = pts[0]
    order = [start]
    cur, horizontal = start, True
    while True:
        line = rows[cur.j] if horizontal else cols[cur.i]
        cur = line[0] if line[1] == cur else line[1]
        horizontal = not horizontal
        if cur == start:
            return order
        order.append(cur)


def banded_curl(m: int) -> SquaredSpiral:
    """hv-convex ``(2m+3, 2m+3)_1`` curl: two simple Z-paths joined by L paths.

    On a side ``s = 2m+3`` grid the vertices occupy four diagonal bands,
    one per free region: ``i + j = m`` (lower-left), ``i - j = m+1``
    (lower-right), ``i + j = 2s-2-m`` (upper-right) and ``j - i = m+1``
    (upper-left).  Every row and column holds exactly two of them, so the
    curve is forced.  ``m = 0`` is the glued rectangle pair; from ``m = 1``
    on the two Z-paths are joined by chains of ``2m - 1`` L corners each.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    s = 2 * m + 3
    pts = [(m + 1 + t, t) for t in range(m + 2)]
    pts += [(t, m + 1 + t) for t in range(m + 2)]
    pts += [(m - t, t) for t in range(m + 1)]
    pts += [(2 * (s - 1) - m - j, j) for j in range(m + 2, s)]
    return _spiral(_trace(pts))


def _rank_compressed(s: SquaredSpiral) -> frozenset:
    xs = {v: k for k, v in enumerate(sorted({p.i for p in s.vertices}))}
    ys = {v: k for k, v in enumerate(sorted({p.j for p in s.vertices}))}
    return frozenset(Point(xs[p.i], ys[p.j]) for p in s.vertices)


def insert_l_paths(c: SquaredSpiral, count: int = 2) -> SquaredSpiral:
    """Grow a ``(k,k)_1`` curl of the banded family to ``(k+count, k+count)_1``.

    The two simple Z-paths are pulled apart and their extremal vertices
    rejoined through ``count // 2`` extra degenerate paths on each side.
    Inputs are recognised up to order-preserving changes of column and
    row coordinates, so the loosely spaced glued-rectangle fixture is
    accepted as well as any earlier output of this function.
    """
    if count <= 0 or count % 2:
        raise ValueError(f"count must be a positive even integer, got {count}")
    if classify(c) != Kind.CURL:
        raise NotApplicable("L paths can only be inserted into a curl")
    seq = hv_sequence(c)
    if len(seq.runs) != 2 or seq.repeat != 1 or seq.runs[0] != seq.runs[1] or seq.runs[0] % 2 == 0:
        raise NotApplicable(f"expected a (k,k)_1 curl with odd k, got {seq}")
    m = (seq.runs[0] - 3) // 2
    if _rank_compressed(c) != _rank_compressed(banded_curl(m)):
        raise NotApplicable(f"{seq} curl is not a member of the banded family")
    return banded_curl(m + count // 2)


def gen_curl_35() -> SquaredSpiral:
    """The 16-vertex hv-convex curl with sequence ``(3,5)_2``.

    Found by a depth-first search over the fixed turn pattern with
    free-region pruning, restricted to one vertex per row and column.
    """
    return _spiral(CURL_35)


@dataclass(frozen=True)
class CurlBlueprint:
    """A request for a curl realising ``pattern`` in a given ``style``.

    ``scale`` stretches every coordinate; the order of rows and columns,
    and hence hv-convexity, is unchanged.
    """

    pattern: HvSequence
    style: str = CONSECUTIVE
    scale: int = 1

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"unknown style {self.style!r}")
        if self.scale < 1:
            raise ValueError("scale must be positive")

    def realize(self) -> SquaredSpiral:
        runs, rep = tuple(self.pattern.runs), self.pattern.repeat
        if runs == (3, 3):
            s = gen_curl_33(rep, self.style)
        elif runs == (3, 5) and rep == 2:
            s = gen_curl_35()
        elif len(runs) == 2 and rep == 1 and runs[0] == runs[1] and runs[0] % 2 and self.style == L_CONNECTED:
            s = banded_curl((runs[0] - 3) // 2)
        else:
            raise NotApplicable(f"no {self.style} construction for {self.pattern}")
        if self.scale == 1:
            return s
        return SquaredSpiral(tuple(Point(p.i * self.scale, p.j * self.scale) for p in s.vertices))
