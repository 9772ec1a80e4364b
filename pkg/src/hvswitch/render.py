"""ASCII and SVG pictures of spirals and switchings.

Output is a pure function of the input, so rendered files can be compared
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Point
from .spiral import SquaredSpiral, spiral_to_switching
from .switching import SwitchingPair, free_regions

FORMATS = ("ascii", "svg")


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    cell: int = 40
    labels: bool = False
    free_regions: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unsupported format {self.format!r}; expected one of {', '.join(FORMATS)}")
        if self.cell <= 0:
            raise ValueError("cell size must be positive")


def _parts(obj) -> tuple[SwitchingPair, SquaredSpiral | None]:
    if isinstance(obj, SquaredSpiral):
        return spiral_to_switching(obj), obj
    return obj, None


def _bbox(points) -> tuple[int, int, int, int]:
    return (
        min(p.i for p in points),
        min(p.j for p in points),
        max(p.i for p in points),
        max(p.j for p in points),
    )


def render_ascii(obj) -> str:
    """Character grid with ``o`` for s0, ``x`` for s1 and ``-``/``|`` for segments.

    Rows are printed top to bottom, so ``j`` grows upward as on paper.
    Crossing segments show as ``+``.
    """
    pair, spiral = _parts(obj)
    lo_i, lo_j, hi_i, hi_j = _bbox(pair.points)
    width, height = 2 * (hi_i - lo_i) + 1, 2 * (hi_j - lo_j) + 1
    grid = [[" "] * width for _ in range(height)]

    def cell(i2: int, j2: int) -> tuple[int, int]:
        # doubled coordinates, so in-between positions hold segment glyphs
        return height - 1 - (j2 - 2 * lo_j), i2 - 2 * lo_i

    for i in range(lo_i, hi_i + 1):
        for j in range(lo_j, hi_j + 1):
            r, c = cell(2 * i, 2 * j)
            grid[r][c] = "."
    if spiral is not None:
        for k in range(len(spiral)):
            a, b = spiral.segment(k)
            glyph = "-" if a.j == b.j else "|"
            lo, hi = sorted((2 * a.i, 2 * b.i)) if a.j == b.j else sorted((2 * a.j, 2 * b.j))
            for t in range(lo + 1, hi):
                r, c = cell(t, 2 * a.j) if a.j == b.j else cell(2 * a.i, t)
                cur = grid[r][c]
                grid[r][c] = glyph if cur in (" ", ".", glyph) else "+"
    for p in pair.s0.points:
        r, c = cell(2 * p.i, 2 * p.j)
        grid[r][c] = "o"
    for p in pair.s1.points:
        r, c = cell(2 * p.i, 2 * p.j)
        grid[r][c] = "x"
    lines = ["".join(row).rstrip() for row in grid]
    legend = f"o = s0, x = s1; columns {lo_i}..{hi_i} left to right, rows {lo_j}..{hi_j} bottom to top"
    return "\n".join(lines + [legend]) + "\n"


_SHADE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52")


def render_svg(obj, spec: RenderSpec = RenderSpec("svg")) -> str:
    """SVG drawing: closed polyline, filled dots for s0, hollow dots for s1.

    With ``spec.free_regions`` every point that owns a free quadrant gets
    that quadrant shaded up to the drawing border.
    """
    pair, spiral = _parts(obj)
    lo_i, lo_j, hi_i, hi_j = _bbox(pair.points)
    c = spec.cell
    margin = c
    w = (hi_i - lo_i) * c + 2 * margin
    h = (hi_j - lo_j) * c + 2 * margin

    def xy(p: Point) -> tuple[int, int]:
        return margin + (p.i - lo_i) * c, margin + (hi_j - p.j) * c

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]
    if spec.free_regions:
        for p, q in free_regions(pair).regions.items():
            if q is None:
                continue
            x, y = xy(p)
            x0, x1 = (0, x) if q in (0, 3) else (x, w)
            y0, y1 = (y, h) if q in (0, 1) else (0, y)
            out.append(
                f'<rect x="{x0}" y="{y0}" width="{x1 - x0}" height="{y1 - y0}" '
                f'fill="{_SHADE[q]}" fill-opacity="0.12"/>'
            )
    if spiral is not None:
        pts = " ".join(f"{x},{y}" for x, y in map(xy, spiral.vertices))
        out.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    r = max(2, c // 8)
    for p in pair.s0.sorted():
        x, y = xy(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="black" stroke="black"/>')
    for p in pair.s1.sorted():
        x, y = xy(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black" stroke-width="2"/>')
    if spec.labels and spiral is not None:
        for k, p in enumerate(spiral.vertices):
            x, y = xy(p)
            out.append(f'<text x="{x + r + 2}" y="{y - r - 2}" font-size="{max(8, c // 3)}" font-family="monospace">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(obj, spec: RenderSpec) -> str:
    if spec.format == "ascii":
        return render_ascii(obj)
    return render_svg(obj, spec)
