"""Executable window and curl criteria with certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotACurl, NotACurlSequence, NotAWindow
from .lattice import Point, in_quadrant
from .spiral import HvSequence, Kind, SquaredSpiral, classify, runs_with_offsets, turn_profile

HALF = Fraction(1, 2)


def corner_quadrant(s: SquaredSpiral, k: int) -> int:
    """The only quadrant at vertex ``k`` that misses both neighbouring vertices.

    It is spanned by the incoming direction and the reverse of the outgoing
    one; any free region of the vertex has to be this quadrant.
    """
    prev, v, nxt = s[k - 1], s[k], s[k + 1]
    di = (v.i - prev.i) or -(nxt.i - v.i)
    dj = (v.j - prev.j) or -(nxt.j - v.j)
    return {(False, False): 0, (True, False): 1, (True, True): 2, (False, True): 3}[(di > 0, dj > 0)]


@dataclass(frozen=True)
class WindowCertificate:
    """Closed rectangle whose interior points all separate the window's vertices.

    ``rect`` is ``(min_i, min_j, max_i, max_j)``; ``witness`` is an interior
    point off every lattice line.
    """

    rect: tuple
    witness: tuple

    def contains_interior(self, x) -> bool:
        lo_i, lo_j, hi_i, hi_j = self.rect
        return lo_i < x[0] < hi_i and lo_j < x[1] < hi_j

    def as_dict(self) -> dict:
        return {
            "rect": [str(c) for c in self.rect],
            "witness": [str(c) for c in self.witness],
        }


def separates(s: SquaredSpiral, x) -> bool:
    """Vertices at even positions lie in Z0(x) or Z2(x), odd ones in Z1(x) or Z3(x)."""
    for k, v in enumerate(s.vertices):
        qs = (0, 2) if k % 2 == 0 else (1, 3)
        if not (in_quadrant(v, x, qs[0]) or in_quadrant(v, x, qs[1])):
            return False
    return True


def window_certificate(w: SquaredSpiral) -> WindowCertificate | None:
    """Build the separating rectangle of a window, or ``None`` if it is empty.

    Each vertex is sorted into the quadrant class of its corner.  The
    rectangle lies between the highest vertex of classes 0 and 1 and the
    lowest of classes 2 and 3, and between the rightmost of classes 0 and
    3 and the leftmost of classes 1 and 2.
    """
    if classify(w) != Kind.WINDOW:
        raise NotAWindow("window certificate requested for a curl")
    classes: dict[int, list[Point]] = {0: [], 1: [], 2: [], 3: []}
    for k, v in enumerate(w.vertices):
        classes[corner_quadrant(w, k)].append(v)
    lo_i = max(p.i for p in classes[0] + classes[3])
    hi_i = min(p.i for p in classes[1] + classes[2])
    lo_j = max(p.j for p in classes[0] + classes[1])
    hi_j = min(p.j for p in classes[2] + classes[3])
    if lo_i >= hi_i or lo_j >= hi_j:
        return None
    rect = tuple(Fraction(c) for c in (lo_i, lo_j, hi_i, hi_j))
    return WindowCertificate(rect, (rect[0] + HALF, rect[1] + HALF))


def window_size(cert: WindowCertificate, w: SquaredSpiral) -> int:
    """Number of window vertices in each quadrant of the certificate's witness."""
    x = cert.witness
    counts = [sum(1 for v in w.vertices if in_quadrant(v, x, q)) for q in range(4)]
    if len(set(counts)) != 1 or sum(counts) != len(w):
        raise ValueError(f"certificate does not separate the window (quadrant counts {counts})")
    return counts[0]


@dataclass(frozen=True)
class EvenRunWitness:
    v: Point
    w: Point
    between: tuple

    def as_dict(self) -> dict:
        return {
            "v": list(self.v),
            "w": list(self.w),
            "between": [list(p) for p in self.between],
        }


def even_run_witness(c: SquaredSpiral) -> EvenRunWitness | None:
    """First maximal run of even length, framed by its two neighbours."""
    prof = turn_profile(c)
    if len(set(prof)) == 1:
        raise NotACurl("even-run witness requested for a window")
    for start, length in sorted(runs_with_offsets(prof)):
        if length % 2 == 0:
            between = tuple(c[start + t] for t in range(length))
            return EvenRunWitness(c[start - 1], c[start + length], between)
    return None


def sequence_admits_window(seq: HvSequence) -> bool:
    return seq.is_single_run and seq.runs[0] % 4 == 0


def sequence_odd_necessary(seq: HvSequence) -> bool:
    """All runs odd: necessary (not sufficient) for an hv-convex curl."""
    if seq.is_single_run:
        raise NotACurlSequence(f"{seq} has a single run")
    return all(k % 2 for k in seq.runs)
