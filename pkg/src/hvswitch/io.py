"""Reading and writing lattice sets, switchings and spirals (JSON and plain text).

Plain text is line oriented: ``i j`` for points, ``i j c`` for switching
points with ``c`` in ``{0, 1}``.  Blank lines and ``#`` comments are
ignored.  Spirals are JSON only, since their vertex order matters.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .lattice import LatticeSet, Point
from .spiral import SquaredSpiral, build_spiral
from .switching import SwitchingPair, validate_switching


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def _points(raw, key: str) -> list[Point]:
    if not isinstance(raw, list):
        raise ParseError(f"{key!r} must be a list of [i, j] pairs")
    out = []
    for k, p in enumerate(raw):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(c, int) and not isinstance(c, bool) for c in p)):
            raise ParseError(f"{key}[{k}] is not an integer pair: {p!r}")
        out.append(Point(p[0], p[1]))
    return out


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    return obj


def _rows(text: str, width: int):
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != width:
            raise ParseError(f"expected {width} integers, got {len(fields)}", lineno)
        try:
            yield lineno, [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"not an integer in {body!r}", lineno) from None


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


# lattice sets


def lattice_set_to_json(a: LatticeSet) -> str:
    return _dump({"points": [list(p) for p in a.sorted()]})


def lattice_set_to_text(a: LatticeSet) -> str:
    return "".join(f"{p.i} {p.j}\n" for p in a.sorted())


def parse_lattice_set(text: str) -> LatticeSet:
    if _is_json(text):
        return LatticeSet(_points(_load_json(text).get("points"), "points"))
    pts, seen = [], {}
    for lineno, (i, j) in _rows(text, 2):
        p = Point(i, j)
        if p in seen:
            raise ParseError(f"point {tuple(p)} repeats line {seen[p]}", lineno)
        seen[p] = lineno
        pts.append(p)
    return LatticeSet(pts)


# switchings


def switching_to_json(pair: SwitchingPair) -> str:
    return _dump({"s0": [list(p) for p in pair.s0.sorted()], "s1": [list(p) for p in pair.s1.sorted()]})


def switching_to_text(pair: SwitchingPair) -> str:
    rows = [(p, 0) for p in pair.s0.sorted()] + [(p, 1) for p in pair.s1.sorted()]
    return "".join(f"{p.i} {p.j} {c}\n" for p, c in rows)


def parse_switching(text: str) -> SwitchingPair:
    if _is_json(text):
        obj = _load_json(text)
        s0, s1 = _points(obj.get("s0"), "s0"), _points(obj.get("s1"), "s1")
    else:
        s0, s1 = [], []
        for lineno, (i, j, c) in _rows(text, 3):
            if c not in (0, 1):
                raise ParseError(f"component must be 0 or 1, got {c}", lineno)
            (s0 if c == 0 else s1).append(Point(i, j))
    try:
        return validate_switching(LatticeSet(s0), LatticeSet(s1))
    except ValueError as e:
        if type(e) is ValueError:
            raise ParseError(str(e)) from None
        raise


# spirals


def spiral_to_json(s: SquaredSpiral) -> str:
    return _dump({"vertices": s.as_lists()})


def parse_spiral(text: str, canonical: bool = True) -> SquaredSpiral:
    """Validated spiral from ``{"vertices": [[i, j], ...]}``."""
    if not _is_json(text):
        raise ParseError("spiral files must be JSON objects with a 'vertices' list", 1)
    return build_spiral(_points(_load_json(text).get("vertices"), "vertices"), canonical=canonical)


def sniff_kind(text: str) -> str:
    """``spiral``, ``switching`` or ``points`` from the shape of the file."""
    if _is_json(text):
        obj = _load_json(text)
        if "vertices" in obj:
            return "spiral"
        if "s0" in obj or "s1" in obj:
            return "switching"
        if "points" in obj:
            return "points"
        raise ParseError("JSON object has none of 'vertices', 's0'/'s1', 'points'")
    for _, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].split()
        if body:
            return "switching" if len(body) == 3 else "points"
    raise ParseError("empty input")


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")
