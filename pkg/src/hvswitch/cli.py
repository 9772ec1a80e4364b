"""Command-line front end.

Exit codes: 0 hv-convex (or success), 1 valid but not hv-convex, 2 invalid
input or parameters, 3 the two hv-convexity conditions disagree.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from pathlib import Path

from . import __version__
from .characterize import even_run_witness, window_certificate, window_size
from .enumeration import CSV_HEADER, SearchSpace, census, enumerate_spirals
from .errors import HvSwitchError
from .generate import STYLES, gen_curl_33, gen_curl_35, gen_window, insert_l_paths
from .io import (
    lattice_set_to_json,
    lattice_set_to_text,
    parse_lattice_set,
    parse_spiral,
    parse_switching,
    read_text,
    sniff_kind,
    spiral_to_json,
)
from .lattice import horizontal_projection, vertical_projection
from .render import FORMATS, RenderSpec, render
from .spiral import Kind, SquaredSpiral, classify, hv_sequence, spiral_to_switching
from .switching import dual_set, free_regions, is_hv_convex_by_cover, is_hv_convex_by_pairs

EXIT_OK, EXIT_NOT_CONVEX, EXIT_INVALID, EXIT_DISAGREE = 0, 1, 2, 3


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _load(path: str, kind: str):
    text = read_text(path)
    if kind == "auto":
        kind = sniff_kind(text)
    if kind == "spiral":
        return parse_spiral(text)
    if kind == "switching":
        return parse_switching(text)
    raise HvSwitchError(f"expected a spiral or a switching, got a {kind} file")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    obj = _load(args.input, args.kind)
    spiral = obj if isinstance(obj, SquaredSpiral) else None
    pair = spiral_to_switching(spiral) if spiral is not None else obj
    cover = is_hv_convex_by_cover(pair)
    pairs = is_hv_convex_by_pairs(pair)
    print(f"valid switching: {len(pair)} + {len(pair)} points")
    if spiral is not None:
        kind = classify(spiral)
        seq = hv_sequence(spiral)
        head = f"{kind}"
        cert = None
        if kind == Kind.WINDOW:
            cert = window_certificate(spiral)
            if cert is not None:
                head += f", size {window_size(cert, spiral)}"
        print(f"{head}, sequence {seq}, hv-convex: {_yes(cover)}")
        if kind == Kind.WINDOW:
            print("certificate: " + (json.dumps(cert.as_dict()) if cert else "none"))
        else:
            wit = even_run_witness(spiral)
            if wit is not None:
                print("even run witness: " + json.dumps(wit.as_dict()))
    else:
        print(f"hv-convex: {_yes(cover)}")
    print(f"covering condition: {_yes(cover)}; pairwise condition: {_yes(pairs)}")
    if args.free_regions:
        for p, q in free_regions(pair).regions.items():
            print(f"  F{tuple(p)} = " + ("none" if q is None else f"Z{q}"))
    if cover != pairs:
        print("error: the covering and pairwise conditions disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK if cover else EXIT_NOT_CONVEX


def cmd_gen(args) -> int:
    if args.family == "window":
        s = gen_window(args.n)
    elif args.family == "curl33":
        s = gen_curl_33(args.h, args.style)
        if args.insert_l_paths:
            s = insert_l_paths(s, args.insert_l_paths)
    else:
        s = gen_curl_35()
    _emit(spiral_to_json(s), args.out)
    print(f"sequence {hv_sequence(s)}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def census_csv(entries) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for e in entries:
        w.writerow(e.csv_row())
    return buf.getvalue()


def cmd_census(args) -> int:
    if args.max_vertices % 2:
        raise HvSwitchError("--max-vertices must be even")
    space = SearchSpace(args.grid, args.max_vertices // 2)
    space.check_cost(args.override_cost_guard, args.long_running)
    spirals = enumerate_spirals(space, args.jobs)
    entries = census(space, args.jobs, spirals)
    out = Path(args.out)
    out.write_text(census_csv(entries), encoding="utf-8")
    manifest = {
        "grid_side": space.grid_side,
        "max_vertices": space.max_vertices,
        "jobs": args.jobs,
        "spirals": len(spirals),
        "sequences": len(entries),
        "quotient": "translation, start vertex, traversal direction",
        "version": __version__,
    }
    mpath = Path(args.manifest) if args.manifest else out.with_suffix(".manifest.json")
    mpath.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"{len(spirals)} spirals, {len(entries)} sequences -> {out}")
    return EXIT_OK


def cmd_render(args) -> int:
    obj = _load(args.input, args.kind)
    spec = RenderSpec(args.format, args.cell, args.labels, args.free_regions)
    _emit(render(obj, spec), args.out)
    return EXIT_OK


def cmd_project(args) -> int:
    a = parse_lattice_set(read_text(args.input))
    for name, proj in (("H", horizontal_projection(a)), ("V", vertical_projection(a))):
        print(f"{name} origin={proj.origin} counts={' '.join(map(str, proj.counts))}")
    return EXIT_OK


def cmd_dual(args) -> int:
    a = parse_lattice_set(read_text(args.set))
    pair = parse_switching(read_text(args.switching))
    d = dual_set(a, pair)
    _emit(lattice_set_to_json(d) if args.format == "json" else lattice_set_to_text(d), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hvswitch", description="hv-convex switching components and squared spirals")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a file and decide hv-convexity")
    c.add_argument("input")
    c.add_argument("--kind", choices=("auto", "spiral", "switching"), default="auto")
    c.add_argument("--free-regions", action="store_true", help="list the free region of every point")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="write a generated spiral as JSON")
    g.add_argument("family", choices=("window", "curl33", "curl35"))
    g.add_argument("--n", type=int, default=1, help="window size")
    g.add_argument("--h", type=int, default=1, help="repeat count of (3,3)_h")
    g.add_argument("--style", choices=STYLES, default=STYLES[0])
    g.add_argument("--insert-l-paths", type=int, default=0, metavar="COUNT",
                   help="grow a (3,3)_1 curl by COUNT turns per run")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("census", help="count hv-convex spirals per hv-sequence")
    s.add_argument("--grid", type=int, default=4)
    s.add_argument("--max-vertices", type=int, default=6)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", default="census.csv")
    s.add_argument("--manifest")
    s.add_argument("--long-running", action="store_true", help="use the larger cost limit")
    s.add_argument("--override-cost-guard", action="store_true")
    s.set_defaults(func=cmd_census)

    r = sub.add_parser("render", help="draw a spiral or switching")
    r.add_argument("input")
    r.add_argument("--kind", choices=("auto", "spiral", "switching"), default="auto")
    r.add_argument("--format", choices=FORMATS, default="ascii")
    r.add_argument("--cell", type=int, default=40)
    r.add_argument("--labels", action="store_true")
    r.add_argument("--free-regions", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    j = sub.add_parser("project", help="print the row and column projections of a lattice set")
    j.add_argument("input")
    j.set_defaults(func=cmd_project)

    d = sub.add_parser("dual", help="swap s0 for s1 inside a lattice set")
    d.add_argument("set")
    d.add_argument("switching")
    d.add_argument("--format", choices=("json", "text"), default="json")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dual)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HvSwitchError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
