from __future__ import annotations

from collections import Counter

import pytest

from hvswitch.enumeration import (
    CSV_HEADER,
    SearchSpace,
    brute_force_hv_convex,
    census,
    enumerate_spirals,
    hv_convex_polyominoes,
    polyomino_pair_scan,
)
from hvswitch.errors import GridTooLarge
from hvswitch.lattice import horizontal_projection, vertical_projection
from hvswitch.spiral import HvSequence, Kind, build_spiral, classify, spiral_to_switching
from hvswitch.switching import validate_switching
from conftest import golden_spiral, spirals
from oracles import cycle_key, distinct_spirals, hv_convex_alternating, turn_runs


def test_space_validation():
    with pytest.raises(ValueError):
        SearchSpace(1, 2)
    with pytest.raises(ValueError):
        SearchSpace(3, 1)
    assert SearchSpace(5, 4).max_vertices == 8


def test_cost_guard():
    SearchSpace(5, 4).check_cost()
    with pytest.raises(GridTooLarge):
        SearchSpace(6, 4).check_cost()
    SearchSpace(6, 5).check_cost(long_running=True)
    SearchSpace(7, 6).check_cost(override=True)


def test_smallest_spaces():
    assert [s.as_lists() for s in enumerate_spirals(SearchSpace(2, 2))] == [[[0, 0], [1, 0], [1, 1], [0, 1]]]
    # rectangles in a 3x3 grid: 3 choose 2 columns times 3 choose 2 rows placements
    assert len(enumerate_spirals(SearchSpace(3, 2), translations=False)) == 9
    assert len(enumerate_spirals(SearchSpace(3, 2))) == 4


@pytest.mark.parametrize("m,half,expected", [(3, 3, 10), (4, 3, 63), (4, 4, 387), (5, 4, 3304)])
def test_counts_match_zigzag_oracle(m, half, expected):
    got = {cycle_key(s.vertices) for s in spirals(m, half)}
    assert len(spirals(m, half)) == expected == len(got)
    assert got == distinct_spirals(m, half)


def test_placements_match_oracle():
    got = enumerate_spirals(SearchSpace(4, 3), translations=False)
    assert {cycle_key(s.vertices, translate=False) for s in got} == distinct_spirals(4, 3, translate=False)
    assert len(got) == 132


def test_output_is_canonical_and_sorted():
    out = spirals(4, 4)
    assert list(out) == sorted(out, key=lambda s: (len(s), s.vertices))
    for s in out:
        assert build_spiral(s.vertices) == s
        assert min(p.i for p in s) == 0 and min(p.j for p in s) == 0


def test_parallel_enumeration_identical():
    assert enumerate_spirals(SearchSpace(4, 4), jobs=3) == list(spirals(4, 4))


def test_windows_only_matches_filter():
    full = [s for s in spirals(5, 4) if classify(s) == Kind.WINDOW]
    assert list(spirals(5, 4, True)) == full


def test_brute_force_examples():
    assert brute_force_hv_convex(validate_switching([(0, 0), (1, 1)], [(1, 0), (0, 1)]))
    assert brute_force_hv_convex(spiral_to_switching(golden_spiral("curl33_h1")))
    assert not brute_force_hv_convex(spiral_to_switching(golden_spiral("even_run_curl")))


def test_census_matches_oracle():
    entries = census(SearchSpace(5, 4), spirals=list(spirals(5, 4)))
    want_real, want_hv = Counter(), Counter()
    for vs in distinct_spirals(5, 4):
        seq = HvSequence.from_runs(turn_runs(vs))
        want_real[seq] += 1
        want_hv[seq] += hv_convex_alternating(vs)
    assert {e.sequence: e.realizable_count for e in entries} == dict(want_real)
    assert {e.sequence: e.hv_convex_count for e in entries} == dict(want_hv)
    assert sum(e.hv_convex_count for e in entries) == 696


def test_census_witness_is_smallest():
    for e in census(SearchSpace(4, 4), spirals=list(spirals(4, 4))):
        members = [s for s in spirals(4, 4) if HvSequence.from_runs(turn_runs(s.vertices)) == e.sequence]
        good = [s for s in members if hv_convex_alternating(s.vertices)]
        assert e.witness == (min(good, key=lambda s: (len(s), s.vertices)) if good else None)
        assert e.hv_convex_count <= e.realizable_count


def test_census_rows():
    entries = census(SearchSpace(4, 3))
    rows = {e.csv_row()[0]: e.csv_row() for e in entries}
    assert rows["(4)"] == ["(4)", 1, 9, 9, '{"vertices":[[0,0],[1,0],[1,1],[0,1]]}']
    assert rows["(1,5)"][3] == 0 and rows["(1,5)"][4] == ""
    assert CSV_HEADER == ["sequence", "repeat", "realizable", "hv_convex", "witness_json"]


def test_census_monotone():
    small = {e.sequence: e.realizable_count for e in census(SearchSpace(4, 3))}
    large = {e.sequence: e.realizable_count for e in census(SearchSpace(5, 4), spirals=list(spirals(5, 4)))}
    assert all(large[k] >= v for k, v in small.items())


def test_census_parallel_equals_serial():
    a = [e.csv_row() for e in census(SearchSpace(4, 4), jobs=1)]
    b = [e.csv_row() for e in census(SearchSpace(4, 4), jobs=4)]
    assert a == b


def test_polyominoes_small():
    # 2x2 grid: 4 monominoes, 4 dominoes, 4 trominoes, 1 square
    assert len(hv_convex_polyominoes(2)) == 13
    assert polyomino_pair_scan(2) == []


def test_polyomino_pairs_three():
    found = polyomino_pair_scan(3)
    assert found
    for p1, p2, pair in found:
        assert horizontal_projection(p1) == horizontal_projection(p2)
        assert vertical_projection(p1) == vertical_projection(p2)
        assert brute_force_hv_convex(pair)


def test_polyomino_guard():
    with pytest.raises(GridTooLarge):
        polyomino_pair_scan(5)
