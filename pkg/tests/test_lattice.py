from __future__ import annotations

import pytest

from hvswitch.errors import EmptyInput
from hvswitch.lattice import (
    LatticeSet,
    Point,
    horizontal_projection,
    in_quadrant,
    is_4_connected,
    is_hv_convex_polyomino,
    is_q_convex,
    opposite,
    quadrants_of,
    vertical_projection,
)
from conftest import golden_spiral


def test_projections_small():
    a = LatticeSet([(0, 0), (1, 0), (0, 1)])
    h, v = horizontal_projection(a), vertical_projection(a)
    assert (h.origin, h.counts) == (0, (2, 1))
    assert (v.origin, v.counts) == (0, (2, 1))


def test_projection_singleton_keeps_origin():
    a = LatticeSet([(5, 7)])
    assert (horizontal_projection(a).origin, horizontal_projection(a).counts) == (7, (1,))
    assert (vertical_projection(a).origin, vertical_projection(a).counts) == (5, (1,))


def test_projection_count_outside_range_is_zero():
    h = horizontal_projection(LatticeSet([(0, 3), (4, 5)]))
    assert h.counts == (1, 0, 1)
    assert h.count(2) == 0 and h.count(4) == 0 and h.count(9) == 0


def test_curl_rows_hold_two_points():
    s = golden_spiral("curl33_h1")
    h = horizontal_projection(LatticeSet(s.vertices))
    assert set(h.counts) == {2}


def test_empty_projection_raises():
    with pytest.raises(EmptyInput):
        horizontal_projection(LatticeSet())
    with pytest.raises(EmptyInput):
        vertical_projection(LatticeSet())


def test_duplicates_rejected_unless_deduped():
    with pytest.raises(ValueError):
        LatticeSet([(0, 0), (0, 0)])
    assert len(LatticeSet.from_iterable([(0, 0), (0, 0)], dedupe=True)) == 1


def test_bbox_and_set_ops():
    a = LatticeSet([(1, 2), (3, -1)])
    assert a.bbox == (1, -1, 3, 2)
    b = LatticeSet([(1, 2)])
    assert (a - b).sorted() == [Point(3, -1)]
    assert (a & b) == b and (a | b) == a
    with pytest.raises(EmptyInput):
        LatticeSet().bbox


@pytest.mark.parametrize("q", range(4))
def test_point_in_all_its_quadrants(q):
    assert in_quadrant((2, 3), (2, 3), q)


def test_boundary_point_in_two_quadrants():
    assert quadrants_of((1, 0), (0, 0)) == (1, 2)
    assert quadrants_of((-1, 2), (0, 0)) == (3,)


def test_bad_quadrant_index():
    with pytest.raises(ValueError):
        in_quadrant((0, 0), (0, 0), 4)


def test_opposite():
    assert [opposite(q) for q in range(4)] == [2, 3, 0, 1]


def test_polyomino_predicates():
    assert is_hv_convex_polyomino(LatticeSet([(0, 0), (1, 0), (1, 1)]))
    assert not is_hv_convex_polyomino(LatticeSet([(0, 0), (2, 0)]))
    assert not is_hv_convex_polyomino(LatticeSet([(0, 0), (1, 1)]))
    assert not is_4_connected(LatticeSet())
    with pytest.raises(EmptyInput):
        is_hv_convex_polyomino(LatticeSet())


def test_q_convexity():
    assert not is_q_convex(LatticeSet([(0, 0), (2, 0), (0, 2), (2, 2)]))
    assert is_q_convex(LatticeSet([(0, 0)]))
    # the U's notch sees the set in all four quadrants; a diagonal pair is Q-convex but disconnected
    assert not is_q_convex(LatticeSet([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]))
    diag = LatticeSet([(0, 0), (1, 1)])
    assert is_q_convex(diag) and not is_hv_convex_polyomino(diag)
    with pytest.raises(EmptyInput):
        is_q_convex(LatticeSet())
