"""Tests for the minimum-vertex curve search.

Minimality is checked against an independent oracle: enumerate curves whose
vertices come from a delta/4 grid over the delta-tube of the input (plus any
forced anchor points) and test each with decide_continuous.  If the oracle
finds nothing cheaper than the search result, the result is at least as good
as exhaustive grid search; soundness of the result itself is re-checked with
decide_continuous directly.
"""

import itertools

import numpy as np
import pytest

from frechet_edit.freespace import decide_continuous
from frechet_edit.geometry import Curve, ball_segment_clip, dist
from frechet_edit.minvertex import (
    CHECK_TOL,
    _clip_fan,
    candidate_points,
    mv_anchored,
    mv_one_sided,
    mv_unanchored,
)


def seg_dist(p, a, b):
    # plain point-to-segment distance, kept local so the oracle does not
    # depend on the package geometry helpers
    d = b - a
    dd = float(np.dot(d, d))
    if dd == 0.0:
        return float(np.linalg.norm(p - a))
    tt = min(max(float(np.dot(p - a, d)) / dd, 0.0), 1.0)
    return float(np.linalg.norm(p - (a + tt * d)))


def tube_grid(P, delta):
    """delta/4 grid over the delta-dilated bounding box, kept to the points
    within delta of the curve."""
    spacing = delta / 4.0
    lo = P.min(axis=0) - delta
    hi = P.max(axis=0) + delta
    xs = np.arange(lo[0], hi[0] + spacing / 2, spacing)
    ys = np.arange(lo[1], hi[1] + spacing / 2, spacing)
    pts = []
    for x in xs:
        for y in ys:
            g = np.array([x, y])
            if len(P) == 1:
                near = np.linalg.norm(g - P[0]) <= delta + 1e-9
            else:
                near = any(seg_dist(g, P[c], P[c + 1]) <= delta + 1e-9
                           for c in range(len(P) - 1))
            if near:
                pts.append(g)
    return pts


def oracle_feasible(P, delta, k, pts, first=None, last=None):
    """Can k grid vertices (with optional forced first/last point) form a
    curve within Fréchet distance delta of P?"""
    Pc = Curve(P)
    if k == 1:
        if first is not None and last is not None \
                and np.linalg.norm(np.asarray(first) - np.asarray(last)) > 1e-12:
            return False
        if first is not None:
            pool = [np.asarray(first, dtype=float)]
        elif last is not None:
            pool = [np.asarray(last, dtype=float)]
        else:
            pool = pts
        return any(decide_continuous(Pc, Curve(np.asarray([z])), delta + 1e-9)
                   for z in pool)
    if first is not None:
        starts = [np.asarray(first, dtype=float)]
    else:
        starts = [z for z in pts if np.linalg.norm(z - P[0]) <= delta + 1e-9]
    if last is not None:
        ends = [np.asarray(last, dtype=float)]
    else:
        ends = [z for z in pts if np.linalg.norm(z - P[-1]) <= delta + 1e-9]
    for a in starts:
        for mids in itertools.product(pts, repeat=k - 2):
            for b in ends:
                seq = np.asarray([a, *mids, b])
                if decide_continuous(Pc, Curve(seq), delta + 1e-9):
                    return True
    return False


def assert_grid_cannot_beat(P, delta, count, first=None, last=None):
    pts = tube_grid(P, delta)
    for k in range(1, count):
        assert not oracle_feasible(P, delta, k, pts, first=first, last=last), \
            "grid oracle found a %d-vertex curve but the search needed %d" % (k, count)


def random_instance(rng):
    m = int(rng.integers(2, 7))
    span = float(rng.choice([2.0, 3.0]))
    xs = np.sort(rng.uniform(0.0, span, m))
    ys = rng.uniform(0.0, 1.0, m)
    P = np.column_stack([xs, ys])
    delta = float(rng.choice([1.0, 1.25]))
    return P, delta


# ---------------------------------------------------------------------------
# frozen unanchored cases


def test_long_segment_needs_two_vertices():
    P = Curve([[0.0, 0.0], [10.0, 0.0]])
    r = mv_unanchored(P, 1.0)
    assert r.count == 2
    assert not r.anchored
    assert decide_continuous(P, r.full_curve(), 1.0 + 1e-9)


def test_shallow_bend_flattens_to_two_vertices():
    P = Curve([[0.0, 0.0], [1.0, 0.01], [2.0, 0.0]])
    r = mv_unanchored(P, 0.5)
    assert r.count == 2


def test_small_curve_collapses_to_one_vertex():
    P = Curve([[0.0, 0.0], [0.5, 0.3], [0.2, -0.2], [0.0, 0.1]])
    r = mv_unanchored(P, 1.0)
    assert r.count == 1
    assert decide_continuous(P, r.full_curve(), 1.0 + 1e-9)


def test_single_vertex_input():
    P = Curve([[3.0, 4.0]])
    r = mv_unanchored(P, 0.5)
    assert r.count == 1


def test_one_oscillation_needs_three_vertices():
    # visits to B((0,0),1), B((4,0),1), B((0,0),1) in order cannot happen on
    # a single straight segment, so two vertices are not enough
    P = Curve([[0.0, 0.0], [4.0, 0.0], [0.0, 0.0]])
    r = mv_unanchored(P, 1.0)
    assert r.count == 3


def test_two_oscillations_keep_all_four_vertices():
    # the alternation A,B,A,B over far-apart balls forces a vertex per visit
    P = Curve([[0.0, 0.0], [4.0, 0.0], [0.0, 0.0], [4.0, 0.0]])
    r = mv_unanchored(P, 1.0)
    assert r.count == 4


def test_non_planar_input_rejected():
    with pytest.raises(ValueError):
        mv_unanchored(Curve([0.0, 1.0, 2.0]), 1.0)


def test_determinism():
    P = Curve([[0.0, 0.0], [2.5, 0.7], [3.5, 0.1]])
    a = mv_unanchored(P, 1.0)
    b = mv_unanchored(P, 1.0)
    assert np.array_equal(a.full_curve().vertices, b.full_curve().vertices)


def test_candidates_contain_input_vertices():
    P = Curve([[0.0, 0.0], [1.37, 0.21], [2.0, -0.5]])
    Z = candidate_points(P, 1.0)
    for v in P.vertices:
        assert any(np.array_equal(v, z) for z in Z)


def test_clip_fan_matches_scalar_clipper():
    rng = np.random.default_rng(5)
    for _ in range(200):
        center = rng.uniform(-2, 2, 2)
        tail = rng.uniform(-2, 2, 2)
        heads = rng.uniform(-2, 2, (5, 2))
        delta = float(rng.uniform(0.2, 2.0))
        ok, lo, hi = _clip_fan(center, delta, tail, heads)
        for i in range(5):
            got = ball_segment_clip(center, delta, tail, heads[i])
            if got is None:
                assert not ok[i]
            else:
                assert ok[i]
                assert abs(lo[i] - got[0]) <= 1e-6
                assert abs(hi[i] - got[1]) <= 1e-6


# ---------------------------------------------------------------------------
# frozen anchored cases


def test_anchored_segment_has_empty_interior():
    P = Curve([[0.0, 0.0], [10.0, 0.0]])
    r = mv_anchored((-0.5, 0.0), (10.5, 0.0), P, 1.0)
    assert r.anchored
    assert r.curve is None
    assert r.count == 2
    assert np.allclose(r.full_curve().vertices,
                       [[-0.5, 0.0], [10.5, 0.0]])


def test_anchors_at_curve_endpoints():
    P = Curve([[0.0, 0.0], [3.0, 4.0]])
    r = mv_anchored((0.0, 0.0), (3.0, 4.0), P, 0.5)
    assert r.curve is None
    assert r.count == 2


def test_anchor_out_of_range_raises():
    P = Curve([[0.0, 0.0], [5.0, 0.0]])
    with pytest.raises(ValueError):
        mv_anchored((3.0, 0.0), (5.0, 0.0), P, 1.0)
    with pytest.raises(ValueError):
        mv_anchored((0.0, 0.0), (0.0, 0.0), P, 1.0)


def test_anchored_oscillation():
    P = Curve([[0.0, 0.0], [4.0, 0.0], [0.0, 0.0]])
    s = (0.5, 0.0)
    t = (-0.5, 0.0)
    r = mv_anchored(s, t, P, 1.0)
    full = r.full_curve()
    assert np.allclose(full.vertices[0], s)
    assert np.allclose(full.vertices[-1], t)
    assert decide_continuous(P, full, 1.0 + CHECK_TOL)
    assert r.count == 3


# ---------------------------------------------------------------------------
# frozen one-sided cases


def test_one_sided_pin_costs_a_vertex():
    # the whole curve fits in one ball, but not in a ball around the pinned
    # start, so pinning raises the count from 1 to 2
    P = Curve([[0.0, 0.0], [1.8, 0.0]])
    assert mv_unanchored(P, 1.0).count == 1
    r = mv_one_sided((0.0, 0.0), P, 1.0, side="start")
    assert r.anchored
    assert r.s == (0.0, 0.0)
    assert r.t is None
    assert r.count == 2
    assert np.allclose(r.full_curve().vertices[0], [0.0, 0.0])
    assert decide_continuous(P, r.full_curve(), 1.0 + CHECK_TOL)


def test_one_sided_matches_pinned_grid_oracle():
    P = np.array([[0.0, 0.0], [1.8, 0.0]])
    r = mv_one_sided((0.0, 0.0), P, 1.0, side="start")
    assert_grid_cannot_beat(P, 1.0, r.count, first=(0.0, 0.0))


def test_one_sided_end():
    P = Curve([[0.0, 0.0], [1.8, 0.0]])
    r = mv_one_sided((1.8, 0.0), P, 1.0, side="end")
    assert r.t == (1.8, 0.0)
    assert r.s is None
    assert r.count == 2
    assert np.allclose(r.full_curve().vertices[-1], [1.8, 0.0])


def test_one_sided_bad_side_raises():
    P = Curve([[0.0, 0.0], [1.0, 0.0]])
    with pytest.raises(ValueError):
        mv_one_sided((0.0, 0.0), P, 1.0, side="middle")
    with pytest.raises(ValueError):
        mv_one_sided((9.0, 0.0), P, 1.0, side="start")


# ---------------------------------------------------------------------------
# randomized comparisons against the grid oracle


def test_unanchored_never_beaten_by_grid_oracle():
    rng = np.random.default_rng(20)
    for _ in range(30):
        P, delta = random_instance(rng)
        r = mv_unanchored(P, delta)
        full = r.full_curve()
        assert decide_continuous(Curve(P), full, delta + 1e-9)
        assert r.count <= len(P)
        assert_grid_cannot_beat(P, delta, r.count)


def test_anchored_soundness_and_oracle():
    rng = np.random.default_rng(21)
    for _ in range(12):
        P, delta = random_instance(rng)
        ang_s, ang_t = rng.uniform(0, 2 * np.pi, 2)
        rad_s, rad_t = rng.uniform(0, 0.9 * delta, 2)
        s = P[0] + rad_s * np.array([np.cos(ang_s), np.sin(ang_s)])
        t = P[-1] + rad_t * np.array([np.cos(ang_t), np.sin(ang_t)])
        r = mv_anchored(s, t, P, delta)
        full = r.full_curve()
        assert np.allclose(full.vertices[0], s)
        assert np.allclose(full.vertices[-1], t)
        assert decide_continuous(Curve(P), full, delta + CHECK_TOL)
        assert r.count <= len(P) + 2
        # fixing the endpoints can never make the curve shorter
        assert mv_unanchored(P, delta).count <= r.count
        assert_grid_cannot_beat(P, delta, r.count, first=tuple(s), last=tuple(t))


def test_one_sided_soundness_and_oracle():
    rng = np.random.default_rng(22)
    for i in range(10):
        P, delta = random_instance(rng)
        side = "start" if i % 2 == 0 else "end"
        ref = P[0] if side == "start" else P[-1]
        ang = float(rng.uniform(0, 2 * np.pi))
        rad = float(rng.uniform(0, 0.9 * delta))
        a = ref + rad * np.array([np.cos(ang), np.sin(ang)])
        r = mv_one_sided(a, P, delta, side=side)
        full = r.full_curve()
        assert decide_continuous(Curve(P), full, delta + CHECK_TOL)
        assert r.count <= len(P) + 2
        assert mv_unanchored(P, delta).count <= r.count
        if side == "start":
            assert_grid_cannot_beat(P, delta, r.count, first=tuple(a))
        else:
            assert_grid_cannot_beat(P, delta, r.count, last=tuple(a))
