"""Geometric primitives shared by every other module.

Points are numpy arrays of shape (d,), curves are immutable arrays of shape
(m, d) with m >= 1.  Curve parameters follow the convention that parameter
t in [1, m] addresses the point (1-u)*p_i + u*p_{i+1} for t = i + u, so
integer parameters land exactly on vertices.

All proximity comparisons are closed (<=) with a small absolute tolerance,
so tangent configurations count as touching.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

EPS = 1e-9


def as_point(p) -> np.ndarray:
    """Coerce a sequence of coordinates to a float vector."""
    a = np.asarray(p, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("a point must be a flat, non-empty coordinate sequence")
    return a


def dist(p, q) -> float:
    """Euclidean distance between two points."""
    return float(np.linalg.norm(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)))


def sq_dist(p, q) -> float:
    d = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    return float(np.dot(d, d))


def point_segment_dist(p, a, b) -> float:
    """Distance from point p to the closed segment ab (degenerate ab allowed)."""
    p = np.asarray(p, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ab = b - a
    len2 = float(np.dot(ab, ab))
    if len2 <= 0.0:
        return float(np.linalg.norm(p - a))
    t = float(np.dot(p - a, ab)) / len2
    t = min(1.0, max(0.0, t))
    return float(np.linalg.norm(a + t * ab - p))


@dataclass(frozen=True)
class Ball:
    """Closed ball; center is a read-only numpy vector."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = as_point(self.center)
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        if self.radius < -EPS:
            raise ValueError("ball radius must be non-negative")
        object.__setattr__(self, "radius", max(0.0, float(self.radius)))

    def contains(self, p, tol: float = EPS) -> bool:
        return dist(self.center, p) <= self.radius + tol


def _circumball(boundary: list[np.ndarray]) -> Ball:
    """Smallest ball with every boundary point on its surface.

    For fewer than d+1 points the center is kept inside the affine hull of
    the boundary set, which is exactly the least-norm solution of the
    equidistance system.
    """
    assert boundary, "circumball needs at least one boundary point"
    b0 = boundary[0]
    if len(boundary) == 1:
        return Ball(b0.copy(), 0.0)
    rows = np.array([2.0 * (b - b0) for b in boundary[1:]])
    rhs = np.array([float(np.dot(b, b) - np.dot(b0, b0)) for b in boundary[1:]])
    # Solve for the center relative to b0; lstsq keeps the center in the
    # affine hull when the system is underdetermined.
    shifted_rhs = rhs - rows @ b0
    sol, *_ = np.linalg.lstsq(rows, shifted_rhs, rcond=None)
    center = b0 + sol
    radius = max(float(np.linalg.norm(center - b)) for b in boundary)
    return Ball(center, radius)


def _meb_with_boundary(points: list[np.ndarray], boundary: list[np.ndarray], dim: int) -> Ball:
    """Welzl's recursion, iterative over the point list, recursive only in
    the boundary set (depth at most dim+1)."""
    # an empty boundary set has no ball yet; the first point always starts one
    ball = _circumball(boundary) if boundary else None
    if len(boundary) == dim + 1:
        return ball
    for i, p in enumerate(points):
        if ball is None or not ball.contains(p):
            ball = _meb_with_boundary(points[:i], boundary + [p], dim)
            # Move-to-front: points that defined a ball are checked early
            # on the next pass up the recursion.
            points.insert(0, points.pop(i))
    return ball


def min_enclosing_ball(points: Iterable, seed: int = 0) -> Ball:
    """Minimum enclosing ball of a finite point set, any dimension.

    Randomized incremental (Welzl with move-to-front); the shuffle is driven
    by `seed` so results are reproducible.  Expected linear time in the
    number of points for fixed dimension.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("min_enclosing_ball needs at least one point")
    dim = pts[0].size
    if any(p.size != dim for p in pts):
        raise ValueError("all points must share one dimension")
    rng = random.Random(seed)
    rng.shuffle(pts)
    return _meb_with_boundary(pts, [], dim)


def ball_segment_clip(center, radius: float, a, b):
    """Parameter interval {t in [0,1] : |a + t(b-a) - center| <= radius}.

    Returns (t0, t1) with 0 <= t0 <= t1 <= 1, or None when the segment misses
    the closed ball.  Endpoints within EPS of 0 or 1 are snapped.  A
    degenerate segment (a == b) yields (0.0, 1.0) or None.
    """
    c = np.asarray(center, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    len2 = float(np.dot(d, d))
    if len2 <= EPS * EPS:
        return (0.0, 1.0) if dist(a, c) <= radius + EPS else None
    # |a - c + t d|^2 <= r^2  =>  len2 t^2 + 2 (a-c).d t + |a-c|^2 - r^2 <= 0
    f = a - c
    bq = float(np.dot(f, d))
    cq = float(np.dot(f, f)) - radius * radius
    disc = bq * bq - len2 * cq
    if disc < 0.0:
        if disc < -EPS * max(1.0, len2):
            return None
        disc = 0.0
    root = math.sqrt(disc)
    t0 = (-bq - root) / len2
    t1 = (-bq + root) / len2
    if t1 < -EPS or t0 > 1.0 + EPS:
        return None
    t0 = min(1.0, max(0.0, t0))
    t1 = min(1.0, max(0.0, t1))
    if t0 < EPS:
        t0 = 0.0
    if t1 > 1.0 - EPS:
        t1 = 1.0
    if t0 > t1:
        return None
    return (t0, t1)


def enter_point(p, a, b, delta: float) -> np.ndarray:
    """First point of segment ab (walking from a) within delta of p.

    Raises ValueError when the ball around p misses the segment.
    """
    clip_t = ball_segment_clip(p, delta, a, b)
    if clip_t is None:
        raise ValueError("segment does not meet the ball; no entry point")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a + clip_t[0] * (b - a)


def leave_point(p, a, b, delta: float) -> np.ndarray:
    """Last point of segment ab (walking from a) within delta of p."""
    clip_t = ball_segment_clip(p, delta, a, b)
    if clip_t is None:
        raise ValueError("segment does not meet the ball; no leave point")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a + clip_t[1] * (b - a)


class Curve:
    """Immutable polygonal curve: vertices stacked in an (m, d) array."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=float)
        if v.ndim == 1:
            # Convenience for 1-dimensional curves given as a flat list.
            v = v.reshape(-1, 1)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError("a curve needs at least one vertex of dimension >= 1")
        v = v.copy()
        v.setflags(write=False)
        self.vertices = v

    def __len__(self) -> int:
        return self.vertices.shape[0]

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    def __getitem__(self, i: int) -> np.ndarray:
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Curve) and np.array_equal(self.vertices, other.vertices)

    def __repr__(self) -> str:
        return f"Curve({self.vertices.tolist()})"

    def point_at(self, t: float) -> np.ndarray:
        """Point at parameter t in [1, m] (integer t hits vertex t)."""
        m = len(self)
        if t < 1.0 - EPS or t > m + EPS:
            raise ValueError(f"parameter {t} outside [1, {m}]")
        t = min(float(m), max(1.0, t))
        i = min(int(math.floor(t)), m - 1)
        u = t - i
        if u <= 0.0:
            return self.vertices[i - 1].copy()
        return (1.0 - u) * self.vertices[i - 1] + u * self.vertices[i]

    def subcurve(self, i: int, j: int) -> "Curve":
        """Vertex window ⟨v_i, ..., v_j⟩, 1-based inclusive bounds."""
        if not (1 <= i <= j <= len(self)):
            raise ValueError("invalid subcurve window")
        return Curve(self.vertices[i - 1 : j])

    def reversed(self) -> "Curve":
        return Curve(self.vertices[::-1])


def concat(*parts) -> Curve:
    """Concatenate vertex blocks into one curve.

    Accepts Curves, arrays, and flat scalar lists (1-d).  Exact duplicate
    vertices at block seams are merged so glue values can be written
    naturally.
    """
    rows: list[np.ndarray] = []
    for part in parts:
        if isinstance(part, Curve):
            block = part.vertices
        else:
            block = np.asarray(part, dtype=float)
            if block.size == 0:
                continue
            if block.ndim == 1:
                block = block.reshape(-1, 1)
        for row in block:
            if rows and np.array_equal(rows[-1], row):
                continue
            rows.append(np.array(row, dtype=float))
    if not rows:
        raise ValueError("cannot concatenate into an empty curve")
    return Curve(np.vstack(rows))


def load_curve(path: str) -> Curve:
    """Read a curve from CSV (one vertex per line) or JSON
    {"dim": d, "vertices": [[...], ...]}."""
    text = open(path).read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        if "dim" not in doc or "vertices" not in doc:
            raise ValueError(f"curve file {path}: JSON needs 'dim' and 'vertices'")
        verts = np.asarray(doc["vertices"], dtype=float)
        if verts.ndim == 1:
            verts = verts.reshape(-1, 1)
        if verts.shape[1] != int(doc["dim"]):
            raise ValueError(f"curve file {path}: dim field disagrees with vertex width")
        return Curve(verts)
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([float(x) for x in line.replace(",", " ").split()])
    if not rows:
        raise ValueError(f"curve file {path} holds no vertices")
    return Curve(np.asarray(rows, dtype=float))


def save_curve(curve: Curve, path: str) -> None:
    """Write a curve as CSV (one comma-separated vertex per line)."""
    with open(path, "w") as fh:
        for row in curve.vertices:
            fh.write(",".join(repr(float(x)) for x in row) + "\n")


def save_curve_json(curve: Curve, path: str) -> None:
    with open(path, "w") as fh:
        json.dump({"dim": curve.dim, "vertices": curve.vertices.tolist()}, fh)
        fh.write("\n")


def clip(s, t, curve: Curve, delta: float) -> Curve:
    """Trim the first and last edges of `curve` to the delta-balls of s and t.

    The result is ⟨leave(s, v1 v2), v2, ..., v_{m-1}, enter(t, v_{m-1} v_m)⟩.
    Requires m > 2 and that s (resp. t) is within delta of the first (resp.
    last) edge.  Duplicate vertices at the trimmed ends are not emitted.
    """
    m = len(curve)
    if m <= 2:
        raise ValueError("clip needs a curve with more than two vertices")
    head = leave_point(s, curve[0], curve[1], delta)
    tail = enter_point(t, curve[m - 2], curve[m - 1], delta)
    mid = curve.vertices[1 : m - 1]
    rows = [head]
    for row in mid:
        if not np.allclose(rows[-1], row, rtol=0.0, atol=EPS):
            rows.append(row)
    if not np.allclose(rows[-1], tail, rtol=0.0, atol=EPS):
        rows.append(tail)
    return Curve(np.vstack(rows))


def clip_start(s, curve: Curve, delta: float) -> Curve:
    """One-sided clip: trim only the first edge to the delta-ball of s."""
    m = len(curve)
    if m < 2:
        raise ValueError("clip_start needs a curve with at least two vertices")
    head = leave_point(s, curve[0], curve[1], delta)
    rows = [head]
    for row in curve.vertices[1:]:
        if not np.allclose(rows[-1], row, rtol=0.0, atol=EPS):
            rows.append(row)
    return Curve(np.vstack(rows))


def clip_end(t, curve: Curve, delta: float) -> Curve:
    """One-sided clip: trim only the last edge to the delta-ball of t."""
    m = len(curve)
    if m < 2:
        raise ValueError("clip_end needs a curve with at least two vertices")
    tail = enter_point(t, curve[m - 2], curve[m - 1], delta)
    rows = list(curve.vertices[: m - 1])
    if not np.allclose(rows[-1], tail, rtol=0.0, atol=EPS):
        rows.append(tail)
    return Curve(np.vstack(rows))
