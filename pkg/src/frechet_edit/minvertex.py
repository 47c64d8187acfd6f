"""Minimum-vertex curves within continuous Fréchet distance delta of a
polyline, in the plane.

mv_unanchored(pi, delta) finds a curve zeta with as few vertices as possible
such that the Fréchet distance between zeta and pi is at most delta.  The
search is exact over a finite candidate vertex set: pi's own vertices,
centers of minimum enclosing balls of contiguous vertex windows that fit in
radius delta, pairwise intersections of the delta-disks around vertices, and
a (delta/4)-spaced grid over the delta-dilated bounding box pruned to the
delta-tube of pi.  Candidate curves are explored by breadth-first layering:
U_j[z] is the exact set of pi-parameters t such that pi[1, t] can be matched
to some j-vertex candidate chain ending at z with the last pair (pi(t), z).
Per layer, U is propagated through the one-row free space of pi against each
candidate edge z -> z'; unions of entry sets propagate exactly because
monotone reachability distributes over unions.  Within one row and one cell
all reachable top intervals share the cell's free-interval top, so U stores
just one lower endpoint per cell.

Since pi's own vertex sequence is always a candidate chain, the search
terminates with at most m vertices.  Minimality is relative to the candidate
set; every returned curve is re-checked against decide_continuous, and the
tests compare counts against an independent grid-enumeration oracle whose
grid is a subset of the candidates, so the result count can never exceed the
oracle's.

mv_anchored(s, t, pi, delta) reduces to the unanchored search: it prepends
and appends a two-point oscillation flag at distance exactly delta around
each anchor (forcing any optimal unanchored curve to pass through the
anchor), then cuts the result at the moments matched to the anchors and
splices the anchors back in.  mv_one_sided applies the same reduction on a
single side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dagcomplex import _clip_many
from .freespace import decide_continuous, frechet_matching
from .geometry import EPS, Curve, dist, min_enclosing_ball, point_segment_dist

TOL = 1e-9
# Anchor splicing works on search output whose vertices carry float noise
# (nearby candidates can tie within the reachability tolerance), so the
# collinearity snap is looser than TOL, and the final distance verification
# is looser still: a vertex dropped by the snap moves the curve by at most
# SNAP_TOL, well inside CHECK_TOL.
SNAP_TOL = 1e-7
CHECK_TOL = 1e-6


# ---------------------------------------------------------------------------
# candidate vertex set


def _point_segment_dist_many(pts: np.ndarray, a: np.ndarray, b: np.ndarray):
    d = b - a
    dd = float(np.dot(d, d))
    if dd <= EPS * EPS:
        return np.linalg.norm(pts - a[None, :], axis=1)
    tt = np.clip((pts - a[None, :]) @ d / dd, 0.0, 1.0)
    proj = a[None, :] + tt[:, None] * d[None, :]
    return np.linalg.norm(pts - proj, axis=1)


def candidate_points(pi, delta: float, seed: int = 0) -> np.ndarray:
    """Candidate vertex locations for the minimum-vertex search.

    Contains pi's vertices, window ball centers, vertex-disk intersection
    points, and the delta/4 grid over the dilated bounding box restricted to
    the delta-tube.  Deduplicated and sorted, so downstream choices are
    deterministic.
    """
    P = pi.vertices if isinstance(pi, Curve) else np.asarray(pi, dtype=float)
    m = len(P)
    gen = []

    centers = []
    for i in range(m):
        for j in range(i, m):
            ball = min_enclosing_ball(P[i:j + 1], seed=seed)
            if ball.radius > delta + EPS:
                break
            centers.append(ball.center)
    if centers:
        gen.append(np.asarray(centers))

    lens = []
    for i in range(m):
        for j in range(i + 1, m):
            d = dist(P[i], P[j])
            if EPS < d <= 2.0 * delta + EPS:
                mid = 0.5 * (P[i] + P[j])
                h = math.sqrt(max(delta * delta - 0.25 * d * d, 0.0))
                u = (P[j] - P[i]) / d
                perp = np.array([-u[1], u[0]])
                lens.append(mid + h * perp)
                lens.append(mid - h * perp)
    if lens:
        gen.append(np.asarray(lens))

    if delta > EPS:
        spacing = delta / 4.0
        lo = P.min(axis=0) - delta
        hi = P.max(axis=0) + delta
        nx = int(math.floor((hi[0] - lo[0]) / spacing)) + 1
        ny = int(math.floor((hi[1] - lo[1]) / spacing)) + 1
        if nx * ny > 2_000_000:
            raise ValueError(
                "candidate grid would need %d points; the curve extent is too "
                "large relative to delta for this search" % (nx * ny))
        xs = lo[0] + spacing * np.arange(nx)
        ys = lo[1] + spacing * np.arange(ny)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        G = np.column_stack([gx.ravel(), gy.ravel()])
        near = np.zeros(len(G), dtype=bool)
        if m == 1:
            near |= np.linalg.norm(G - P[0][None, :], axis=1) <= delta + EPS
        for c in range(m - 1):
            near |= _point_segment_dist_many(G, P[c], P[c + 1]) <= delta + EPS
        if near.any():
            gen.append(G[near])

    # pi's own vertices stay exact and come first: the vertex chain of pi
    # must remain a verbatim member of the candidate chains, and putting the
    # real vertices ahead of generated points makes ties resolve to them.
    # Generated points get rounded so float-noise duplicates collapse.
    V = np.unique(P, axis=0)
    if gen:
        G = np.unique(np.round(np.vstack(gen), 9), axis=0)
        dup = np.zeros(len(G), dtype=bool)
        for v in V:
            dup |= np.all(G == v[None, :], axis=1)
        return np.vstack([V, G[~dup]])
    return V


# ---------------------------------------------------------------------------
# one-row free-space reachability over candidate chains


def _clip_fan(center: np.ndarray, delta: float, tail: np.ndarray, heads: np.ndarray):
    """Free s-intervals of the segments tail -> heads[k] inside the ball of
    radius delta around center.  Returns (ok, lo, hi) with s in [0, 1]."""
    d = heads - tail[None, :]
    dd = np.einsum("ij,ij->i", d, d)
    f = tail - center
    ff = float(np.dot(f, f))
    delta2 = delta * delta
    deg = dd <= EPS * EPS
    dd_safe = np.where(deg, 1.0, dd)
    bq = d @ f
    disc = bq * bq - dd_safe * (ff - delta2)
    ok = disc >= -EPS * np.maximum(1.0, dd_safe)
    sq = np.sqrt(np.maximum(disc, 0.0))
    lo = (-bq - sq) / dd_safe
    hi = (-bq + sq) / dd_safe
    lo = np.where(np.abs(lo) < EPS, 0.0, lo)
    hi = np.where(np.abs(hi - 1.0) < EPS, 1.0, hi)
    ok &= (hi >= -EPS) & (lo <= 1.0 + EPS)
    lo = np.clip(lo, 0.0, 1.0)
    hi = np.clip(hi, 0.0, 1.0)
    point_ok = ff <= delta2 + EPS
    ok = np.where(deg, point_ok, ok)
    lo = np.where(deg, 0.0, lo)
    hi = np.where(deg, 1.0, hi)
    return ok, lo, hi


def _free_table(Z: np.ndarray, P: np.ndarray, delta: float):
    """Per candidate and pi-edge, the free parameter interval in global
    coordinates (cell c spans [c+1, c+2]).  NaN bounds mean empty."""
    m = len(P)
    C = len(Z)
    F_ok = np.zeros((C, m - 1), dtype=bool)
    F_lo = np.full((C, m - 1), np.nan)
    F_hi = np.full((C, m - 1), np.nan)
    for c in range(m - 1):
        ok, lo, hi = _clip_many(Z, P[c], P[c + 1], delta)
        F_ok[:, c] = ok
        F_lo[:, c] = np.where(ok, c + 1 + lo, np.nan)
        F_hi[:, c] = np.where(ok, c + 1 + hi, np.nan)
    return F_ok, F_lo, F_hi


def _dwell_start(F_ok, F_lo, F_hi, m: int) -> np.ndarray:
    """Per candidate z, the smallest t such that the whole suffix pi[t, m]
    stays inside B(z, delta); +inf when even pi_m is out of reach."""
    C = F_ok.shape[0]
    ds = np.full(C, np.inf)
    alive = np.ones(C, dtype=bool)
    for c in range(m - 2, -1, -1):
        covers_top = alive & F_ok[:, c] & (F_hi[:, c] >= c + 2 - TOL)
        ds = np.where(covers_top, np.maximum(F_lo[:, c], c + 1.0), ds)
        alive = covers_top & (F_lo[:, c] <= c + 1 + TOL)
    return ds


def _propagate(U: np.ndarray, Z: np.ndarray, P: np.ndarray, delta: float,
               F_ok, F_lo, F_hi) -> np.ndarray:
    """One breadth-first layer: exact reachable sets after one more vertex.

    U[k, c] is the lower endpoint of the reachable interval on cell c for a
    chain ending at Z[k] (the upper endpoint is always F_hi[k, c]); NaN means
    empty.  For each active tail z the row free space of pi against every
    candidate edge z -> z' is swept left to right, carrying the reachable
    part of each vertical cell boundary.
    """
    C, mc = U.shape
    newU = np.full((C, mc), np.nan)
    active = np.where(~np.all(np.isnan(U), axis=1))[0]
    for kz in active:
        z = Z[kz]
        u_row = U[kz]
        L = [_clip_fan(P[v], delta, z, Z) for v in range(mc + 1)]
        # the left boundary of cell 0 is reachable only via an entry at t = 1
        Lok0, Llo0, _ = L[0]
        if np.isfinite(u_row[0]) and u_row[0] <= 1.0 + TOL:
            lr = np.where(Lok0, Llo0, np.nan)
        else:
            lr = np.full(C, np.nan)
        for c in range(mc):
            e_c = u_row[c]
            has_e = bool(np.isfinite(e_c))
            from_left = ~np.isnan(lr)
            tlo = F_lo[:, c]
            thi = F_hi[:, c]
            if has_e:
                base = np.where(from_left, tlo, np.maximum(e_c, tlo))
            else:
                base = np.where(from_left, tlo, np.nan)
            # tlo/thi are NaN on empty cells, so the comparison masks them
            keep = base <= thi + TOL
            newU[:, c] = np.fmin(newU[:, c], np.where(keep, base, np.nan))
            Rok, Rlo, Rhi = L[c + 1]
            lr_safe = np.where(from_left, lr, np.inf)
            chain = np.where(Rok & (lr_safe <= Rhi + TOL),
                             np.maximum(lr_safe, Rlo), np.inf)
            if has_e:
                chain = np.minimum(chain, np.where(Rok, Rlo, np.inf))
            lr = np.where(np.isinf(chain), np.nan, chain)
    return newU


def _row_witness(u_row, z, zp, P, delta, F_okp, F_lop, F_hip, target: float):
    """Scalar replay of one row propagation: the entry value in u_row's
    pieces from which the top value `target` is reachable, or None."""
    mc = len(u_row)
    lr = None  # (s lower bound on the current cell boundary, entry witness)
    if np.isfinite(u_row[0]) and u_row[0] <= 1.0 + TOL:
        ok, lo, _ = _clip_fan(P[0], delta, z, zp[None, :])
        if ok[0]:
            lr = (float(lo[0]), float(u_row[0]))
    for c in range(mc):
        e_c = u_row[c]
        has_e = bool(np.isfinite(e_c))
        if F_okp[c]:
            tlo = float(F_lop[c])
            thi = float(F_hip[c])
            if lr is not None and tlo - TOL <= target <= thi + TOL:
                return lr[1]
            if has_e and max(e_c, tlo) - TOL <= target <= thi + TOL:
                return float(e_c)
        ok, lo, hi = _clip_fan(P[c + 1], delta, z, zp[None, :])
        nxt = None
        if ok[0]:
            rlo, rhi = float(lo[0]), float(hi[0])
            if has_e:
                nxt = (rlo, float(e_c))
            if lr is not None and lr[0] <= rhi + TOL:
                cand = (max(lr[0], rlo), lr[1])
                if nxt is None or cand[0] < nxt[0]:
                    nxt = cand
        lr = nxt
    return None


def _search_chain(P: np.ndarray, delta: float, Z: np.ndarray, max_layers: int):
    """Shortest candidate chain whose curve is within delta of P; the chain
    is returned as a list of candidate rows."""
    m = len(P)
    C = len(Z)
    F_ok, F_lo, F_hi = _free_table(Z, P, delta)
    ds = _dwell_start(F_ok, F_lo, F_hi, m)

    U = np.full((C, m - 1), np.nan)
    start_ok = np.linalg.norm(Z - P[0][None, :], axis=1) <= delta + EPS
    U[start_ok & F_ok[:, 0], 0] = 1.0
    layers = [U]

    accept_idx = None
    for _ in range(max_layers):
        acc = np.any(~np.isnan(layers[-1]) & (F_hi >= ds[:, None] - TOL), axis=1)
        if acc.any():
            accept_idx = int(np.argmax(acc))
            break
        layers.append(_propagate(layers[-1], Z, P, delta, F_ok, F_lo, F_hi))
    assert accept_idx is not None, "vertex search exceeded its layer bound"

    # pick the accepted handoff value, then walk the layers back down
    row = layers[-1][accept_idx]
    c_star = None
    for c in range(m - 1):
        if np.isfinite(row[c]) and F_hi[accept_idx, c] >= ds[accept_idx] - TOL:
            c_star = c
            break
    assert c_star is not None
    target = min(max(float(row[c_star]), float(ds[accept_idx])),
                 float(F_hi[accept_idx, c_star]))

    chain = [accept_idx]
    k_cur = accept_idx
    for lvl in range(len(layers) - 1, 0, -1):
        Uprev = layers[lvl - 1]
        hit = None
        for kz in np.where(~np.all(np.isnan(Uprev), axis=1))[0]:
            e = _row_witness(Uprev[int(kz)], Z[int(kz)], Z[k_cur], P, delta,
                             F_ok[k_cur], F_lo[k_cur], F_hi[k_cur], target)
            if e is not None:
                hit = (int(kz), float(e))
                break
        assert hit is not None, "witness chain broke during backtracking"
        k_cur, target = hit
        chain.append(k_cur)
    chain.reverse()
    return [Z[k] for k in chain]


# ---------------------------------------------------------------------------
# results and the public operations


@dataclass
class MvResult:
    """A minimum-vertex answer.

    For the unanchored search, `curve` is the whole answer.  For anchored
    searches `curve` holds only the free interior part (None when empty) and
    the fixed anchors are in `s` and `t`; the contract is that the anchors
    concatenated around `curve` are within delta of the input.
    """
    curve: Curve | None
    anchored: bool = False
    s: tuple | None = None
    t: tuple | None = None

    @property
    def count(self) -> int:
        n = 0 if self.curve is None else len(self.curve)
        return n + (self.s is not None) + (self.t is not None)

    def full_curve(self) -> Curve:
        rows = []
        if self.s is not None:
            rows.append(list(self.s))
        if self.curve is not None:
            rows.extend(self.curve.vertices.tolist())
        if self.t is not None:
            rows.append(list(self.t))
        return Curve(np.asarray(rows, dtype=float))


def _as_plane_curve(pi) -> Curve:
    P = pi if isinstance(pi, Curve) else Curve(pi)
    if P.dim != 2:
        raise ValueError("minimum-vertex search works in the plane only")
    return P


def _dedup_rows(rows, atol=1e-12):
    out = [np.asarray(rows[0], dtype=float)]
    for r in rows[1:]:
        r = np.asarray(r, dtype=float)
        if np.abs(r - out[-1]).max() > atol:
            out.append(r)
    return out


def mv_unanchored(pi, delta: float, seed: int = 0) -> MvResult:
    """A curve with the fewest vertices within Fréchet distance delta of pi.

    Exact over the candidate_points set; the result is always re-validated
    with decide_continuous and never has more vertices than pi.
    """
    P = _as_plane_curve(pi)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    V = P.vertices
    m = len(V)

    ball = min_enclosing_ball(V, seed=seed)
    if ball.radius <= delta + EPS:
        # one vertex at the ball center covers the whole curve
        return MvResult(curve=Curve(np.asarray([ball.center])))

    Z = candidate_points(P, delta, seed=seed)
    rows = _search_chain(V, delta, Z, max_layers=m + 2)
    zeta = Curve(np.asarray(_dedup_rows(rows)))
    assert len(zeta) <= m, "search returned more vertices than pi itself"
    assert decide_continuous(P, zeta, delta + 1e-9), \
        "minimum-vertex result failed its distance check"
    return MvResult(curve=zeta)


# --- anchored reduction ----------------------------------------------------


def _flag_rows(anchor: np.ndarray, direction: np.ndarray, delta: float):
    """Oscillation flag ⟨p1, p2, p1, p2, anchor⟩: p1 and p2 sit on the line
    through the anchor perpendicular to `direction`, at distance exactly
    delta.  The only point within delta of both p1 and p2 is the anchor, so
    matching the oscillation forces a visit to it."""
    d = np.asarray(direction, dtype=float)
    nn = float(np.linalg.norm(d))
    if nn <= EPS:
        d = np.array([1.0, 0.0])
        nn = 1.0
    u = d / nn
    perp = np.array([-u[1], u[0]])
    p1 = anchor + delta * perp
    p2 = anchor - delta * perp
    return [p1, p2, p1, p2, np.asarray(anchor, dtype=float)]


def _build_augmented(rows):
    """Curve from rows with exact consecutive duplicates merged, plus the
    map from original row index to vertex index."""
    kept = [np.asarray(rows[0], dtype=float)]
    remap = {0: 0}
    for idx in range(1, len(rows)):
        r = np.asarray(rows[idx], dtype=float)
        if np.array_equal(r, kept[-1]):
            remap[idx] = len(kept) - 1
        else:
            kept.append(r)
            remap[idx] = len(kept) - 1
    return Curve(np.asarray(kept)), remap


def _param_moment(waypoints, a_target: float, last: bool) -> float:
    """The matched parameter on the second curve at the first (or last)
    moment the first-curve parameter equals a_target."""
    if not last:
        for k in range(len(waypoints)):
            a, b = waypoints[k]
            if a >= a_target - 1e-12:
                if k == 0 or a <= a_target + 1e-12:
                    return b
                a0, b0 = waypoints[k - 1]
                frac = (a_target - a0) / (a - a0)
                return b0 + frac * (b - b0)
    else:
        for k in range(len(waypoints) - 1, -1, -1):
            a, b = waypoints[k]
            if a <= a_target + 1e-12:
                if k == len(waypoints) - 1 or a >= a_target - 1e-12:
                    return b
                a1, b1 = waypoints[k + 1]
                frac = (a_target - a) / (a1 - a)
                return b + frac * (b1 - b)
    raise AssertionError("parameter %.6f not covered by the matching" % a_target)


def _interior_vertices(zeta: Curve, b_lo: float, b_hi: float):
    """Vertices of zeta with parameter strictly between b_lo and b_hi."""
    out = []
    for i in range(1, len(zeta) + 1):
        if b_lo < i < b_hi:
            out.append(zeta.vertices[i - 1])
    return out


def _splice_start(W, s):
    """Replace the cut point W[0] = x by the anchor s: drop x when it is s or
    lies on the segment from s to the next vertex, otherwise keep both."""
    x = W[0]
    if dist(x, s) <= SNAP_TOL:
        return [np.asarray(s, dtype=float)] + W[1:]
    if len(W) >= 2 and point_segment_dist(x, s, W[1]) <= SNAP_TOL:
        return [np.asarray(s, dtype=float)] + W[1:]
    return [np.asarray(s, dtype=float)] + W


def _splice_end(W, t):
    y = W[-1]
    if dist(y, t) <= SNAP_TOL:
        return W[:-1] + [np.asarray(t, dtype=float)]
    if len(W) >= 2 and point_segment_dist(y, W[-2], t) <= SNAP_TOL:
        return W[:-1] + [np.asarray(t, dtype=float)]
    return W + [np.asarray(t, dtype=float)]


def mv_anchored(s, t, pi, delta: float, seed: int = 0) -> MvResult:
    """Minimum-vertex interior curve sigma such that s ∘ sigma ∘ t is within
    Fréchet distance delta of pi.  Requires both anchors within delta of the
    matching endpoint of pi."""
    P = _as_plane_curve(pi)
    V = P.vertices
    m = len(V)
    s = np.asarray(s, dtype=float).reshape(2)
    t = np.asarray(t, dtype=float).reshape(2)
    if dist(s, V[0]) > delta + EPS:
        raise ValueError("anchor s is farther than delta from the curve start")
    if dist(t, V[-1]) > delta + EPS:
        raise ValueError("anchor t is farther than delta from the curve end")

    dir_s = V[1] - V[0] if m >= 2 else np.array([1.0, 0.0])
    dir_t = V[-1] - V[-2] if m >= 2 else np.array([1.0, 0.0])
    rows = _flag_rows(s, dir_s, delta) + list(V) + \
        list(reversed(_flag_rows(t, dir_t, delta)))
    s_orig, t_orig = 4, 5 + m
    aug, remap = _build_augmented(rows)

    inner = mv_unanchored(aug, delta, seed=seed)
    zeta = inner.curve
    waypoints = frechet_matching(aug, zeta, delta + 1e-9)
    assert waypoints is not None

    # cut as late as possible at s and as early as possible at t; any moment
    # matched to the anchor is a valid cut, and the narrow cut keeps the
    # fewest vertices.  When the anchors collapse onto the same augmented
    # vertex the two moments can cross, so clamp.
    b_s = _param_moment(waypoints, remap[s_orig] + 1.0, last=True)
    b_t = _param_moment(waypoints, remap[t_orig] + 1.0, last=False)
    if b_s > b_t:
        b_s = b_t

    W = [zeta.point_at(b_s)] + _interior_vertices(zeta, b_s, b_t)
    if b_t > b_s:
        W.append(zeta.point_at(b_t))
    W = _splice_start(W, s)
    W = _splice_end(W, t)
    W = _dedup_rows(W)
    W[0] = s.copy()
    W[-1] = t.copy()

    assert len(W) <= max(inner.count, 2), \
        "anchor splice grew the curve beyond the unanchored answer"
    assert len(W) <= m + 2
    full = Curve(np.asarray(W))
    assert decide_continuous(P, full, delta + CHECK_TOL), \
        "anchored result failed its distance check"

    interior = Curve(np.asarray(W[1:-1])) if len(W) > 2 else None
    return MvResult(curve=interior, anchored=True,
                    s=tuple(map(float, s)), t=tuple(map(float, t)))


def mv_one_sided(anchor, pi, delta: float, side: str = "start",
                 seed: int = 0) -> MvResult:
    """Minimum-vertex curve with one fixed endpoint: for side="start" the
    result sigma satisfies d_F(pi, anchor ∘ sigma) ≤ delta, for side="end"
    d_F(pi, sigma ∘ anchor) ≤ delta."""
    P = _as_plane_curve(pi)
    V = P.vertices
    m = len(V)
    a = np.asarray(anchor, dtype=float).reshape(2)
    if side == "start":
        if dist(a, V[0]) > delta + EPS:
            raise ValueError("anchor is farther than delta from the curve start")
        dir_s = V[1] - V[0] if m >= 2 else np.array([1.0, 0.0])
        rows = _flag_rows(a, dir_s, delta) + list(V)
        a_orig = 4
    elif side == "end":
        if dist(a, V[-1]) > delta + EPS:
            raise ValueError("anchor is farther than delta from the curve end")
        dir_t = V[-1] - V[-2] if m >= 2 else np.array([1.0, 0.0])
        rows = list(V) + list(reversed(_flag_rows(a, dir_t, delta)))
        a_orig = m
    else:
        raise ValueError("side must be 'start' or 'end'")
    aug, remap = _build_augmented(rows)

    inner = mv_unanchored(aug, delta, seed=seed)
    zeta = inner.curve
    waypoints = frechet_matching(aug, zeta, delta + 1e-9)
    assert waypoints is not None

    if side == "start":
        b_a = _param_moment(waypoints, remap[a_orig] + 1.0, last=True)
        W = [zeta.point_at(b_a)] + _interior_vertices(zeta, b_a, len(zeta) + 0.5)
        W = _splice_start(W, a)
        W = _dedup_rows(W)
        W[0] = a.copy()
        interior = Curve(np.asarray(W[1:])) if len(W) > 1 else None
        res = MvResult(curve=interior, anchored=True, s=tuple(map(float, a)))
    else:
        b_a = _param_moment(waypoints, remap[a_orig] + 1.0, last=False)
        W = _interior_vertices(zeta, 0.5, b_a) + [zeta.point_at(b_a)]
        W = _splice_end(W, a)
        W = _dedup_rows(W)
        W[-1] = a.copy()
        interior = Curve(np.asarray(W[:-1])) if len(W) > 1 else None
        res = MvResult(curve=interior, anchored=True, t=tuple(map(float, a)))

    assert len(W) <= max(inner.count, 2), \
        "anchor splice grew the curve beyond the unanchored answer"
    assert len(W) <= m + 2
    assert decide_continuous(P, res.full_curve(), delta + CHECK_TOL), \
        "one-sided result failed its distance check"
    return res
