"""Free-space machinery for curve-vs-curve Fréchet decisions.

The continuous decision procedure is the classic cell-boundary interval
propagation: within one cell the free space is convex, so the reachable
subset of any cell boundary is a single interval whose upper end coincides
with the upper end of the free interval.  That invariant lets the whole
sweep store one lower endpoint per boundary edge.

Weak (non-monotone) variants reduce to connectivity: 8-neighbour grid
connectivity for the discrete case, adjacency of non-empty free cells
through non-empty shared boundaries for the continuous case.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .geometry import EPS, Curve, ball_segment_clip, dist

INF = float("inf")


def _pts(curve) -> np.ndarray:
    if isinstance(curve, Curve):
        return curve.vertices
    a = np.asarray(curve, dtype=float)
    return a.reshape(-1, 1) if a.ndim == 1 else a


def seg_seg_dist(a, b, c, d) -> float:
    """Minimum distance between closed segments ab and cd (any dimension).

    Quadratic minimization over the unit square with boundary clamping.
    """
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    c = np.asarray(c, float)
    d = np.asarray(d, float)
    u = b - a
    v = d - c
    w = a - c
    uu = float(np.dot(u, u))
    vv = float(np.dot(v, v))
    uv = float(np.dot(u, v))
    uw = float(np.dot(u, w))
    vw = float(np.dot(v, w))
    den = uu * vv - uv * uv
    if den > EPS * max(1.0, uu * vv):
        s = (uv * vw - vv * uw) / den
        t = (uu * vw - uv * uw) / den
        if 0.0 <= s <= 1.0 and 0.0 <= t <= 1.0:
            p = a + s * u
            q = c + t * v
            return float(np.linalg.norm(p - q))
    # Parallel, degenerate, or interior optimum outside the square: the
    # minimum is attained on the boundary, i.e. endpoint vs segment.
    from .geometry import point_segment_dist

    return min(
        point_segment_dist(a, c, d),
        point_segment_dist(b, c, d),
        point_segment_dist(c, a, b),
        point_segment_dist(d, a, b),
    )


# ---------------------------------------------------------------------------
# discrete variants


def discrete_frechet(p_curve, q_curve) -> float:
    """Discrete Fréchet distance (leash length over vertex correspondences)."""
    P = _pts(p_curve)
    Q = _pts(q_curve)
    m, n = len(P), len(Q)
    d2 = np.sum((P[:, None, :] - Q[None, :, :]) ** 2, axis=-1)
    dp = np.empty((m, n))
    dp[0, 0] = d2[0, 0]
    for i in range(1, m):
        dp[i, 0] = max(dp[i - 1, 0], d2[i, 0])
    for j in range(1, n):
        dp[0, j] = max(dp[0, j - 1], d2[0, j])
    for i in range(1, m):
        row = dp[i]
        prev = dp[i - 1]
        for j in range(1, n):
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if row[j - 1] < best:
                best = row[j - 1]
            row[j] = best if best > d2[i, j] else d2[i, j]
    return math.sqrt(float(dp[m - 1, n - 1]))


def decide_discrete(p_curve, q_curve, delta: float) -> bool:
    """Is the discrete Fréchet distance at most delta (closed comparison)?

    Row-vectorized reachability: within a row, a cell is reachable iff it is
    free and some cell at or before it was seeded from the previous row with
    no blocked cell in between.
    """
    P = _pts(p_curve)
    Q = _pts(q_curve)
    m, n = len(P), len(Q)
    thresh = delta * delta + EPS
    d2 = np.sum((P[:, None, :] - Q[None, :, :]) ** 2, axis=-1)
    free = d2 <= thresh
    if not (free[0, 0] and free[m - 1, n - 1]):
        return False
    cols = np.arange(n)
    row = np.logical_and.accumulate(free[0])
    for i in range(1, m):
        fi = free[i]
        # seeds: down or diagonal step from the previous row lands here
        s = row.copy()
        s[1:] |= row[:-1]
        seed = s & fi
        last_blocked = np.maximum.accumulate(np.where(~fi, cols, -1))
        last_seed = np.maximum.accumulate(np.where(seed, cols, -1))
        row = fi & (last_seed > last_blocked)
        if not row.any():
            return False
    return bool(row[n - 1])


def decide_weak_discrete(p_curve, q_curve, delta: float) -> bool:
    """Weak discrete decision: free vertex pairs, 8-neighbour connectivity,
    endpoints pinned to (1,1) and (m,n)."""
    P = _pts(p_curve)
    Q = _pts(q_curve)
    m, n = len(P), len(Q)
    thresh = delta * delta + EPS
    d2 = np.sum((P[:, None, :] - Q[None, :, :]) ** 2, axis=-1)
    free = d2 <= thresh
    if not (free[0, 0] and free[m - 1, n - 1]):
        return False
    seen = np.zeros((m, n), dtype=bool)
    seen[0, 0] = True
    queue = deque([(0, 0)])
    while queue:
        i, j = queue.popleft()
        if i == m - 1 and j == n - 1:
            return True
        for di in (-1, 0, 1):
            ii = i + di
            if ii < 0 or ii >= m:
                continue
            for dj in (-1, 0, 1):
                jj = j + dj
                if jj < 0 or jj >= n or (di == 0 and dj == 0):
                    continue
                if free[ii, jj] and not seen[ii, jj]:
                    seen[ii, jj] = True
                    queue.append((ii, jj))
    return False


# ---------------------------------------------------------------------------
# continuous variants


def _interval(center, delta, a, b):
    return ball_segment_clip(center, delta, a, b)


def decide_continuous(p_curve, q_curve, delta: float) -> bool:
    """Strong continuous decision (monotone free-space reachability)."""
    return _continuous_sweep(p_curve, q_curve, delta, want_matching=False)


def frechet_matching(p_curve, q_curve, delta: float):
    """A monotone matched path in parameter space, or None when infeasible.

    Returns a list of (t, u) pairs with t in [1, m], u in [1, n], starting at
    (1, 1) and ending at (m, n); consecutive waypoints are matched pairs and
    every interpolated pair along the way stays within delta.
    """
    return _continuous_sweep(p_curve, q_curve, delta, want_matching=True)


def _continuous_sweep(p_curve, q_curve, delta: float, want_matching: bool):
    P = _pts(p_curve)
    Q = _pts(q_curve)
    m, n = len(P), len(Q)
    thresh2 = delta * delta + EPS

    def vfree(i, j):
        # free interval of the boundary edge {P_i} x Q_j Q_{j+1}, 0-based
        return _interval(P[i], delta, Q[j], Q[j + 1])

    def hfree(i, j):
        return _interval(Q[j], delta, P[i], P[i + 1])

    free_corner = lambda i, j: float(np.dot(P[i] - Q[j], P[i] - Q[j])) <= thresh2

    if not free_corner(0, 0):
        return None if want_matching else False

    # Reach state: lower endpoint of the reachable interval, or None.  The
    # upper endpoint always equals the free interval's upper endpoint.
    v_low = {}
    h_low = {}
    v_pred = {}
    h_pred = {}
    corner_ok = {}
    corner_pred = {}

    def update_v(i, j, low, pred):
        cur = v_low.get((i, j))
        if cur is None or low < cur - EPS:
            v_low[(i, j)] = low
            v_pred[(i, j)] = pred

    def update_h(i, j, low, pred):
        cur = h_low.get((i, j))
        if cur is None or low < cur - EPS:
            h_low[(i, j)] = low
            h_pred[(i, j)] = pred

    vf_cache = {}
    hf_cache = {}

    def vf(i, j):
        key = (i, j)
        if key not in vf_cache:
            vf_cache[key] = vfree(i, j)
        return vf_cache[key]

    def hf(i, j):
        key = (i, j)
        if key not in hf_cache:
            hf_cache[key] = hfree(i, j)
        return hf_cache[key]

    for i in range(m):
        for j in range(n):
            ok = False
            pred = None
            if free_corner(i, j):
                if i == 0 and j == 0:
                    ok = True
                    pred = ("start",)
                if not ok and j > 0 and (i, j - 1) in v_low:
                    ok = True
                    pred = ("v", i, j - 1)
                if not ok and i > 0 and (i - 1, j) in h_low:
                    ok = True
                    pred = ("h", i - 1, j)
            if ok:
                corner_ok[(i, j)] = True
                corner_pred[(i, j)] = pred
                # Seed outgoing boundary edges with their full free interval;
                # the corner being free pins the interval's lower end to 0.
                if j < n - 1:
                    iv = vf(i, j)
                    if iv is not None:
                        update_v(i, j, iv[0], ("corner", i, j))
                if i < m - 1:
                    ih = hf(i, j)
                    if ih is not None:
                        update_h(i, j, ih[0], ("corner", i, j))
            # Propagate through cell (i, j).
            if i < m - 1 and j < n - 1:
                left = v_low.get((i, j))
                bottom = h_low.get((i, j))
                if left is not None or bottom is not None:
                    iv = vf(i + 1, j)
                    if iv is not None:
                        if bottom is not None:
                            update_v(i + 1, j, iv[0], ("h", i, j))
                        if left is not None and left <= iv[1] + EPS:
                            update_v(i + 1, j, max(left, iv[0]), ("v", i, j))
                    ih = hf(i, j + 1)
                    if ih is not None:
                        if left is not None:
                            update_h(i, j + 1, ih[0], ("v", i, j))
                        if bottom is not None and bottom <= ih[1] + EPS:
                            update_h(i, j + 1, max(bottom, ih[0]), ("h", i, j))

    if (m - 1, n - 1) not in corner_ok:
        return None if want_matching else False
    if not want_matching:
        return True

    # Walk predecessors back from the final corner.  Waypoints: a boundary
    # edge contributes its stored lower endpoint, a corner its grid point.
    waypoints = []
    node = ("corner", m - 1, n - 1)
    guard = 0
    while node is not None:
        guard += 1
        if guard > 4 * (m + 2) * (n + 2):
            raise RuntimeError("matching backtrack failed to terminate")
        kind = node[0]
        if kind == "corner":
            _, i, j = node
            waypoints.append((i + 1.0, j + 1.0))
            node = corner_pred[(i, j)]
            if node == ("start",):
                node = None
        elif kind == "v":
            _, i, j = node
            waypoints.append((i + 1.0, j + 1.0 + v_low[(i, j)]))
            node = v_pred[(i, j)]
        else:  # "h"
            _, i, j = node
            waypoints.append((i + 1.0 + h_low[(i, j)], j + 1.0))
            node = h_pred[(i, j)]
    waypoints.reverse()
    # Collapse exact repeats to keep the polyline tidy.
    cleaned = [waypoints[0]]
    for w in waypoints[1:]:
        if abs(w[0] - cleaned[-1][0]) > EPS or abs(w[1] - cleaned[-1][1]) > EPS:
            cleaned.append(w)
    return cleaned


def decide_weak_continuous(p_curve, q_curve, delta: float) -> bool:
    """Weak continuous decision: a not-necessarily-monotone free-space path.

    Cells with non-empty free space form the nodes; orthogonally adjacent
    cells connect when the shared boundary's free interval is non-empty.
    Convexity of per-cell free space makes this connectivity test exact.
    """
    P = _pts(p_curve)
    Q = _pts(q_curve)
    m, n = len(P), len(Q)
    thresh2 = delta * delta + EPS
    if float(np.dot(P[0] - Q[0], P[0] - Q[0])) > thresh2:
        return False
    if float(np.dot(P[-1] - Q[-1], P[-1] - Q[-1])) > thresh2:
        return False
    if m == 1:
        return all(float(np.dot(P[0] - q, P[0] - q)) <= thresh2 for q in Q)
    if n == 1:
        return all(float(np.dot(p - Q[0], p - Q[0])) <= thresh2 for p in P)

    def cell_nonempty(i, j):
        return seg_seg_dist(P[i], P[i + 1], Q[j], Q[j + 1]) <= delta + EPS

    def v_open(i, j):
        # boundary between cells (i-1, j) and (i, j): edge {P_i} x Q_j Q_{j+1}
        return _interval(P[i], delta, Q[j], Q[j + 1]) is not None

    def h_open(i, j):
        return _interval(Q[j], delta, P[i], P[i + 1]) is not None

    start = (0, 0)
    goal = (m - 2, n - 2)
    if not cell_nonempty(*start) or not cell_nonempty(*goal):
        return False
    seen = {start}
    queue = deque([start])
    while queue:
        i, j = queue.popleft()
        if (i, j) == goal:
            return True
        for ii, jj, open_test in (
            (i - 1, j, lambda: v_open(i, j)),
            (i + 1, j, lambda: v_open(i + 1, j)),
            (i, j - 1, lambda: h_open(i, j)),
            (i, j + 1, lambda: h_open(i, j + 1)),
        ):
            if 0 <= ii <= m - 2 and 0 <= jj <= n - 2 and (ii, jj) not in seen:
                if open_test() and cell_nonempty(ii, jj):
                    seen.add((ii, jj))
                    queue.append((ii, jj))
    return False


# ---------------------------------------------------------------------------
# rendering


class FreeSpaceDiagram:
    """Free-space geometry of a curve pair at one threshold, for inspection
    and rendering."""

    def __init__(self, p_curve, q_curve, delta: float):
        self.P = _pts(p_curve)
        self.Q = _pts(q_curve)
        self.delta = float(delta)

    @property
    def shape(self):
        return (len(self.P), len(self.Q))

    def vertex_free(self, i: int, j: int) -> bool:
        d = self.P[i] - self.Q[j]
        return float(np.dot(d, d)) <= self.delta * self.delta + EPS

    def cell_polygon(self, i: int, j: int, samples: int = 32):
        """Approximate the free region of cell (i, j) as a polygon.

        The free y-interval at fixed t is computed exactly; `samples` columns
        give a 2*samples-gon.  Returns a list of (t, y) pairs in cell-local
        coordinates, or None when every sampled column is empty.
        """
        lows = []
        highs = []
        a, b = self.P[i], self.P[i + 1]
        c, d = self.Q[j], self.Q[j + 1]
        for k in range(samples + 1):
            t = k / samples
            p = (1.0 - t) * a + t * b
            iv = _interval(p, self.delta, c, d)
            if iv is not None:
                lows.append((t, iv[0]))
                highs.append((t, iv[1]))
        if not lows:
            return None
        return lows + highs[::-1]


def render_free_space(p_curve, q_curve, delta: float, variant: str = "continuous",
                      out: str | None = None, cell_px: float = 48.0) -> str:
    """Render the free-space diagram as a deterministic SVG string.

    variant "continuous"/"weak-continuous": filled per-cell free polygons.
    variant "discrete"/"weak-discrete": dots on free vertex pairs.
    1-dimensional inputs get coordinate-value axis labels.  When `out` is
    given the SVG is also written there.
    """
    diagram = FreeSpaceDiagram(p_curve, q_curve, delta)
    P, Q = diagram.P, diagram.Q
    m, n = len(P), len(Q)
    continuous = variant in ("continuous", "weak-continuous")
    if variant not in ("continuous", "weak-continuous", "discrete", "weak-discrete"):
        raise ValueError(f"unknown render variant: {variant}")

    margin = 42.0
    width = margin * 2 + cell_px * max(1, m - 1)
    height = margin * 2 + cell_px * max(1, n - 1)

    def x_of(t):  # t in [0, m-1]
        return margin + cell_px * t

    def y_of(u):  # u in [0, n-1], flipped for SVG
        return height - margin - cell_px * u

    f = lambda v: f"{v:.4f}"
    parts = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{f(width)}" height="{f(height)}" '
        f'viewBox="0 0 {f(width)} {f(height)}">'
    )
    parts.append(f'<rect width="{f(width)}" height="{f(height)}" fill="white"/>')

    if continuous and m > 1 and n > 1:
        for i in range(m - 1):
            for j in range(n - 1):
                poly = diagram.cell_polygon(i, j)
                if poly is None:
                    continue
                pts = " ".join(f"{f(x_of(i + t))},{f(y_of(j + u))}" for t, u in poly)
                parts.append(f'<polygon points="{pts}" fill="#9ecae1" stroke="none"/>')

    # grid
    for i in range(m):
        parts.append(
            f'<line x1="{f(x_of(i))}" y1="{f(y_of(0))}" x2="{f(x_of(i))}" '
            f'y2="{f(y_of(max(1, n - 1)))}" stroke="#bbbbbb" stroke-width="0.5"/>'
        )
    for j in range(n):
        parts.append(
            f'<line x1="{f(x_of(0))}" y1="{f(y_of(j))}" x2="{f(x_of(max(1, m - 1)))}" '
            f'y2="{f(y_of(j))}" stroke="#bbbbbb" stroke-width="0.5"/>'
        )

    if not continuous:
        for i in range(m):
            for j in range(n):
                if diagram.vertex_free(i, j):
                    parts.append(
                        f'<circle cx="{f(x_of(i))}" cy="{f(y_of(j))}" r="{f(cell_px * 0.14)}" '
                        f'fill="#3182bd"/>'
                    )

    # axis labels; 1-d curves label with their coordinate values
    label_p = [f"{P[i][0]:g}" if P.shape[1] == 1 else str(i + 1) for i in range(m)]
    label_q = [f"{Q[j][0]:g}" if Q.shape[1] == 1 else str(j + 1) for j in range(n)]
    step_i = max(1, m // 24)
    step_j = max(1, n // 24)
    for i in range(0, m, step_i):
        parts.append(
            f'<text x="{f(x_of(i))}" y="{f(height - margin + 16.0)}" font-size="9" '
            f'text-anchor="middle" fill="#333333">{label_p[i]}</text>'
        )
    for j in range(0, n, step_j):
        parts.append(
            f'<text x="{f(margin - 8.0)}" y="{f(y_of(j) + 3.0)}" font-size="9" '
            f'text-anchor="end" fill="#333333">{label_q[j]}</text>'
        )
    parts.append(
        f'<text x="{f(width / 2)}" y="{f(14.0)}" font-size="11" text-anchor="middle" '
        f'fill="#111111">free space, delta={delta:g}, variant={variant}</text>'
    )
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if out is not None:
        with open(out, "w") as fh:
            fh.write(svg)
    return svg
