"""Directed acyclic complexes and free-space reachability over their product.

A complex is a finite set of named vertices with positions, directed edges,
and designated start / terminal vertices.  A polygonal curve is the special
case of a path complex.  The edit algorithms encode "curve with allowed
edits" as a complex whose maximal paths enumerate the edited curves; deciding
whether some edited curve lies within Fréchet distance delta of a fixed curve
is then reachability in the free space of the product of two complexes.

The sweep generalizes the classic free-space interval propagation: the
product's cells are pairs (edge of C1, edge of C2), and cell boundaries are
(vertex, edge) pairs.  On any boundary edge, the reachable subset is a single
interval whose upper end equals the free interval's upper end, so one stored
lower endpoint per boundary suffices.  Processing vertex pairs in topological
order finalizes every boundary before it is read.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .geometry import EPS, Curve

INF = float("inf")


class DagComplex:
    """Directed acyclic graph with vertex positions and start/terminal sets."""

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = int(dim)
        self._index: dict = {}
        self._names: list = []
        self._points: list = []
        self._edge_set: set = set()
        self._edges: list = []  # (tail_idx, head_idx)
        self._starts: list = []
        self._terminals: list = []

    # construction ----------------------------------------------------------

    def add_vertex(self, name, point) -> None:
        if name in self._index:
            raise ValueError(f"duplicate vertex {name!r}")
        p = np.asarray(point, dtype=float).reshape(-1)
        if p.shape != (self.dim,):
            raise ValueError(f"vertex {name!r}: expected {self.dim} coordinates")
        self._index[name] = len(self._names)
        self._names.append(name)
        self._points.append(p)

    def add_edge(self, tail, head) -> None:
        t = self._index[tail]
        h = self._index[head]
        if (t, h) in self._edge_set:
            return
        self._edge_set.add((t, h))
        self._edges.append((t, h))
        self._in_cache = None

    def add_start(self, name) -> None:
        i = self._index[name]
        if i not in self._starts:
            self._starts.append(i)

    def add_terminal(self, name) -> None:
        i = self._index[name]
        if i not in self._terminals:
            self._terminals.append(i)

    # inspection ------------------------------------------------------------

    def __len__(self):
        return len(self._names)

    @property
    def num_edges(self):
        return len(self._edges)

    @property
    def vertex_names(self):
        return list(self._names)

    @property
    def starts(self):
        return [self._names[i] for i in self._starts]

    @property
    def terminals(self):
        return [self._names[i] for i in self._terminals]

    def point(self, name) -> np.ndarray:
        return self._points[self._index[name]].copy()

    def has_vertex(self, name) -> bool:
        return name in self._index

    def edges(self):
        return [(self._names[t], self._names[h]) for t, h in self._edges]

    def out_neighbors(self, name):
        i = self._index[name]
        return [self._names[h] for t, h in self._edges if t == i]

    # validation ------------------------------------------------------------

    def topological_order(self) -> list:
        """Vertex names in a topological order; raises naming a cycle if the
        complex has one."""
        n = len(self._names)
        indeg = [0] * n
        out = [[] for _ in range(n)]
        for t, h in self._edges:
            out[t].append(h)
            indeg[h] += 1
        ready = deque(i for i in range(n) if indeg[i] == 0)
        order = []
        while ready:
            i = ready.popleft()
            order.append(i)
            for h in out[i]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
        if len(order) < n:
            cycle = self._find_cycle(out, set(range(n)) - set(order))
            pretty = " -> ".join(repr(self._names[i]) for i in cycle)
            raise ValueError(f"complex contains a cycle: {pretty}")
        return [self._names[i] for i in order]

    def _find_cycle(self, out, leftover):
        # every leftover vertex lies on or leads into a cycle; walk until a
        # vertex repeats, then trim to the loop
        start = min(leftover, key=lambda i: i)
        seen = {}
        path = []
        v = start
        while v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = next(h for h in out[v] if h in leftover)
        cyc = path[seen[v]:] + [v]
        return cyc

    def validate(self) -> None:
        if not self._starts:
            raise ValueError("complex has no start vertex")
        if not self._terminals:
            raise ValueError("complex has no terminal vertex")
        self.topological_order()


def path_complex(curve, name_prefix: str = "v") -> DagComplex:
    """The complex of a single curve: a path, first vertex start, last
    terminal.  Vertex names are (name_prefix, i) with 1-based i."""
    if isinstance(curve, Curve):
        pts = curve.vertices
    else:
        pts = np.asarray(curve, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
    c = DagComplex(pts.shape[1])
    for i, p in enumerate(pts):
        c.add_vertex((name_prefix, i + 1), p)
    for i in range(len(pts) - 1):
        c.add_edge((name_prefix, i + 1), (name_prefix, i + 2))
    c.add_start((name_prefix, 1))
    c.add_terminal((name_prefix, len(pts)))
    return c


# ---------------------------------------------------------------------------
# free interval precomputation (vectorized over ball centers)


def _clip_many(centers: np.ndarray, a: np.ndarray, b: np.ndarray, delta: float):
    """Free parameter intervals of segment ab against balls of radius delta
    around each center.  Returns (ok, lo, hi) arrays."""
    d = b - a
    dd = float(np.dot(d, d))
    w = centers - a[None, :]
    ww = np.einsum("ij,ij->i", w, w)
    delta2 = delta * delta
    n = len(centers)
    if dd <= EPS * EPS:
        ok = ww <= delta2 + EPS
        lo = np.zeros(n)
        hi = np.ones(n)
        return ok, lo, hi
    bq = w @ d
    disc = bq * bq - dd * (ww - delta2)
    ok = disc >= -EPS * max(1.0, dd)
    sq = np.sqrt(np.maximum(disc, 0.0))
    lo = (bq - sq) / dd
    hi = (bq + sq) / dd
    # snap tiny over/undershoot onto the endpoints, reject clean misses
    lo = np.where(np.abs(lo) < EPS, 0.0, lo)
    hi = np.where(np.abs(hi - 1.0) < EPS, 1.0, hi)
    ok &= (hi >= -EPS) & (lo <= 1.0 + EPS)
    lo = np.clip(lo, 0.0, 1.0)
    hi = np.clip(hi, 0.0, 1.0)
    return ok, lo, hi


# ---------------------------------------------------------------------------
# product reachability


class ProductReach:
    """Result of a product free-space sweep.

    Exposes which terminal corners were reached and reconstructs witness
    paths.  Vertex arguments are names in the respective complexes.
    """

    def __init__(self, c1, c2, reached_corners, corner_pred, v_pred, h_pred,
                 reached_terminals):
        self._c1 = c1
        self._c2 = c2
        self._corners = reached_corners
        self._corner_pred = corner_pred
        self._v_pred = v_pred
        self._h_pred = h_pred
        self.reached_terminals = reached_terminals  # list of (name1, name2)

    @property
    def feasible(self) -> bool:
        return bool(self.reached_terminals)

    def corner_reached(self, name1, name2) -> bool:
        i = self._c1._index[name1]
        j = self._c2._index[name2]
        return (i, j) in self._corners

    def chain(self, name1=None, name2=None):
        """Entity chain of one witness path, start corner first.

        Entities are ('corner', n1, n2), ('v', n1, (t2, h2)), or
        ('h', (t1, h1), n2) with vertex names.  Defaults to the first reached
        terminal pair."""
        if name1 is None or name2 is None:
            if not self.reached_terminals:
                return None
            name1, name2 = self.reached_terminals[0]
        i = self._c1._index[name1]
        j = self._c2._index[name2]
        if (i, j) not in self._corners:
            return None
        n1 = self._c1._names
        n2 = self._c2._names
        e1 = self._c1._edges
        e2 = self._c2._edges
        out = []
        node = ("c", i, j)
        guard = 0
        limit = 4 * (len(n1) * len(n2) + len(n1) * len(e2) + len(e1) * len(n2)) + 8
        while node is not None:
            guard += 1
            if guard > limit:
                raise RuntimeError("witness backtrack failed to terminate")
            kind = node[0]
            if kind == "c":
                _, i, j = node
                out.append(("corner", n1[i], n2[j]))
                node = self._corner_pred[(i, j)]
                if node == ("start",):
                    node = None
            elif kind == "v":
                _, i, fi = node
                t, h = e2[fi]
                out.append(("v", n1[i], (n2[t], n2[h])))
                node = self._v_pred[(i, fi)]
            else:
                _, ei, j = node
                t, h = e1[ei]
                out.append(("h", (n1[t], n1[h]), n2[j]))
                node = self._h_pred[(ei, j)]
        out.reverse()
        return out

    def _side_path(self, chain, side):
        if chain is None:
            return None
        seq = []
        for ent in chain:
            if ent[0] == "corner":
                seq.append(ent[1 + side])
            elif ent[0] == "h" and side == 1:
                seq.append(ent[2])
            elif ent[0] == "v" and side == 0:
                seq.append(ent[1])
        path = []
        for name in seq:
            if not path or path[-1] != name:
                path.append(name)
        return path

    def curve1_path(self, name1=None, name2=None):
        """C1 vertex names visited by a witness path, in order."""
        return self._side_path(self.chain(name1, name2), 0)

    def curve2_path(self, name1=None, name2=None):
        """C2 vertex names visited by a witness path, in order."""
        return self._side_path(self.chain(name1, name2), 1)


def product_reachability(c1: DagComplex, c2: DagComplex, delta: float) -> ProductReach:
    """Free-space reachability over the product of two complexes.

    A terminal corner (t1, t2) is reached when some pair of monotone
    traversals, one along a start-to-t1 path of c1 and one along a
    start-to-t2 path of c2, stays within distance delta throughout.
    """
    if c1.dim != c2.dim:
        raise ValueError("complexes live in different dimensions")
    c1.validate()
    c2.validate()
    delta = float(delta)

    pos1 = np.asarray(c1._points)
    pos2 = np.asarray(c2._points)
    edges1 = c1._edges
    edges2 = c2._edges
    nv1, nv2 = len(pos1), len(pos2)

    # corner freeness
    diff = pos1[:, None, :] - pos2[None, :, :]
    corner_free = np.einsum("ijk,ijk->ij", diff, diff) <= delta * delta + EPS

    # free intervals of product boundary edges, vectorized per graph edge:
    # vfree[fi] covers {vertex of C1} x edge fi of C2, hfree[ei] the mirror
    vfree = []
    for (t, h) in edges2:
        vfree.append(_clip_many(pos1, pos2[t], pos2[h], delta))
    hfree = []
    for (t, h) in edges1:
        hfree.append(_clip_many(pos2, pos1[t], pos1[h], delta))

    out1 = [[] for _ in range(nv1)]
    for ei, (t, h) in enumerate(edges1):
        out1[t].append((ei, h))
    out2 = [[] for _ in range(nv2)]
    for fi, (t, h) in enumerate(edges2):
        out2[t].append((fi, h))

    topo1 = [c1._index[name] for name in c1.topological_order()]
    topo2 = [c2._index[name] for name in c2.topological_order()]

    starts1 = set(c1._starts)
    starts2 = set(c2._starts)

    v_low: dict = {}
    h_low: dict = {}
    v_pred: dict = {}
    h_pred: dict = {}
    corners: set = set()
    corner_pred: dict = {}

    def upd_v(key, low, pred):
        cur = v_low.get(key)
        if cur is None or low < cur - EPS:
            v_low[key] = low
            v_pred[key] = pred

    def upd_h(key, low, pred):
        cur = h_low.get(key)
        if cur is None or low < cur - EPS:
            h_low[key] = low
            h_pred[key] = pred

    for u in topo1:
        cf_row = corner_free[u]
        for v in topo2:
            # finalize corner (u, v)
            if cf_row[v]:
                pred = None
                if u in starts1 and v in starts2:
                    pred = ("start",)
                if pred is None:
                    for fi, _h in _incoming_cache(c2, v):
                        if (u, fi) in v_low:
                            pred = ("v", u, fi)
                            break
                if pred is None:
                    for ei, _h in _incoming_cache(c1, u):
                        if (ei, v) in h_low:
                            pred = ("h", ei, v)
                            break
                if pred is not None:
                    corners.add((u, v))
                    corner_pred[(u, v)] = pred
                    # seed outgoing boundaries with their full free intervals
                    for fi, _h in out2[v]:
                        ok, lo, hi = vfree[fi]
                        if ok[u]:
                            upd_v((u, fi), float(lo[u]), ("c", u, v))
                    for ei, _h in out1[u]:
                        ok, lo, hi = hfree[ei]
                        if ok[v]:
                            upd_h((ei, v), float(lo[v]), ("c", u, v))
            # propagate through every cell with bottom-left corner (u, v)
            for ei, u2 in out1[u]:
                hkey = (ei, v)
                bottom = h_low.get(hkey)
                for fi, v2 in out2[v]:
                    vkey = (u, fi)
                    left = v_low.get(vkey)
                    if left is None and bottom is None:
                        continue
                    ok, lo, hi = vfree[fi]
                    if ok[u2]:
                        if bottom is not None:
                            upd_v((u2, fi), float(lo[u2]), ("h",) + hkey)
                        if left is not None and left <= hi[u2] + EPS:
                            upd_v((u2, fi), max(left, float(lo[u2])), ("v",) + vkey)
                    ok, lo, hi = hfree[ei]
                    if ok[v2]:
                        if left is not None:
                            upd_h((ei, v2), float(lo[v2]), ("v",) + vkey)
                        if bottom is not None and bottom <= hi[v2] + EPS:
                            upd_h((ei, v2), max(bottom, float(lo[v2])), ("h",) + hkey)

    reached_terminals = []
    for t1 in c1._terminals:
        for t2 in c2._terminals:
            if (t1, t2) in corners:
                reached_terminals.append((c1._names[t1], c2._names[t2]))

    return ProductReach(c1, c2, corners, corner_pred, v_pred, h_pred,
                        reached_terminals)


def _incoming_cache(c: DagComplex, v: int):
    """Edge indices entering v, memoized on the complex."""
    cache = getattr(c, "_in_cache", None)
    if cache is None:
        cache = [[] for _ in range(len(c._names))]
        for ei, (t, h) in enumerate(c._edges):
            cache[h].append((ei, t))
        c._in_cache = cache
    return cache[v]
