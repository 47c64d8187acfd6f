"""Continuous strong Fréchet edit distance via weighted layered complexes.

Edits change sigma only (except the two-sided deletion variant): deleting a
vertex removes it and rejoins its neighbors, inserting a vertex adds a new
one anywhere.  The question "can at most k edits bring sigma within
continuous Fréchet distance delta of pi" is answered exactly by building a
DAG complex whose source-to-terminal paths enumerate the edited curves that
fit the budget, then running free-space reachability over the product with
pi (dagcomplex.product_reachability).

Layering makes the budget part of the graph: vertex (tag, i, l) is curve
vertex i carrying l edits paid so far, and every edge raises the layer by
the cost of the edit it encodes.  A deletion edge jumps from sigma_i to
sigma_j and pays the j-i-1 skipped vertices.  An insertion grafts a chain
of auxiliary vertices, one edit per new vertex.  Deleted prefixes become
extra start vertices, deleted suffixes are charged in the terminal cost.

Insertion candidates come from a finite canonical family: for a window
[alpha, beta] of pi and attachment points on sigma, the candidate is the
minimum-vertex curve covering the window clipped to the attachment balls
(minvertex.mv_anchored).  Restricting to this family loses nothing: in any
feasible solution the run of inserted vertices between two kept sigma
vertices is matched to exactly such a clipped window, so it can be replaced
by the canonical curve for that window without raising the cost.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .dagcomplex import DagComplex, path_complex, product_reachability
from .geometry import Curve, ball_segment_clip, clip, clip_end, clip_start
from .minvertex import mv_anchored, mv_one_sided, mv_unanchored

INF = math.inf


def _curve(c) -> Curve:
    if isinstance(c, Curve):
        return c
    a = np.asarray(c, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    return Curve(a)


def _check_budget(k) -> int:
    k = int(k)
    if k < 0:
        raise ValueError("edit budget must be nonnegative")
    return k


# ---------------------------------------------------------------------------
# weighted layered complexes


class WeightedLayeredComplex:
    """A DagComplex over layered copies of one curve's vertices.

    Vertex (tag, i, l) is curve vertex i (1-based) at layer l; the layer
    counts edits paid on arrival there.  Auxiliary inserted vertices are
    named ("g", serial, r) and carry layers the same way.  `term_cost` maps
    each terminal vertex to the total edit count of a solution accepted
    there: its layer plus whatever suffix accounting the terminal implies.
    """

    def __init__(self, cx: DagComplex, k: int, n: int, tag: str):
        self.complex = cx
        self.k = k
        self.n = n
        self.tag = tag
        self.layer: dict = {}
        self.term_cost: dict = {}
        self._serial = itertools.count()

    def vertex(self, i: int, l: int):
        return (self.tag, i, l)

    def validate(self) -> None:
        """Acyclicity plus the layer monotonicity every edit edge must obey."""
        self.complex.validate()
        for tail, head in self.complex.edges():
            lt = self.layer[tail]
            lh = self.layer[head]
            if lh < lt:
                raise ValueError(
                    f"edge {tail!r} -> {head!r} drops the layer from {lt} to {lh}")

    def graft_chain(self, gamma: Curve, tail, head, base_layer: int):
        """Add gamma's vertices as a fresh chain tail -> g1 .. gz -> head.

        Vertex r of the chain sits at layer base_layer + r (one edit per
        inserted vertex).  Either end may be None: a headless chain returns
        its last vertex (caller marks it terminal), a tailless chain starts
        at g1 (caller marks it a start).  Returns (first_name, last_name).
        """
        sid = next(self._serial)
        prev = tail
        first = last = None
        for r, p in enumerate(gamma.vertices, start=1):
            nm = ("g", sid, r)
            self.complex.add_vertex(nm, p)
            self.layer[nm] = base_layer + r
            if prev is not None:
                self.complex.add_edge(prev, nm)
            if first is None:
                first = nm
            prev = last = nm
        if head is not None:
            self.complex.add_edge(prev, head)
        return first, last


def complete_weighted_complex(sigma, k: int, tag: str = "s") -> WeightedLayeredComplex:
    """Deletion complex: k+1 layered copies of sigma.

    Edge sigma_i^l -> sigma_j^{l + (j-i-1)} exists for every i < j whose
    deletion cost fits the budget; j = i+1 gives the free consecutive edges.
    Starts are the prefix-deletion vertices sigma_{i+1}^i, every vertex is a
    terminal, and accepting at sigma_i^l costs l plus the n-i deleted suffix
    vertices.
    """
    sigma = _curve(sigma)
    k = _check_budget(k)
    n = len(sigma)
    cx = DagComplex(sigma.dim)
    wlc = WeightedLayeredComplex(cx, k, n, tag)
    for i in range(1, n + 1):
        for l in range(k + 1):
            nm = (tag, i, l)
            cx.add_vertex(nm, sigma.vertices[i - 1])
            wlc.layer[nm] = l
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            cost = j - i - 1
            for l in range(k + 1 - cost):
                cx.add_edge((tag, i, l), (tag, j, l + cost))
    for i in range(0, min(k, n - 1) + 1):
        cx.add_start((tag, i + 1, i))
    for i in range(1, n + 1):
        for l in range(k + 1):
            nm = (tag, i, l)
            cx.add_terminal(nm)
            wlc.term_cost[nm] = l + (n - i)
    return wlc


# ---------------------------------------------------------------------------
# product solving and witness extraction


def _solve(pi: Curve, wlc: WeightedLayeredComplex, delta: float):
    wlc.validate()
    return product_reachability(path_complex(pi, "p"), wlc.complex, delta)


def _best_terminal(pr, wlc: WeightedLayeredComplex, budget: int):
    """Cheapest reached terminal within budget: (cost, t1, t2) or None."""
    best = None
    for t1, t2 in pr.reached_terminals:
        c = wlc.term_cost[t2]
        if c <= budget and (best is None or c < best[0]):
            best = (c, t1, t2)
    return best


def _edited_curve(pr, wlc: WeightedLayeredComplex, t1, t2, side: int):
    """Reconstruct the edited curve a witness path traces on one side.

    Returns (curve, edits) where edits counts the deletions implied by the
    sigma indices the path skips (prefix, gaps, suffix) plus the auxiliary
    inserted vertices it visits.
    """
    names = pr.curve1_path(t1, t2) if side == 0 else pr.curve2_path(t1, t2)
    pts = np.vstack([wlc.complex.point(nm) for nm in names])
    sids = [nm[1] for nm in names if nm[0] == wlc.tag]
    ins = sum(1 for nm in names if nm[0] != wlc.tag)
    dels = (sids[0] - 1) + (wlc.n - sids[-1])
    dels += sum(b - a - 1 for a, b in zip(sids, sids[1:]))
    return Curve(pts), ins + dels


def _witness(pr, wlc: WeightedLayeredComplex, budget: int, side: int = 1):
    best = _best_terminal(pr, wlc, budget)
    if best is None:
        return None
    cost, t1, t2 = best
    curve, edits = _edited_curve(pr, wlc, t1, t2, side)
    assert edits == cost, "witness path edits disagree with the terminal cost"
    return curve, cost


# ---------------------------------------------------------------------------
# deletion-only distances


def continuous_delete_edit(pi, sigma, delta: float, k: int) -> bool:
    """Can at most k vertex deletions on sigma reach Fréchet distance delta?"""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wlc = complete_weighted_complex(sigma, k)
    pr = _solve(pi, wlc, delta)
    return _best_terminal(pr, wlc, k) is not None


def continuous_delete_edit_value(pi, sigma, delta: float):
    """Fewest deletions on sigma, or math.inf when no subsequence works.

    One decision at the full budget k = n suffices: the layered complex
    already contains every smaller budget, so the cheapest reached terminal
    is the optimum.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    wlc = complete_weighted_complex(sigma, len(sigma))
    pr = _solve(pi, wlc, delta)
    best = _best_terminal(pr, wlc, len(sigma))
    return INF if best is None else best[0]


def continuous_delete_edit_witness(pi, sigma, delta: float, k: int):
    """An edited curve realizing the cheapest deletion solution within k.

    Returns (curve, cost) or None when the budget does not suffice.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wlc = complete_weighted_complex(sigma, k)
    pr = _solve(pi, wlc, delta)
    return _witness(pr, wlc, k)


def continuous_delete_edit_two_sided(pi, sigma, delta: float, k: int) -> bool:
    """Deletions allowed on both curves, sharing one budget of k."""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wp = complete_weighted_complex(pi, min(k, len(pi)), tag="p")
    ws = complete_weighted_complex(sigma, min(k, len(sigma)), tag="s")
    pr = _product_two_sided(wp, ws, delta)
    return _best_pair(pr, wp, ws, k) is not None


def continuous_delete_edit_two_sided_value(pi, sigma, delta: float):
    """Fewest total deletions over both curves, or math.inf."""
    pi, sigma = _curve(pi), _curve(sigma)
    wp = complete_weighted_complex(pi, len(pi), tag="p")
    ws = complete_weighted_complex(sigma, len(sigma), tag="s")
    pr = _product_two_sided(wp, ws, delta)
    best = _best_pair(pr, wp, ws, len(pi) + len(sigma))
    return INF if best is None else best[0]


def continuous_delete_edit_two_sided_witness(pi, sigma, delta: float, k: int):
    """Edited (pi', sigma') pair: ((curve, cost), (curve, cost)) or None."""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wp = complete_weighted_complex(pi, min(k, len(pi)), tag="p")
    ws = complete_weighted_complex(sigma, min(k, len(sigma)), tag="s")
    pr = _product_two_sided(wp, ws, delta)
    best = _best_pair(pr, wp, ws, k)
    if best is None:
        return None
    _, t1, t2 = best
    p_curve, p_edits = _edited_curve(pr, wp, t1, t2, side=0)
    s_curve, s_edits = _edited_curve(pr, ws, t1, t2, side=1)
    assert p_edits == wp.term_cost[t1] and s_edits == ws.term_cost[t2], \
        "witness path edits disagree with the terminal costs"
    return (p_curve, p_edits), (s_curve, s_edits)


def _product_two_sided(wp, ws, delta):
    wp.validate()
    ws.validate()
    return product_reachability(wp.complex, ws.complex, delta)


def _best_pair(pr, wp, ws, budget):
    best = None
    for t1, t2 in pr.reached_terminals:
        c = wp.term_cost[t1] + ws.term_cost[t2]
        if c <= budget and (best is None or c < best[0]):
            best = (c, t1, t2)
    return best


def shortcut_decide(pi, sigma, delta: float) -> bool:
    """Is sigma within delta of pi when skipping sigma vertices is free?

    Equivalent to unlimited interior deletions with the endpoints kept: a
    single-layer complete forward complex with sigma_1 the only start and
    sigma_n the only terminal.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    n = len(sigma)
    cx = DagComplex(sigma.dim)
    for i in range(1, n + 1):
        cx.add_vertex(("s", i), sigma.vertices[i - 1])
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            cx.add_edge(("s", i), ("s", j))
    cx.add_start(("s", 1))
    cx.add_terminal(("s", n))
    cx.validate()
    return product_reachability(path_complex(pi, "p"), cx, delta).feasible


# ---------------------------------------------------------------------------
# canonical subcurves (insertion candidates)


@dataclass(frozen=True)
class CsCandidate:
    """One canonical insertion candidate.

    `gamma` holds only the new vertices (None when the window needs no
    insertion); the attachment vertices sigma_i / sigma_j are implied.  For
    boundary candidates both indices name the single attachment vertex and
    the open side of the window fixes alpha = 1 (prefix) or beta = m
    (suffix).
    """

    i: int
    j: int
    alpha: int
    beta: int
    gamma: Curve | None

    @property
    def cost(self) -> int:
        return 0 if self.gamma is None else len(self.gamma)


@dataclass
class CanonicalSubcurveSet:
    """All canonical insertion candidates for one (pi, sigma, delta) triple.

    windows:  (i, j) -> candidates inserted between sigma_i and sigma_j
    cs_end:   i -> candidates forming a new prefix that ends at sigma_i
    cs_start: i -> candidates forming a new suffix that starts at sigma_i
    """

    windows: dict = field(default_factory=dict)
    cs_end: dict = field(default_factory=dict)
    cs_start: dict = field(default_factory=dict)


def _edge_feasible(point, pi: Curve, e: int, delta: float) -> bool:
    # attachment test: the delta-ball around the sigma vertex must meet pi's
    # edge e (1-based); the clip primitive keeps this consistent with clip()
    return ball_segment_clip(point, delta, pi.vertices[e - 1], pi.vertices[e]) is not None


def canonical_subcurves(pi, sigma, delta: float, pairs) -> CanonicalSubcurveSet:
    """Canonical insertion candidates for the requested sigma vertex pairs.

    For a pair (i, j) and an integer window [alpha, beta] of pi with an
    interior vertex (alpha < beta-1; a pure segment never needs an inserted
    vertex), the candidate is mv_anchored(sigma_i, sigma_j, clip(...)) and
    exists whenever both attachment balls meet their window edges.  The
    boundary families use one-sided clips and a one-sided minimum-vertex
    curve, and allow single-edge windows: a new prefix or suffix must cover
    pi all the way to its endpoint, however short the window is.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    if pi.dim != 2 or sigma.dim != 2:
        raise ValueError("insertion candidates need planar curves")
    m, n = len(pi), len(sigma)

    norm: list = []
    for i, j in pairs:
        i, j = int(i), int(j)
        if not (1 <= i < j <= n):
            raise ValueError(f"bad sigma vertex pair ({i}, {j})")
        if (i, j) not in norm:
            norm.append((i, j))

    cs = CanonicalSubcurveSet()
    sv = sigma.vertices
    for i, j in norm:
        cands = []
        for alpha in range(1, m - 1):
            if not _edge_feasible(sv[i - 1], pi, alpha, delta):
                continue
            for beta in range(alpha + 2, m + 1):
                if not _edge_feasible(sv[j - 1], pi, beta - 1, delta):
                    continue
                clipped = clip(sv[i - 1], sv[j - 1], pi.subcurve(alpha, beta), delta)
                r = mv_anchored(sv[i - 1], sv[j - 1], clipped, delta)
                cands.append(CsCandidate(i, j, alpha, beta, r.curve))
        cs.windows[(i, j)] = cands

    for i in range(1, n + 1):
        ends = []
        for beta in range(2, m + 1):
            if _edge_feasible(sv[i - 1], pi, beta - 1, delta):
                clipped = clip_end(sv[i - 1], pi.subcurve(1, beta), delta)
                r = mv_one_sided(sv[i - 1], clipped, delta, side="end")
                ends.append(CsCandidate(i, i, 1, beta, r.curve))
        cs.cs_end[i] = ends
        starts = []
        for alpha in range(1, m):
            if _edge_feasible(sv[i - 1], pi, alpha, delta):
                clipped = clip_start(sv[i - 1], pi.subcurve(alpha, m), delta)
                r = mv_one_sided(sv[i - 1], clipped, delta, side="start")
                starts.append(CsCandidate(i, i, alpha, m, r.curve))
        cs.cs_start[i] = starts
    return cs


def _gamma_key(i, j, gamma: Curve):
    # distinct candidates each get their own chain; exact duplicates from
    # different windows would only duplicate work, so collapse those
    return (i, j) + tuple(np.round(gamma.vertices, 12).ravel())


# ---------------------------------------------------------------------------
# insertion-only distance


def _insertion_complex(pi: Curve, sigma: Curve, delta: float, k: int,
                       cs: CanonicalSubcurveSet | None = None) -> WeightedLayeredComplex:
    """k+1 layers of sigma, consecutive same-layer edges, plus one chain per
    canonical candidate and reachable layer.  A chain between sigma_i^l and
    sigma_{i+1}^{l+z} pays its z inserted vertices; prefix chains end at
    sigma_1^z and start the complex, suffix chains hang off sigma_n^l and
    terminate it at cost l+z."""
    n = len(sigma)
    cx = DagComplex(sigma.dim)
    wlc = WeightedLayeredComplex(cx, k, n, "s")
    for i in range(1, n + 1):
        for l in range(k + 1):
            nm = ("s", i, l)
            cx.add_vertex(nm, sigma.vertices[i - 1])
            wlc.layer[nm] = l
    for i in range(1, n):
        for l in range(k + 1):
            cx.add_edge(("s", i, l), ("s", i + 1, l))
    cx.add_start(("s", 1, 0))
    for l in range(k + 1):
        cx.add_terminal(("s", n, l))
        wlc.term_cost[("s", n, l)] = l

    if cs is None:
        cs = canonical_subcurves(pi, sigma, delta, [(i, i + 1) for i in range(1, n)])

    seen: set = set()
    for i in range(1, n):
        for cand in cs.windows.get((i, i + 1), []):
            z = cand.cost
            if z == 0 or z > k:
                continue
            key = _gamma_key(i, i + 1, cand.gamma)
            if key in seen:
                continue
            seen.add(key)
            for l in range(k + 1 - z):
                wlc.graft_chain(cand.gamma, ("s", i, l), ("s", i + 1, l + z), l)
    for cand in cs.cs_end.get(1, []):
        z = cand.cost
        if z == 0 or z > k:
            continue
        key = _gamma_key(0, 1, cand.gamma)
        if key in seen:
            continue
        seen.add(key)
        first, _ = wlc.graft_chain(cand.gamma, None, ("s", 1, z), 0)
        cx.add_start(first)
    for cand in cs.cs_start.get(n, []):
        z = cand.cost
        if z == 0 or z > k:
            continue
        key = _gamma_key(n, n + 1, cand.gamma)
        if key in seen:
            continue
        seen.add(key)
        for l in range(k + 1 - z):
            _, last = wlc.graft_chain(cand.gamma, ("s", n, l), None, l)
            cx.add_terminal(last)
            wlc.term_cost[last] = l + z
    return wlc


def _insertion_cap(m: int, n: int) -> int:
    # A canonical solution inserts one subcurve per gap of sigma, and the
    # windows those subcurves cover advance monotonically along pi, with
    # consecutive windows sharing at most one edge.  Each subcurve has at
    # most as many vertices as its window, so the total insertion count of
    # any minimal feasible solution is at most (m-1) + 2(n+1).
    return m + 2 * (n + 1)


def continuous_insert_edit(pi, sigma, delta: float, k: int) -> bool:
    """Can at most k vertex insertions into sigma reach distance delta?"""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wlc = _insertion_complex(pi, sigma, delta, k)
    pr = _solve(pi, wlc, delta)
    return _best_terminal(pr, wlc, k) is not None


def continuous_insert_edit_value(pi, sigma, delta: float):
    """Fewest insertions into sigma, or math.inf when none suffice.

    Feasible solutions, when they exist, need at most _insertion_cap(m, n)
    new vertices, so one decision at that budget settles the value.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    cap = _insertion_cap(len(pi), len(sigma))
    wlc = _insertion_complex(pi, sigma, delta, cap)
    pr = _solve(pi, wlc, delta)
    best = _best_terminal(pr, wlc, cap)
    return INF if best is None else best[0]


def continuous_insert_edit_witness(pi, sigma, delta: float, k: int):
    """An edited curve realizing the cheapest insertion solution within k."""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wlc = _insertion_complex(pi, sigma, delta, k)
    pr = _solve(pi, wlc, delta)
    return _witness(pr, wlc, k)


# ---------------------------------------------------------------------------
# combined insertions + deletions


def _combined_complex(pi: Curve, sigma: Curve, delta: float, k: int) -> WeightedLayeredComplex:
    """Deletion backbone plus extended canonical subcurve chains.

    A chain between sigma_i^l and sigma_j^{l + z + (j-i-1)} replaces the
    deleted run sigma_{i+1}..sigma_{j-1} with z inserted vertices.  Prefix
    chains into sigma_i additionally pay the i-1 deleted prefix vertices in
    their layers; suffix chains from sigma_i^l pay the n-i deleted suffix
    vertices in their terminal cost.
    """
    n = len(sigma)
    wlc = complete_weighted_complex(sigma, k)
    cx = wlc.complex
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
             if j - (i + 1) <= k]
    cs = canonical_subcurves(pi, sigma, delta, pairs)

    seen: set = set()
    for (i, j), cands in cs.windows.items():
        dels = j - i - 1
        for cand in cands:
            z = cand.cost
            if z == 0 or z + dels > k:
                continue
            key = _gamma_key(i, j, cand.gamma)
            if key in seen:
                continue
            seen.add(key)
            for l in range(k + 1 - z - dels):
                wlc.graft_chain(cand.gamma, ("s", i, l), ("s", j, l + z + dels), l)
    for i in range(1, n + 1):
        for cand in cs.cs_end.get(i, []):
            z = cand.cost
            enter = (i - 1) + z
            if z == 0 or enter > k:
                continue
            key = _gamma_key(-i, i, cand.gamma)
            if key in seen:
                continue
            seen.add(key)
            first, _ = wlc.graft_chain(cand.gamma, None, ("s", i, enter), i - 1)
            cx.add_start(first)
        for cand in cs.cs_start.get(i, []):
            z = cand.cost
            if z == 0:
                continue
            key = _gamma_key(i, -i, cand.gamma)
            if key in seen:
                continue
            seen.add(key)
            for l in range(k + 1 - z - (n - i)):
                _, last = wlc.graft_chain(cand.gamma, ("s", i, l), None, l)
                cx.add_terminal(last)
                wlc.term_cost[last] = l + z + (n - i)
    return wlc


def _replacement(pi: Curve, sigma: Curve, delta: float):
    """Delete all of sigma and insert a fresh minimum-vertex cover of pi.

    The layered complex always keeps at least one sigma vertex, so this
    escape is checked separately.  Returns (cost, curve).
    """
    r = mv_unanchored(pi, delta)
    return len(sigma) + r.count, r.curve


def continuous_edit(pi, sigma, delta: float, k: int) -> bool:
    """Can at most k insertions plus deletions reach distance delta?"""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    cost, _ = _replacement(pi, sigma, delta)
    if cost <= k:
        return True
    wlc = _combined_complex(pi, sigma, delta, k)
    pr = _solve(pi, wlc, delta)
    return _best_terminal(pr, wlc, k) is not None


def continuous_edit_value(pi, sigma, delta: float):
    """Fewest mixed insertions plus deletions; always finite.

    Replacing sigma wholesale costs n plus the minimum-vertex count of pi,
    which bounds the optimum by m + n; one decision at that budget with a
    full terminal scan settles the value.
    """
    pi, sigma = _curve(pi), _curve(sigma)
    cap = len(pi) + len(sigma)
    repl_cost, _ = _replacement(pi, sigma, delta)
    wlc = _combined_complex(pi, sigma, delta, cap)
    pr = _solve(pi, wlc, delta)
    best = _best_terminal(pr, wlc, cap)
    value = repl_cost if best is None else min(repl_cost, best[0])
    return value


def continuous_edit_witness(pi, sigma, delta: float, k: int):
    """An edited curve realizing the cheapest combined solution within k."""
    pi, sigma = _curve(pi), _curve(sigma)
    k = _check_budget(k)
    wlc = _combined_complex(pi, sigma, delta, k)
    pr = _solve(pi, wlc, delta)
    got = _witness(pr, wlc, k)
    repl_cost, repl_curve = _replacement(pi, sigma, delta)
    if repl_cost <= k and (got is None or repl_cost < got[1]):
        return repl_curve, repl_cost
    return got
