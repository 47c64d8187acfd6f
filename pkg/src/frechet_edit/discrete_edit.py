"""Discrete Fréchet edit distances: fewest vertex deletions / insertions on
sigma so that the edited curve is within discrete Fréchet distance delta of
pi.

Deletion-only runs in O(mn).  Insertion-only and the combined variant hinge
on one observation: a single inserted vertex can absorb a maximal run of pi
vertices exactly when that run fits in a ball of radius delta, so the
insertion transition is a sliding-window minimum over rows mu(i)..i, where
mu is the earliest window start.  A monotone queue serves each column's
window minima in amortized O(1), giving O(m^2 + mn) overall (the m^2 is the
mu computation).

Every variant keeps two tables per _kernels: the unrestricted cost dp and
the table dpA restricted to solutions whose coupling ends with the kept
pair (pi_i, sigma_j).  Collapsing them into one table is tempting but
wrong: extending sigma_j onto the next pi vertex is only legal when the
predecessor solution actually ends with sigma_j, not with a later inserted
vertex.

Insertion points in reconstructed scripts are minimum-enclosing-ball centers
of the covered pi window, which is always a valid choice.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .geometry import EPS, Curve, min_enclosing_ball
from .freespace import decide_discrete

INF_COST = int(_kernels.INF_COST)


def _vertices(curve) -> np.ndarray:
    if isinstance(curve, Curve):
        return curve.vertices
    a = np.asarray(curve, dtype=float)
    return a.reshape(-1, 1) if a.ndim == 1 else a


def _free_matrix(P: np.ndarray, Q: np.ndarray, delta: float) -> np.ndarray:
    d2 = np.sum((P[:, None, :] - Q[None, :, :]) ** 2, axis=-1)
    return (d2 <= delta * delta + EPS).astype(np.uint8)


# ---------------------------------------------------------------------------
# mu table


def mu_table(curve, delta: float, seed: int = 0) -> np.ndarray:
    """For each 0-based i, the smallest 0-based t such that vertices t..i fit
    in a ball of radius delta.  Nondecreasing; mu[i] <= i always since a
    single vertex fits any delta >= 0.

    Two-pointer sweep with a fresh minimum enclosing ball per advance; the
    start pointer never moves backwards because supersets have larger balls.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    P = _vertices(curve)
    m = len(P)
    mu = np.empty(m, dtype=np.int64)
    t = 0
    for i in range(m):
        while True:
            ball = min_enclosing_ball(P[t:i + 1], seed=seed)
            if ball.radius <= delta + EPS:
                break
            t += 1
        mu[i] = t
    return mu


def mu_table_naive(curve, delta: float, seed: int = 0) -> np.ndarray:
    """Quadratic per-index backward scan; reference implementation."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    P = _vertices(curve)
    m = len(P)
    mu = np.empty(m, dtype=np.int64)
    for i in range(m):
        t = i
        while t > 0:
            ball = min_enclosing_ball(P[t - 1:i + 1], seed=seed)
            if ball.radius > delta + EPS:
                break
            t -= 1
        mu[i] = t
    return mu


# ---------------------------------------------------------------------------
# FIFO queue with O(1) window minimum


class MinQueue:
    """FIFO queue of (element, priority) with O(1) minimum-priority query.

    A secondary monotone list keeps the elements that can still become the
    minimum: each enqueue evicts dominated entries from its back, so every
    entry is pushed and popped at most once.
    """

    def __init__(self):
        self._fifo = deque()
        self._cands = deque()
        self._serial = 0

    def __len__(self):
        return len(self._fifo)

    def enqueue(self, element, priority) -> None:
        s = self._serial
        self._serial += 1
        self._fifo.append((s, element, priority))
        while self._cands and self._cands[-1][1] > priority:
            self._cands.pop()
        self._cands.append((s, priority))

    def dequeue(self):
        if not self._fifo:
            raise IndexError("dequeue from empty MinQueue")
        s, element, _ = self._fifo.popleft()
        if self._cands and self._cands[0][0] == s:
            self._cands.popleft()
        return element

    def min(self):
        if not self._cands:
            raise IndexError("min of empty MinQueue")
        return self._cands[0][1]


# ---------------------------------------------------------------------------
# edit scripts


@dataclass(frozen=True)
class EditOp:
    """One edit on sigma, expressed against ORIGINAL vertex numbering.

    op "delete": remove sigma_index (1-based).
    op "insert": add `point` in the gap after sigma_index (0 = before the
    first vertex); multiple inserts in one gap apply in script order.
    """
    op: str
    index: int
    point: tuple | None = None

    def to_json(self) -> dict:
        doc = {"op": self.op, "index": self.index}
        if self.point is not None:
            doc["point"] = list(self.point)
        return doc


@dataclass
class EditScript:
    ops: list = field(default_factory=list)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def to_json(self) -> list:
        return [op.to_json() for op in self.ops]

    def apply(self, sigma) -> Curve:
        """The edited curve; raises if the result would be empty."""
        V = _vertices(sigma)
        n = len(V)
        kept = [True] * n
        gaps: dict[int, list] = {}
        for op in self.ops:
            if op.op == "delete":
                if not 1 <= op.index <= n:
                    raise ValueError(f"delete index {op.index} out of range")
                if not kept[op.index - 1]:
                    raise ValueError(f"vertex {op.index} deleted twice")
                kept[op.index - 1] = False
            elif op.op == "insert":
                if not 0 <= op.index <= n:
                    raise ValueError(f"insert gap {op.index} out of range")
                gaps.setdefault(op.index, []).append(op.point)
            else:
                raise ValueError(f"unknown op {op.op!r}")
        rows = [list(p) for p in gaps.get(0, [])]
        for g in range(1, n + 1):
            if kept[g - 1]:
                rows.append(list(V[g - 1]))
            rows.extend(list(p) for p in gaps.get(g, []))
        if not rows:
            raise ValueError("script deletes every vertex and inserts none")
        return Curve(np.asarray(rows, dtype=float))


# ---------------------------------------------------------------------------
# DP tables


@dataclass
class EditDpTable:
    """Filled cost tables plus everything needed to reconstruct a script.

    dp is the unrestricted cost; dpA restricts to solutions whose coupling
    ends with the kept pair (pi_i, sigma_j).  parent codes for dp: 0 base,
    1 delete, 5 insert, 6 resolve-to-dpA; for parentA: 2 diagonal, 3 left,
    4 down (down stays inside dpA, the other two return to dp).
    """
    variant: str  # "delete" | "insert" | "both"
    pi: Curve
    sigma: Curve
    delta: float
    dp: np.ndarray
    parent: np.ndarray
    mu: np.ndarray | None
    dpA: np.ndarray | None = None
    parentA: np.ndarray | None = None
    seed: int = 0

    @property
    def cost(self):
        v = int(self.dp[-1, -1])
        return v if v < INF_COST else math.inf


def _as_curves(pi, sigma):
    P = pi if isinstance(pi, Curve) else Curve(pi)
    S = sigma if isinstance(sigma, Curve) else Curve(sigma)
    if P.dim != S.dim:
        raise ValueError("curves live in different dimensions")
    return P, S


def _alloc(m: int, n: int):
    dp = np.empty((m + 1, n + 1), dtype=np.int64)
    dpA = np.empty((m + 1, n + 1), dtype=np.int64)
    parent = np.zeros((m + 1, n + 1), dtype=np.int8)
    parentA = np.zeros((m + 1, n + 1), dtype=np.int8)
    return dp, dpA, parent, parentA


def delete_table(pi, sigma, delta: float) -> EditDpTable:
    P, S = _as_curves(pi, sigma)
    free = _free_matrix(P.vertices, S.vertices, delta)
    m, n = free.shape
    dp, dpA, parent, parentA = _alloc(m, n)
    _kernels.dedist_fill(free, dp, dpA, parent, parentA)
    return EditDpTable("delete", P, S, float(delta), dp, parent, None, dpA, parentA)


def insert_table(pi, sigma, delta: float, seed: int = 0, mu=None) -> EditDpTable:
    P, S = _as_curves(pi, sigma)
    free = _free_matrix(P.vertices, S.vertices, delta)
    if mu is None:
        mu = mu_table(P, delta, seed=seed)
    m, n = free.shape
    dp, dpA, parent, parentA = _alloc(m, n)
    _kernels.iedist_fill(free, mu, dp, dpA, parent, parentA)
    return EditDpTable("insert", P, S, float(delta), dp, parent, mu, dpA, parentA, seed)


def edit_table(pi, sigma, delta: float, seed: int = 0, mu=None) -> EditDpTable:
    """mu, when given, must be mu_table(pi, delta); precomputing it pays off
    when one reference curve is matched against many sigmas."""
    P, S = _as_curves(pi, sigma)
    free = _free_matrix(P.vertices, S.vertices, delta)
    if mu is None:
        mu = mu_table(P, delta, seed=seed)
    m, n = free.shape
    dp, dpA, parent, parentA = _alloc(m, n)
    _kernels.edist_fill(free, mu, dp, dpA, parent, parentA)
    return EditDpTable("both", P, S, float(delta), dp, parent, mu, dpA, parentA, seed)


def discrete_delete_edit(pi, sigma, delta: float):
    """Fewest sigma-vertex deletions reaching discrete Fréchet distance <=
    delta, or math.inf when no subsequence works."""
    return delete_table(pi, sigma, delta).cost


def discrete_insert_edit(pi, sigma, delta: float):
    """Fewest vertex insertions into sigma, or math.inf."""
    return insert_table(pi, sigma, delta).cost


def discrete_edit(pi, sigma, delta: float):
    """Fewest mixed insertions+deletions; always finite (delete everything,
    then insert a cover of pi)."""
    return edit_table(pi, sigma, delta).cost


def reconstruct_edits(table: EditDpTable) -> EditScript:
    """Backtrack a filled table into an edit script.

    The script applied to sigma yields a curve within delta of pi (discrete,
    strong), using exactly `table.cost` operations.
    """
    if table.cost == math.inf:
        raise ValueError("cost is infinite; no script exists")
    dp = table.dp
    parent = table.parent
    parentA = table.parentA
    mu = table.mu
    P = table.pi.vertices
    ops = []
    i, j = dp.shape[0] - 1, dp.shape[1] - 1
    ended = False  # walking dpA (coupling pinned to end with sigma_j)
    while i != 0 or j != 0:
        if ended:
            code = int(parentA[i, j])
            if code == 2:
                i -= 1
                j -= 1
                ended = False
            elif code == 3:
                j -= 1
                ended = False
            elif code == 4:
                i -= 1
            else:
                raise AssertionError(f"unexpected dpA parent {code} at ({i},{j})")
            continue
        code = int(parent[i, j])
        if code == 1:
            ops.append(EditOp("delete", j))
            j -= 1
        elif code == 5:
            # one inserted vertex absorbed pi rows k..i-1 (0-based); find the
            # window start the fill chose: smallest k with matching cost
            target = dp[i, j] - 1
            lo = int(mu[i - 1])
            k0 = -1
            for kk in range(lo, i):
                if dp[kk, j] == target:
                    k0 = kk
                    break
            if k0 < 0:
                raise AssertionError("insert parent without a matching window cost")
            ball = min_enclosing_ball(P[lo:i], seed=table.seed)
            ops.append(EditOp("insert", j, tuple(float(x) for x in ball.center)))
            i = k0
        elif code == 6:
            ended = True
        else:
            raise AssertionError(f"unexpected parent code {code} at ({i},{j})")
    ops.reverse()
    return EditScript(ops)


def verified_apply(table: EditDpTable) -> Curve:
    """Reconstruct, apply, and re-check the script; returns the edited curve."""
    script = reconstruct_edits(table)
    edited = script.apply(table.sigma)
    if len(script) != table.cost:
        raise AssertionError("script length disagrees with DP cost")
    if not decide_discrete(table.pi, edited, table.delta):
        raise AssertionError("reconstructed script fails the distance check")
    return edited
