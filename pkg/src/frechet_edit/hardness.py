"""Hardness-instance generators and brute-force verifiers for weak edits.

Deciding whether vertex edits can bring the *weak* Frechet distance under a
threshold is NP-hard, so no solver here scales.  This module instead provides:

* generators translating a 3SAT instance into an R^1 curve pair whose weak
  discrete edit feasibility (unlimited deletion, budgeted deletion, budgeted
  insertion, budgeted mixed edits) matches satisfiability,
* a lift to the plane that carries each instance over to the weak continuous
  distance unchanged,
* exhaustive brute-force oracles that confirm the equivalence at tiny scale,
  plus the direct polynomial check for the one easy case (unlimited
  insertions).

All generated coordinates are integers and the threshold is fixed at
delta = 1.

Construction idea, in free-space terms (columns = pi, rows = sigma): each
clause becomes a tall gadget of three row layers crossed by three column
sections, traversable only along diagonals of nearly-equal values.  The
middle "variable" layer carries one row (or one insertion slot) per variable
polarity; bridging it in a clause's section encodes setting that literal
true.  Vertical gaps can only be closed by deleting rows, horizontal gaps
only by inserting rows, and opposing gaps make the two polarities of a
variable mutually exclusive.  Gadgets are glued in series with sentinel
values (0 below, a large value on top), zigzagging up and down, so a
start-to-end path must thread every clause.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .freespace import decide_weak_discrete
from .geometry import EPS, Curve, save_curve

DELETE_UNLIMITED = "delete-unlimited"
DELETE_BUDGET = "delete-budget-k"
INSERT_BUDGET = "insert-budget-k"
EDIT_BUDGET = "edit-budget-k"
KINDS = (DELETE_UNLIMITED, DELETE_BUDGET, INSERT_BUDGET, EDIT_BUDGET)

# Hard ceilings for the exhaustive oracles.  Exceeding one raises
# EnumerationCapExceeded; it never silently truncates.  The environment
# variable FRECHET_EDIT_ENUM_CAP overrides both (one integer).
DEFAULT_SUBSET_CAP = 2**20
DEFAULT_COMBO_CAP = 10**6

BIG_DEFAULT = 10**6


class EnumerationCapExceeded(RuntimeError):
    """The requested brute-force enumeration is larger than the cap allows."""


def _cap(default: int) -> int:
    raw = os.environ.get("FRECHET_EDIT_ENUM_CAP", "").strip()
    return int(raw) if raw else default


# ---------------------------------------------------------------------------
# 3SAT instances


@dataclass(frozen=True)
class SatInstance:
    """A 3SAT instance: v variables, clauses of exactly three signed literals.

    Literal j > 0 means variable j, j < 0 means its negation.  Duplicate
    literals inside a clause are allowed (that is how trivial one-variable
    clauses like (x1 v x1 v x1) are written).
    """

    v: int
    clauses: tuple[tuple[int, int, int], ...]

    def __init__(self, v: int, clauses):
        if v < 1:
            raise ValueError("need at least one variable")
        normalized = []
        for cl in clauses:
            lits = tuple(int(l) for l in cl)
            if len(lits) != 3:
                raise ValueError(f"clause {cl!r} must hold exactly 3 literals")
            for lit in lits:
                if lit == 0 or abs(lit) > v:
                    raise ValueError(f"literal {lit} out of range for v={v}")
            normalized.append(lits)
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "clauses", tuple(normalized))

    @property
    def c(self) -> int:
        return len(self.clauses)

    def satisfying_assignment(self) -> Optional[tuple[bool, ...]]:
        """Exhaustive search; None if unsatisfiable.  Only sane for small v."""
        if self.v > 20:
            raise ValueError("exhaustive satisfiability check capped at v=20")
        for bits in itertools.product((False, True), repeat=self.v):
            ok = True
            for cl in self.clauses:
                if not any((lit > 0) == bits[abs(lit) - 1] for lit in cl):
                    ok = False
                    break
            if ok:
                return bits
        return None

    def satisfiable(self) -> bool:
        return self.satisfying_assignment() is not None


def sat_from_dimacs(text: str) -> SatInstance:
    """Parse DIMACS CNF ("p cnf <v> <c>" header, clauses ended by 0).

    Every clause must hold exactly three literals.
    """
    v = promised_c = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            v, promised_c = int(parts[2]), int(parts[3])
            continue
        if v is None:
            raise ValueError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if len(current) != 3:
                    raise ValueError(
                        f"line {lineno}: clause needs exactly 3 literals, got {len(current)}"
                    )
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        raise ValueError("unterminated clause (missing trailing 0)")
    if v is None:
        raise ValueError("no 'p cnf' header found")
    if promised_c is not None and promised_c != len(clauses):
        raise ValueError(f"header promises {promised_c} clauses, file has {len(clauses)}")
    return SatInstance(v, clauses)


def sat_to_dimacs(sat: SatInstance) -> str:
    lines = [f"p cnf {sat.v} {sat.c}"]
    lines += [" ".join(str(l) for l in cl) + " 0" for cl in sat.clauses]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reduction blueprints


@dataclass(frozen=True)
class ReductionBlueprint:
    """A generated weak-edit instance together with its bookkeeping.

    pi/sigma are the curves (R^1 as generated, R^2 once lifted), delta is
    always 1.  variable_rows are the 1-based sigma indices of the deletable
    polarity rows (deletion kinds); insert_gap marks the slot after that
    sigma index where assignment rows must be inserted (insertion kinds).
    building keeps the value sequences the gadgets were assembled from.
    """

    kind: str
    pi: Curve
    sigma: Curve
    delta: float
    budget: Optional[int]
    sat: SatInstance
    building: dict = field(repr=False)
    variable_rows: tuple[int, ...] = ()
    insert_gap: Optional[int] = None
    lifted: bool = False
    big: Optional[float] = None


def _layer_values(v: int) -> list[int]:
    # one rung per variable, spaced 10 apart so neighbouring rungs never
    # interact at delta = 1
    return [10 * i + 5 for i in range(1, v + 1)]


def _substitute(layer: Sequence[int], k: int, value: int) -> list[int]:
    out = list(layer)
    out[k - 1] = value
    return out


def _series(gadgets: list[list[int]], bottom: int, top: int) -> list[int]:
    """Glue gadget column blocks into one zigzag sequence.

    Odd-numbered gadgets are traversed bottom-left to top-right; even ones
    are written reversed so the path descends through them.  The caller must
    arrange for the list to end on an odd (upward) gadget, otherwise the
    final column cannot meet the top sigma row.
    """
    vals = [bottom]
    for t, g in enumerate(gadgets):
        if t % 2 == 0:
            vals += g
            vals.append(top)
        else:
            vals += g[::-1]
            vals.append(bottom)
    return vals


def _repeat(vals: Sequence[int], count: int) -> list[int]:
    return [x for x in vals for _ in range(count)]


def gen_deletion_reduction(sat: SatInstance, *, budgeted: bool = False) -> ReductionBlueprint:
    """Build the deletion reduction for a 3SAT instance.

    Unbudgeted: sigma's variable layer holds rows 10j+4 and 10j+6 per
    variable j; a clause gadget's section for literal x_j (resp. not-x_j)
    substitutes column 10j+6 (resp. 10j+4), leaving exactly one vertical gap
    that only deleting row 10j+4 (resp. 10j+6) can close.  Deleting one
    polarity row creates an unbridgeable horizontal gap for the opposite
    literal's sections, so the deletions spell out an assignment.  A final
    containment gadget (sentinels 9/11 instead of 10) pins rows 9, 11 and
    their neighbours so that only variable rows are ever deletable.

    Budgeted (budget = v): the containment gadget is dropped; instead every
    row outside the variable layer (and every pi column) appears v+1 times,
    so v deletions can never remove one entirely.
    """
    if not sat.clauses:
        raise ValueError("need at least one clause")
    v = sat.v
    L = _layer_values(v)
    # both polarities of each variable, ascending: 14,16, 24,26, ...
    L_hat: list[int] = []
    for j in range(1, v + 1):
        L_hat += [10 * j + 4, 10 * j + 6]
    glue_hi = 10 * (v + 1)  # caps a layer: larger than every rung
    top = 10 * (v + 2)  # caps a whole gadget

    def lit_cols(lit: int) -> list[int]:
        k = abs(lit)
        return _substitute(L, k, 10 * k + 6 if lit > 0 else 10 * k + 4)

    def clause_gadget(cl: tuple[int, int, int]) -> list[int]:
        a, b, c_ = (lit_cols(l) for l in cl)
        return [10] + a + [glue_hi] + b[::-1] + [10] + c_ + [glue_hi]

    gadgets = [clause_gadget(cl) for cl in sat.clauses]
    subs = {f"{'+' if l > 0 else '-'}{abs(l)}": lit_cols(l) for cl in sat.clauses for l in cl}
    building = {
        "L": L,
        "L_hat": L_hat,
        "L_sub": subs,
        "clause_columns": [clause_gadget(cl) for cl in sat.clauses],
    }

    if budgeted:
        # no containment gadget, so the series itself must end upward
        if len(gadgets) % 2 == 0:
            gadgets.append(gadgets[-1])
        sigma_vals = [0, 10] + L + [glue_hi] + L_hat[::-1] + [10] + L + [glue_hi, top]
        building["containment"] = None
    else:
        # the containment gadget takes the next slot, which must be odd
        # (upward) for the path to finish at sigma's top row
        if len(gadgets) % 2 == 1:
            gadgets.append(gadgets[-1])
        containment = [9] + L + [glue_hi] + L[::-1] + [11] + L + [glue_hi]
        gadgets.append(containment)
        sigma_vals = [0, 9] + L + [glue_hi] + L_hat[::-1] + [11] + L + [glue_hi, top]
        building["containment"] = containment

    pi_vals = _series(gadgets, bottom=0, top=top)
    # sigma layout: [0, sentinel] L [glue] L_hat^R [sentinel] L [glue, top]
    var_lo = v + 4  # first polarity row, 1-based
    var_hi = 3 * v + 3

    if budgeted:
        counts = [1 if var_lo <= i <= var_hi else v + 1 for i in range(1, len(sigma_vals) + 1)]
        sigma_rep = [x for x, c in zip(sigma_vals, counts) for _ in range(c)]
        offset = (var_lo - 1) * (v + 1)
        variable_rows = tuple(range(offset + 1, offset + 2 * v + 1))
        pi_rep = _repeat(pi_vals, v + 1)
        return ReductionBlueprint(
            kind=DELETE_BUDGET,
            pi=Curve(pi_rep),
            sigma=Curve(sigma_rep),
            delta=1.0,
            budget=v,
            sat=sat,
            building=building,
            variable_rows=variable_rows,
        )
    return ReductionBlueprint(
        kind=DELETE_UNLIMITED,
        pi=Curve(pi_vals),
        sigma=Curve(sigma_vals),
        delta=1.0,
        budget=None,
        sat=sat,
        building=building,
        variable_rows=tuple(range(var_lo, var_hi + 1)),
    )


def gen_insertion_reduction(sat: SatInstance, *, with_deletions: bool = False) -> ReductionBlueprint:
    """Build the insertion reduction (budget = v insertions).

    sigma's variable sublayer is left empty: a horizontal run of width v that
    only v inserted rows can bridge.  Column sections for literal x_j (resp.
    not-x_j) substitute 10j+7 (resp. 10j+3), so at delta=1 only an inserted
    row of value 10j+6 (resp. 10j+4) both reaches the substituted column and
    still covers the plain 10j+5 columns -- inserting 10j+5 itself would
    satisfy both polarities and is ruled out by the +-2 offsets.  Because the
    shifted columns would wreck the plain top/bottom layers, every layer is
    itself a three-sublayer gadget (values shifted by -1/+1/0) providing a
    crossing lane for either polarity.

    with_deletions=True additionally repeats every sigma row v+1 times: a
    shared budget of v edits then cannot delete any row entirely, and all v
    edits are forced to be the sublayer insertions, extending the guarantee
    to mixed deletions+insertions.
    """
    if not sat.clauses:
        raise ValueError("need at least one clause")
    v = sat.v
    L = _layer_values(v)
    L_minus = [x - 1 for x in L]
    L_plus = [x + 1 for x in L]
    glue_hi = 10 * (v + 1)
    glue_top = 10 * (v + 2)
    top = 10 * (v + 3)

    # row-side gadget: bottom sublayer shifted down (lane for negative
    # literals), middle shifted up (lane for positive ones), top plain
    G = [10] + L_minus + [glue_hi] + L_plus[::-1] + [10] + L + [glue_hi]
    # row-side gadget with the variable sublayer left out entirely
    G_hat = [10] + L + [glue_hi] + [10] + L + [glue_hi]

    def lit_sub(lit: int) -> list[int]:
        k = abs(lit)
        return _substitute(L, k, 10 * k + 7 if lit > 0 else 10 * k + 3)

    def G_lit(lit: int) -> list[int]:
        return [10] + L + [glue_hi] + lit_sub(lit)[::-1] + [10] + L + [glue_hi]

    def clause_gadget(cl: tuple[int, int, int]) -> list[int]:
        a, b, c_ = (G_lit(l) for l in cl)
        return [5] + a + [glue_top] + b[::-1] + [5] + c_ + [glue_top]

    gadgets = [clause_gadget(cl) for cl in sat.clauses]
    if len(gadgets) % 2 == 0:
        # no trailing containment gadget here, so the clause series itself
        # must end on an upward gadget
        gadgets.append(gadgets[-1])
    pi_vals = _series(gadgets, bottom=0, top=top)
    sigma_vals = [0, 5] + G + [glue_top] + G_hat[::-1] + [5] + G + [glue_top, top]
    # the empty sublayer sits between the two halves of the reversed middle
    # gadget: after [0,5] + G + [glue_top] + (glue_hi + L^R + [10])
    gap = 4 * v + 9

    building = {
        "L": L,
        "L_minus": L_minus,
        "L_plus": L_plus,
        "L_sub": {f"{'+' if l > 0 else '-'}{abs(l)}": lit_sub(l) for cl in sat.clauses for l in cl},
        "G": G,
        "G_hat": G_hat,
        "clause_columns": [clause_gadget(cl) for cl in sat.clauses],
    }

    if with_deletions:
        rep = v + 1
        sigma_vals = _repeat(sigma_vals, rep)
        gap *= rep
        kind = EDIT_BUDGET
    else:
        kind = INSERT_BUDGET
    return ReductionBlueprint(
        kind=kind,
        pi=Curve(pi_vals),
        sigma=Curve(sigma_vals),
        delta=1.0,
        budget=v,
        sat=sat,
        building=building,
        insert_gap=gap,
    )


def gen_reduction(sat: SatInstance, kind: str) -> ReductionBlueprint:
    """Dispatch on the blueprint kind."""
    if kind == DELETE_UNLIMITED:
        return gen_deletion_reduction(sat)
    if kind == DELETE_BUDGET:
        return gen_deletion_reduction(sat, budgeted=True)
    if kind == INSERT_BUDGET:
        return gen_insertion_reduction(sat)
    if kind == EDIT_BUDGET:
        return gen_insertion_reduction(sat, with_deletions=True)
    raise ValueError(f"unknown reduction kind {kind!r}; expected one of {KINDS}")


# ---------------------------------------------------------------------------
# Lifting R^1 instances to the plane

def _require_1d(curve) -> Curve:
    c = curve if isinstance(curve, Curve) else Curve(curve)
    if c.dim != 1:
        raise ValueError(f"expected an R^1 curve, got dimension {c.dim}")
    return c


def lift_to_plane(curve, big: float = BIG_DEFAULT) -> Curve:
    """Lift an R^1 curve onto the x-axis of R^2, interleaving (0, big).

    Movement along a lifted curve must pass through the towering (0, big)
    vertex between any two x-axis vertices, so a continuous traversal can
    only pause near the axis at the original vertices: weak continuous
    decisions on lifted pairs match weak discrete decisions on the originals
    (big just needs to dwarf every coordinate; with integer data and delta=1
    anything huge works).  A singleton stays a singleton.
    """
    c = _require_1d(curve)
    out: list[tuple[float, float]] = []
    for t, x in enumerate(c.vertices[:, 0]):
        if t:
            out.append((0.0, float(big)))
        out.append((float(x), 0.0))
    return Curve(out)


def _lift_values(values: np.ndarray, big: float, big_copies: int,
                 gap_after: Optional[int], gap_copies: int) -> tuple[list, list[int]]:
    """Interleave (0, big) rows, with a custom copy count at one gap.

    Returns the lifted vertex list and the 1-based lifted index of each
    original vertex.
    """
    out: list[tuple[float, float]] = []
    index_of: list[int] = []
    for t, x in enumerate(values):
        if t:
            copies = gap_copies if (gap_after is not None and t == gap_after) else big_copies
            out.extend([(0.0, float(big))] * copies)
        index_of.append(len(out) + 1)
        out.append((float(x), 0.0))
    return out, index_of


def lift_blueprint(bp: ReductionBlueprint, big: float = BIG_DEFAULT) -> ReductionBlueprint:
    """Lift a generated R^1 blueprint to the plane, kind-aware.

    * delete-unlimited: plain interleave on both curves (the containment
      gadget already guards every row, towers included).
    * delete-budget-k: interleaved towers appear v+1 times on both curves so
      the budget cannot delete one entirely (value rows carry their own
      duplication from the discrete blueprint).
    * insert-budget-k: the empty variable sublayer receives v-1 towers
      instead of one, leaving exactly v slots for the inserted assignment
      rows.
    * edit-budget-k: both of the above.
    """
    if bp.lifted:
        raise ValueError("blueprint is already lifted")
    v = bp.sat.v
    big_copies = v + 1 if bp.kind in (DELETE_BUDGET, EDIT_BUDGET) else 1
    gap_copies = v - 1 if bp.kind in (INSERT_BUDGET, EDIT_BUDGET) else big_copies
    # deletions may also target pi in the budgeted-deletion statement, so
    # its towers are duplicated as well; insertion/mixed edits touch sigma
    # only and pi keeps single towers
    pi_big_copies = v + 1 if bp.kind == DELETE_BUDGET else 1

    pi_vals, _ = _lift_values(bp.pi.vertices[:, 0], big, pi_big_copies, None, 0)
    sigma_vals, index_of = _lift_values(
        bp.sigma.vertices[:, 0], big, big_copies, bp.insert_gap, gap_copies
    )
    variable_rows = tuple(index_of[i - 1] for i in bp.variable_rows)
    insert_gap = index_of[bp.insert_gap - 1] if bp.insert_gap is not None else None
    return ReductionBlueprint(
        kind=bp.kind,
        pi=Curve(pi_vals),
        sigma=Curve(sigma_vals),
        delta=bp.delta,
        budget=bp.budget,
        sat=bp.sat,
        building=bp.building,
        variable_rows=variable_rows,
        insert_gap=insert_gap,
        lifted=True,
        big=float(big),
    )


# ---------------------------------------------------------------------------
# Brute-force oracles (weak discrete, R^1)


def _insertion_candidates(pi: Curve, delta: float) -> list[float]:
    """Candidate values for inserted rows: every pi value and its +-delta.

    In R^1 the set of columns a row value x is free against changes only
    when x crosses some pi_i +- delta, so between consecutive critical
    values every choice is interchangeable; the critical values themselves
    cover all maximal coverage patterns.
    """
    vals = set()
    for x in pi.vertices[:, 0]:
        vals.update((float(x - delta), float(x), float(x + delta)))
    return sorted(vals)


def _apply_insertions(base: list[float], gaps: Sequence[int], vals: Sequence[float]) -> list[float]:
    # gaps ascending; gap g inserts before the (g+1)-th original row, ties
    # keep vals order
    out: list[float] = []
    prev = 0
    for g, x in zip(gaps, vals):
        out += base[prev:g]
        out.append(x)
        prev = g
    out += base[prev:]
    return out


def _brute_delete(pi: Curve, sigma: Curve, delta: float, budget: Optional[int]) -> float:
    n = len(sigma)
    max_d = n - 1 if budget is None else min(budget, n - 1)
    total = sum(math.comb(n, d) for d in range(max_d + 1))
    cap = _cap(DEFAULT_SUBSET_CAP)
    if total > cap:
        raise EnumerationCapExceeded(
            f"deletion brute force would enumerate {total} subsets; cap is {cap}"
        )
    rows = sigma.vertices
    for d in range(max_d + 1):
        for drop in itertools.combinations(range(n), d):
            keep = np.ones(n, dtype=bool)
            keep[list(drop)] = False
            if decide_weak_discrete(pi, Curve(rows[keep]), delta):
                return d
    return math.inf


def _brute_insert(pi: Curve, sigma: Curve, delta: float, budget: Optional[int],
                  values: Optional[Sequence[float]]) -> float:
    if budget is None:
        raise ValueError("insertion brute force needs a finite budget "
                         "(unlimited insertion has a direct check: "
                         "unlimited_insertion_feasible)")
    cands = list(values) if values is not None else _insertion_candidates(pi, delta)
    n = len(sigma)
    total = sum(len(cands) ** j * math.comb(n + j, j) for j in range(budget + 1))
    cap = _cap(DEFAULT_COMBO_CAP)
    if total > cap:
        raise EnumerationCapExceeded(
            f"insertion brute force would enumerate {total} combinations; cap is {cap}"
        )
    base = [float(x) for x in sigma.vertices[:, 0]]
    for j in range(budget + 1):
        for gaps in itertools.combinations_with_replacement(range(n + 1), j):
            for vals in itertools.product(cands, repeat=j):
                if decide_weak_discrete(pi, Curve(_apply_insertions(base, gaps, vals)), delta):
                    return j
    return math.inf


def _brute_both(pi: Curve, sigma: Curve, delta: float, budget: Optional[int],
                values: Optional[Sequence[float]]) -> float:
    if budget is None:
        raise ValueError("mixed-edit brute force needs a finite budget")
    cands = list(values) if values is not None else _insertion_candidates(pi, delta)
    n = len(sigma)
    total = 0
    for t in range(budget + 1):
        for d in range(min(t, n - 1) + 1):
            j = t - d
            total += math.comb(n, d) * len(cands) ** j * math.comb((n - d) + j, j)
    cap = _cap(DEFAULT_COMBO_CAP)
    if total > cap:
        raise EnumerationCapExceeded(
            f"mixed-edit brute force would enumerate {total} combinations; cap is {cap}"
        )
    rows = [float(x) for x in sigma.vertices[:, 0]]
    for t in range(budget + 1):
        for d in range(min(t, n - 1) + 1):
            j = t - d
            for drop in itertools.combinations(range(n), d):
                dropped = set(drop)
                base = [x for i, x in enumerate(rows) if i not in dropped]
                for gaps in itertools.combinations_with_replacement(range(len(base) + 1), j):
                    for vals in itertools.product(cands, repeat=j):
                        if decide_weak_discrete(
                            pi, Curve(_apply_insertions(base, gaps, vals)), delta
                        ):
                            return t
    return math.inf


def brute_force_weak_edit(pi, sigma, delta: float, ops: str, budget: Optional[int] = None,
                          *, values: Optional[Sequence[float]] = None) -> float:
    """Minimum weak-discrete edit cost by exhaustive enumeration (R^1 only).

    ops is one of "delete" (all row subsets, or up to the budget), "insert"
    (multisets of candidate values in every interleaving, budget required),
    or "both" (every split of the budget).  Returns the cost or math.inf.
    values overrides the insertion candidate set; by default it is the
    critical set {pi_i - delta, pi_i, pi_i + delta}.

    Raises EnumerationCapExceeded when the enumeration would exceed the cap
    (2^20 subsets / 10^6 combinations, override via FRECHET_EDIT_ENUM_CAP).
    """
    P = _require_1d(pi)
    S = _require_1d(sigma)
    if budget is not None and budget < 0:
        raise ValueError("budget must be nonnegative")
    if ops == "delete":
        return _brute_delete(P, S, delta, budget)
    if ops == "insert":
        return _brute_insert(P, S, delta, budget, values)
    if ops == "both":
        return _brute_both(P, S, delta, budget, values)
    raise ValueError(f"unknown ops {ops!r}; expected delete, insert, or both")


def unlimited_insertion_feasible(pi, sigma, delta: float) -> bool:
    """Can unlimited insertions into sigma make the weak distance <= delta?

    Feasible iff every sigma vertex lies within delta of some pi vertex: a
    start-to-end path must cross every row, so a row with no free vertex is
    fatal; conversely free vertices in consecutive rows can always be joined
    by inserting the run of pi vertices between their columns (plus padding
    rows before/after sigma for the pinned corners).
    """
    P = pi if isinstance(pi, Curve) else Curve(pi)
    S = sigma if isinstance(sigma, Curve) else Curve(sigma)
    if P.dim != S.dim:
        raise ValueError("curves must share a dimension")
    d2 = np.sum((P.vertices[None, :, :] - S.vertices[:, None, :]) ** 2, axis=-1)
    return bool(np.all(d2.min(axis=1) <= delta * delta + EPS))


# ---------------------------------------------------------------------------
# End-to-end verification


def verify_reduction(sat: SatInstance, kind: str = DELETE_UNLIMITED) -> bool:
    """Does brute-force edit feasibility match exhaustive satisfiability?

    True means the generated instance embodies the equivalence (both yes or
    both no).  Only sane for tiny instances; capacity errors propagate.
    """
    bp = gen_reduction(sat, kind)
    expected = sat.satisfiable()
    if kind == DELETE_UNLIMITED:
        cost = brute_force_weak_edit(bp.pi, bp.sigma, bp.delta, "delete")
    elif kind == DELETE_BUDGET:
        cost = brute_force_weak_edit(bp.pi, bp.sigma, bp.delta, "delete", bp.budget)
    elif kind == INSERT_BUDGET:
        cost = brute_force_weak_edit(bp.pi, bp.sigma, bp.delta, "insert", bp.budget)
    elif kind == EDIT_BUDGET:
        cost = brute_force_weak_edit(bp.pi, bp.sigma, bp.delta, "both", bp.budget)
    else:
        raise ValueError(f"unknown reduction kind {kind!r}")
    return (cost != math.inf) == expected


# ---------------------------------------------------------------------------
# Export


def save_blueprint(bp: ReductionBlueprint, out_dir: str) -> dict:
    """Write pi.csv, sigma.csv and manifest.json under out_dir.

    Deterministic: rerunning on the same instance yields byte-identical
    files.  Returns the manifest dict.
    """
    os.makedirs(out_dir, exist_ok=True)
    save_curve(bp.pi, os.path.join(out_dir, "pi.csv"))
    save_curve(bp.sigma, os.path.join(out_dir, "sigma.csv"))
    manifest = {
        "kind": bp.kind,
        "delta": bp.delta,
        "budget": bp.budget,
        "v": bp.sat.v,
        "clauses": [list(cl) for cl in bp.sat.clauses],
        "pi_len": len(bp.pi),
        "sigma_len": len(bp.sigma),
        "variable_rows": list(bp.variable_rows),
        "insert_gap": bp.insert_gap,
        "lifted": bp.lifted,
        "big": bp.big,
        "building": bp.building,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest
