"""Hardness generators and brute-force verifiers.

Oracles used here:
  * exhaustive satisfiability (2^v assignments) on one side, exhaustive
    weak-discrete edit enumeration on the other -- verify_reduction compares
    the two with no shared machinery;
  * frozen hand-expanded gadget sequences for the v=1 constructions;
  * decide_weak_discrete vs decide_weak_continuous on lifted curves;
  * a dense value grid cross-checking the critical insertion candidates.
"""

import itertools
import json
import math
import os

import numpy as np
import pytest

from frechet_edit.freespace import decide_weak_continuous, decide_weak_discrete
from frechet_edit.geometry import Curve
from frechet_edit.hardness import (
    DEFAULT_COMBO_CAP,
    DEFAULT_SUBSET_CAP,
    EnumerationCapExceeded,
    KINDS,
    ReductionBlueprint,
    SatInstance,
    brute_force_weak_edit,
    gen_deletion_reduction,
    gen_insertion_reduction,
    gen_reduction,
    lift_blueprint,
    lift_to_plane,
    sat_from_dimacs,
    sat_to_dimacs,
    save_blueprint,
    unlimited_insertion_feasible,
    verify_reduction,
)

INF = math.inf

SAT1 = SatInstance(1, [(1, 1, 1)])
UNSAT1 = SatInstance(1, [(1, 1, 1), (-1, -1, -1)])


def one_var_instances():
    """All v=1 instances with at most two clauses, up to literal order."""
    clauses = sorted(set(tuple(sorted(c)) for c in itertools.combinations_with_replacement([1, -1], 3)))
    insts = [SatInstance(1, [c]) for c in clauses]
    insts += [SatInstance(1, list(p)) for p in itertools.combinations_with_replacement(clauses, 2)]
    return insts


# ---------------------------------------------------------------------------
# SatInstance and DIMACS


def test_sat_instance_validation():
    with pytest.raises(ValueError):
        SatInstance(0, [])
    with pytest.raises(ValueError):
        SatInstance(1, [(1, 1)])  # not 3 literals
    with pytest.raises(ValueError):
        SatInstance(1, [(1, 2, 1)])  # variable 2 out of range
    with pytest.raises(ValueError):
        SatInstance(1, [(1, 0, 1)])  # zero literal


def test_sat_satisfiability():
    assert SAT1.satisfiable()
    assert not UNSAT1.satisfiable()
    assert SAT1.satisfying_assignment() == (True,)
    # tautological clause (both polarities) is satisfied either way
    assert SatInstance(1, [(1, -1, 1)]).satisfiable()
    assert SatInstance(2, [(1, 2, 2), (-1, -1, -1)]).satisfiable()  # x1=F, x2=T


def test_dimacs_roundtrip():
    sat = SatInstance(2, [(1, -2, 1), (-1, 2, 2)])
    again = sat_from_dimacs(sat_to_dimacs(sat))
    assert again == sat


def test_dimacs_parsing():
    text = "c a comment\np cnf 2 1\n1 -2 1 0\n"
    sat = sat_from_dimacs(text)
    assert sat.v == 2 and sat.clauses == ((1, -2, 1),)
    with pytest.raises(ValueError, match="header"):
        sat_from_dimacs("1 2 3 0\n")
    with pytest.raises(ValueError, match="3 literals"):
        sat_from_dimacs("p cnf 2 1\n1 -2 0\n")
    with pytest.raises(ValueError, match="promises"):
        sat_from_dimacs("p cnf 2 2\n1 -2 1 0\n")
    with pytest.raises(ValueError, match="unterminated"):
        sat_from_dimacs("p cnf 2 1\n1 -2 1\n")


# ---------------------------------------------------------------------------
# Deletion blueprints


def test_deletion_sigma_frozen_v1():
    bp = gen_deletion_reduction(SAT1)
    assert [int(x) for x in bp.sigma.vertices[:, 0]] == [0, 9, 15, 20, 16, 14, 11, 15, 20, 30]


def test_deletion_clause_columns_frozen_v1():
    bp = gen_deletion_reduction(SAT1)
    assert bp.building["clause_columns"][0] == [10, 16, 20, 16, 10, 16, 20]
    # negative literal substitutes the low polarity value instead
    bp_neg = gen_deletion_reduction(SatInstance(1, [(-1, -1, -1)]))
    assert bp_neg.building["clause_columns"][0] == [10, 14, 20, 14, 10, 14, 20]


def test_deletion_sigma_length_formula():
    for v in (1, 2, 3):
        sat = SatInstance(v, [(1, 1, 1)])
        bp = gen_deletion_reduction(sat)
        assert len(bp.sigma) == 4 * v + 6
        vals = bp.sigma.vertices[:, 0]
        assert np.array_equal(vals, np.round(vals))  # integer coordinates
        assert bp.delta == 1.0


def test_deletion_variable_rows_annotation():
    for v in (1, 2, 3):
        bp = gen_deletion_reduction(SatInstance(v, [(1, 1, 1)]))
        vals = [int(bp.sigma.vertices[i - 1, 0]) for i in bp.variable_rows]
        # both polarity rows per variable, written top-of-layer first
        expect = []
        for j in range(v, 0, -1):
            expect += [10 * j + 6, 10 * j + 4]
        assert vals == expect


def test_deletion_series_shape():
    # two clauses pair off evenly, the containment gadget rides the odd slot
    bp = gen_deletion_reduction(UNSAT1)
    gadget = 3 * 1 + 4
    assert len(bp.pi) == 1 + 3 * (gadget + 1)
    assert bp.building["containment"] == [9, 15, 20, 15, 11, 15, 20]
    # an odd clause count gets one clause duplicated before the containment
    bp1 = gen_deletion_reduction(SAT1)
    assert len(bp1.pi) == 1 + 3 * (gadget + 1)
    assert int(bp1.pi.vertices[0, 0]) == 0
    assert int(bp1.pi.vertices[-1, 0]) == 30  # ends at the shared top value


def test_budgeted_deletion_duplication():
    for v in (1, 2):
        bp = gen_deletion_reduction(SatInstance(v, [(1, 1, 1)]), budgeted=True)
        assert bp.kind == "delete-budget-k"
        assert bp.budget == v
        assert bp.building["containment"] is None
        rows = [int(x) for x in bp.sigma.vertices[:, 0]]
        var = set(bp.variable_rows)
        # polarity rows appear once, everything else v+1 times in a row
        i = 0
        while i < len(rows):
            if (i + 1) in var:
                i += 1
                continue
            run = 1
            while i + run < len(rows) and rows[i + run] == rows[i] and (i + run + 1) not in var:
                run += 1
            assert run % (v + 1) == 0, f"row {rows[i]} run {run}"
            i += run
        # pi columns are likewise duplicated
        cols = bp.pi.vertices[:, 0]
        assert len(cols) % (v + 1) == 0
        assert np.array_equal(cols.reshape(-1, v + 1), np.repeat(cols[:: v + 1], v + 1).reshape(-1, v + 1))


# ---------------------------------------------------------------------------
# Insertion blueprints


def test_insertion_sequences_frozen_v1():
    bp = gen_insertion_reduction(SAT1)
    assert bp.building["L_minus"] == [14]
    assert bp.building["L_plus"] == [16]
    assert bp.building["L_sub"] == {"+1": [17]}
    bp_neg = gen_insertion_reduction(SatInstance(1, [(-1, -1, -1)]))
    assert bp_neg.building["L_sub"] == {"-1": [13]}
    # the variable sublayer is omitted entirely from the middle row gadget
    assert bp.building["G_hat"] == [10, 15, 20, 10, 15, 20]
    assert bp.building["G"] == [10, 14, 20, 16, 10, 15, 20]


def test_insertion_sigma_and_gap():
    bp = gen_insertion_reduction(SAT1)
    rows = [int(x) for x in bp.sigma.vertices[:, 0]]
    assert rows == [0, 5, 10, 14, 20, 16, 10, 15, 20, 30, 20, 15, 10, 20, 15, 10,
                    5, 10, 14, 20, 16, 10, 15, 20, 30, 40]
    assert bp.budget == 1
    g = bp.insert_gap
    assert (rows[g - 1], rows[g]) == (10, 20)  # the sublayer slot sits here
    for v in (1, 2, 3):
        bpv = gen_insertion_reduction(SatInstance(v, [(1, 1, 1)]))
        assert bpv.insert_gap == 4 * v + 9
        assert bpv.budget == v


def test_edit_blueprint_duplicates_rows():
    bp = gen_insertion_reduction(SAT1, with_deletions=True)
    assert bp.kind == "edit-budget-k"
    plain = gen_insertion_reduction(SAT1)
    rows = bp.sigma.vertices[:, 0]
    assert len(rows) == 2 * len(plain.sigma)
    assert np.array_equal(rows[::2], plain.sigma.vertices[:, 0])
    assert np.array_equal(rows[1::2], plain.sigma.vertices[:, 0])
    assert bp.insert_gap == 2 * plain.insert_gap
    # pi is untouched: edits stay on sigma for this kind
    assert bp.pi == plain.pi


def test_gen_reduction_dispatch():
    for kind in KINDS:
        bp = gen_reduction(SAT1, kind)
        assert bp.kind == kind
    with pytest.raises(ValueError, match="unknown reduction kind"):
        gen_reduction(SAT1, "delete-everything")
    with pytest.raises(ValueError, match="at least one clause"):
        gen_deletion_reduction(SatInstance(1, []))


# ---------------------------------------------------------------------------
# Brute-force oracle


def test_brute_force_already_feasible():
    assert brute_force_weak_edit([0.0, 2.0], [0.0, 2.0], 1.0, "delete") == 0
    assert brute_force_weak_edit([0.0, 2.0], [0.0, 2.0], 1.0, "insert", 2) == 0
    assert brute_force_weak_edit([0.0, 2.0], [0.0, 2.0], 1.0, "both", 2) == 0


def test_brute_force_single_outlier_deletion():
    # the middle row value 9 is an outlier: exactly one deletion fixes it
    assert brute_force_weak_edit([0.0, 2.0], [0.0, 9.0, 2.0], 1.0, "delete") == 1


def test_brute_force_horizontal_gap_insertion():
    pi = [0.0, 20.0, 0.0]
    sigma = [0.0, 0.0]
    assert brute_force_weak_edit(pi, sigma, 1.0, "insert", 2) == 1
    # only values within 1 of the towering column bridge the gap
    for x in (19.0, 20.0, 21.0):
        assert brute_force_weak_edit(pi, sigma, 1.0, "insert", 2, values=[x]) == 1
    for x in (18.0, 22.0, 0.0):
        assert brute_force_weak_edit(pi, sigma, 1.0, "insert", 2, values=[x]) == INF


def test_brute_force_mixed_ops():
    # one deletion plus one insertion needed: drop the 9, bridge the 20
    pi = [0.0, 20.0, 0.0]
    sigma = [0.0, 9.0, 0.0]
    assert brute_force_weak_edit(pi, sigma, 1.0, "both", 2) == 2
    assert brute_force_weak_edit(pi, sigma, 1.0, "both", 1) == INF


def test_brute_force_argument_errors():
    with pytest.raises(ValueError, match="budget"):
        brute_force_weak_edit([0.0], [5.0], 1.0, "insert")
    with pytest.raises(ValueError, match="ops"):
        brute_force_weak_edit([0.0], [5.0], 1.0, "replace", 1)
    with pytest.raises(ValueError, match="R\\^1"):
        brute_force_weak_edit([[0.0, 0.0], [1.0, 1.0]], [[0.0, 0.0]], 1.0, "delete")
    with pytest.raises(ValueError, match="nonnegative"):
        brute_force_weak_edit([0.0], [5.0], 1.0, "delete", -1)


def test_enumeration_caps():
    with pytest.raises(EnumerationCapExceeded, match=str(DEFAULT_SUBSET_CAP)):
        brute_force_weak_edit(Curve([0.0]), Curve(np.zeros(25)), 1.0, "delete")
    with pytest.raises(EnumerationCapExceeded, match=str(DEFAULT_COMBO_CAP)):
        brute_force_weak_edit(Curve(np.arange(50.0) * 3), Curve(np.zeros(40)), 1.0, "insert", 4)


def test_enumeration_cap_env_override(monkeypatch):
    monkeypatch.setenv("FRECHET_EDIT_ENUM_CAP", "4")
    with pytest.raises(EnumerationCapExceeded, match="cap is 4"):
        brute_force_weak_edit([0.0, 2.0], [0.0, 9.0, 2.0], 1.0, "delete")
    monkeypatch.setenv("FRECHET_EDIT_ENUM_CAP", str(2**22))
    assert brute_force_weak_edit([0.0, 2.0], [0.0, 9.0, 2.0], 1.0, "delete") == 1


def test_insertion_candidates_match_dense_grid():
    # the critical values pi_i and pi_i +- delta realise every possible
    # coverage pattern: a dense grid finds nothing cheaper
    pi = [0.0, 20.0, 0.0]
    sigma = [0.0, 0.0]
    critical = brute_force_weak_edit(pi, sigma, 1.0, "insert", 2)
    dense = brute_force_weak_edit(pi, sigma, 1.0, "insert", 2,
                                  values=list(np.arange(-2.0, 22.25, 0.25)))
    assert critical == dense == 1


# ---------------------------------------------------------------------------
# Reduction verification


def test_verify_frozen_examples():
    assert verify_reduction(SAT1, "delete-unlimited")
    assert verify_reduction(UNSAT1, "delete-unlimited")


def test_verify_all_kinds_v1():
    for sat in one_var_instances():
        for kind in KINDS:
            assert verify_reduction(sat, kind), (sat, kind)


def test_verify_deletion_v2_spot_checks():
    # the exhaustive v<=2 sweep lives in the acceptance suite; here the
    # interesting corners: an unsatisfiable pair over two variables, and a
    # mixed-variable satisfiable pair
    assert verify_reduction(SatInstance(2, [(1, 1, 1), (-1, -1, -1)]), "delete-unlimited")
    assert verify_reduction(SatInstance(2, [(1, 2, -1), (-2, -2, 1)]), "delete-unlimited")
    assert verify_reduction(SatInstance(2, [(1, 1, 1), (-1, -1, -1)]), "delete-budget-k")
    assert verify_reduction(SatInstance(2, [(1, 2, -1), (-2, -2, 1)]), "delete-budget-k")


def test_opposing_gap_property():
    # deleting the row that bridges one polarity must permanently block the
    # other: no superset of that deletion may pass the opposite clause
    for cl, opposing_value in (((1, 1, 1), 16), ((-1, -1, -1), 14)):
        bp = gen_deletion_reduction(SatInstance(1, [cl]))
        rows = bp.sigma.vertices[:, 0]
        opp = int(np.nonzero(rows == opposing_value)[0][0])
        n = len(rows)
        for r in range(n):
            for drop in itertools.combinations(range(n), r):
                if opp not in drop:
                    continue
                keep = np.ones(n, dtype=bool)
                keep[list(drop)] = False
                assert not decide_weak_discrete(bp.pi, Curve(rows[keep]), 1.0), drop


def test_containment_property():
    # every feasible deletion subset touches only the variable-layer rows
    for sat in one_var_instances():
        bp = gen_deletion_reduction(sat)
        rows = bp.sigma.vertices[:, 0]
        var = set(bp.variable_rows)
        n = len(rows)
        for r in range(n):
            for drop in itertools.combinations(range(n), r):
                keep = np.ones(n, dtype=bool)
                keep[list(drop)] = False
                if decide_weak_discrete(bp.pi, Curve(rows[keep]), 1.0):
                    assert set(d + 1 for d in drop) <= var, (sat, drop)


# ---------------------------------------------------------------------------
# Lifting


def test_lift_examples():
    lifted = lift_to_plane(Curve([0.0, 5.0]), big=10**6)
    assert lifted.vertices.tolist() == [[0.0, 0.0], [0.0, 10**6], [5.0, 0.0]]
    single = lift_to_plane(Curve([3.0]))
    assert single.vertices.tolist() == [[3.0, 0.0]]
    with pytest.raises(ValueError, match="R\\^1"):
        lift_to_plane(Curve([[0.0, 1.0]]))


def test_lift_equivalence_random_pairs():
    # sizes start at 2: a lone vertex would force the continuous traversal to
    # keep the whole opposing curve, towers included, within delta, while the
    # discrete check only ever looks at vertices.  The equivalence needs at
    # least one edge per curve so a parked vertex can sync-climb a tower.
    rng = np.random.default_rng(7)
    for _ in range(30):
        m, n = rng.integers(2, 7, size=2)
        P = Curve(rng.integers(-5, 6, size=m).astype(float))
        S = Curve(rng.integers(-5, 6, size=n).astype(float))
        assert decide_weak_discrete(P, S, 1.0) == decide_weak_continuous(
            lift_to_plane(P), lift_to_plane(S), 1.0
        )


def test_lift_blueprint_equivalence_and_structure():
    for kind in KINDS:
        for sat in (SAT1, SatInstance(2, [(1, -2, 1)])):
            bp = gen_reduction(sat, kind)
            lifted = lift_blueprint(bp)
            assert lifted.lifted and lifted.big == 10**6 and lifted.pi.dim == 2
            assert decide_weak_discrete(bp.pi, bp.sigma, 1.0) == decide_weak_continuous(
                lifted.pi, lifted.sigma, 1.0
            )
            # lifted variable-row annotations keep pointing at the same values
            for orig, new in zip(bp.variable_rows, lifted.variable_rows):
                assert lifted.sigma.vertices[new - 1, 0] == bp.sigma.vertices[orig - 1, 0]
            with pytest.raises(ValueError, match="already lifted"):
                lift_blueprint(lifted)


def test_lift_insertion_gap_towers():
    # the empty sublayer receives v-1 towers: v slots for inserted rows
    for v in (1, 2, 3):
        sat = SatInstance(v, [(1, 1, 1)])
        bp = gen_insertion_reduction(sat)
        lifted = lift_blueprint(bp)
        g = lifted.insert_gap
        run = 0
        verts = lifted.sigma.vertices
        while verts[g + run, 1] > 0:  # count towers after the gap row
            run += 1
        assert run == v - 1


def test_lift_budgeted_towers_duplicated():
    bp = gen_deletion_reduction(SatInstance(2, [(1, 1, 1)]), budgeted=True)
    lifted = lift_blueprint(bp)
    verts = lifted.sigma.vertices
    runs = []
    i = 0
    while i < len(verts):
        if verts[i, 1] > 0:
            j = i
            while j < len(verts) and verts[j, 1] > 0:
                j += 1
            runs.append(j - i)
            i = j
        else:
            i += 1
    assert runs and all(r == 3 for r in runs)  # v+1 copies of every tower


# ---------------------------------------------------------------------------
# Unlimited insertion easy case


def test_unlimited_insertion_direct_check():
    assert unlimited_insertion_feasible([0.0, 20.0, 0.0], [0.0, 0.0], 1.0)
    # a row nobody covers is fatal no matter how many insertions
    assert not unlimited_insertion_feasible([0.0, 2.0], [0.0, 9.0], 1.0)
    # endpoint mismatch alone is repairable by padding insertions
    assert unlimited_insertion_feasible([0.0, 5.0], [5.0, 0.0], 1.0)


def test_unlimited_insertion_cross_validated():
    # single-row curves need at most m-1 insertions when feasible, so a
    # budget of m-1 makes the brute force an exact reference
    rng = np.random.default_rng(3)
    for _ in range(25):
        m = int(rng.integers(1, 4))
        P = Curve(rng.integers(0, 5, size=m).astype(float))
        S = Curve(rng.integers(0, 5, size=1).astype(float))
        direct = unlimited_insertion_feasible(P, S, 1.0)
        cost = brute_force_weak_edit(P, S, 1.0, "insert", max(m - 1, 1))
        assert direct == (cost != INF)


# ---------------------------------------------------------------------------
# Export


def test_save_blueprint_deterministic(tmp_path):
    bp = gen_reduction(SAT1, "insert-budget-k")
    d1, d2 = tmp_path / "a", tmp_path / "b"
    m1 = save_blueprint(bp, str(d1))
    save_blueprint(bp, str(d2))
    for name in ("pi.csv", "sigma.csv", "manifest.json"):
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
    doc = json.loads((d1 / "manifest.json").read_text())
    assert doc["kind"] == "insert-budget-k"
    assert doc["budget"] == 1
    assert doc["delta"] == 1.0
    assert doc["insert_gap"] == 13
    assert doc["building"]["G_hat"] == [10, 15, 20, 10, 15, 20]
    assert m1["sigma_len"] == 26
