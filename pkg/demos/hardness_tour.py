"""Why the weak variants are hard: 3SAT instances as curve pairs.

Every 3-CNF formula expands into a pair of 1-dimensional curves where
deleting sigma rows (or inserting new ones, depending on the kind) within
budget is possible exactly when the formula is satisfiable.  This demo
expands a tiny formula, prints the gadget rows, checks the equivalence by
brute force, and lifts the instance into the plane where the same question
becomes weak *continuous* feasibility.  Run with:

    python3 demos/hardness_tour.py
"""

from frechet_edit import (
    KINDS,
    SatInstance,
    brute_force_weak_edit,
    decide_weak_continuous,
    decide_weak_discrete,
    gen_reduction,
    lift_blueprint,
    sat_to_dimacs,
    verify_reduction,
)

sat = SatInstance(1, [(1, 1, 1)])          # x1, satisfiable
unsat = SatInstance(1, [(1, 1, 1), (-1, -1, -1)])  # x1 and not-x1

print("formula:")
print(sat_to_dimacs(sat))

bp = gen_reduction(sat, "delete-unlimited")
rows = bp.sigma.vertices[:, 0].tolist()
print("sigma rows:", rows)
print("variable rows (1-based):", list(bp.variable_rows),
      "values", [rows[i - 1] for i in bp.variable_rows])
print("pi columns:", bp.pi.vertices[:, 0].tolist())

# deleting the right polarity row makes the pair weakly matchable
cost = brute_force_weak_edit(bp.pi, bp.sigma, bp.delta, "delete")
print(f"\nfewest deletions: {cost} (satisfiable => finite)")

bad = gen_reduction(unsat, "delete-unlimited")
cost = brute_force_weak_edit(bad.pi, bad.sigma, bad.delta, "delete")
print(f"unsatisfiable formula: fewest deletions = {cost}")

print("\nverify_reduction over all four kinds:")
for kind in KINDS:
    ok_sat = verify_reduction(sat, kind)
    ok_unsat = verify_reduction(unsat, kind)
    print(f"  {kind:18s} sat:{ok_sat} unsat:{ok_unsat}")

# the planar lift turns vertical towers between consecutive samples; weak
# continuous feasibility of the lifted pair equals weak discrete of the
# original, carrying the hardness into the continuous setting
lifted = lift_blueprint(bp)
same = decide_weak_discrete(bp.pi, bp.sigma, 1.0) == \
    decide_weak_continuous(lifted.pi, lifted.sigma, 1.0)
print(f"\nlift preserves the decision: {same} "
      f"(pi now {len(lifted.pi)} vertices in R^2)")
