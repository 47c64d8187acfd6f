"""Edit distances for polygonal curves under a Fréchet-distance constraint.

The package answers questions of the form: how many vertex deletions and
insertions does it take to bring one polygonal curve within Fréchet distance
delta of another?  Exact algorithms cover the strong (monotone) discrete and
continuous distances; generators and brute-force checkers cover the weak
(non-monotone) variants, which are only tractable through small instances.
"""

from .geometry import (
    Ball,
    Curve,
    ball_segment_clip,
    clip,
    clip_end,
    clip_start,
    concat,
    dist,
    enter_point,
    leave_point,
    load_curve,
    min_enclosing_ball,
    point_segment_dist,
    save_curve,
    save_curve_json,
)
from .freespace import (
    FreeSpaceDiagram,
    decide_continuous,
    decide_discrete,
    decide_weak_continuous,
    decide_weak_discrete,
    discrete_frechet,
    frechet_matching,
    render_free_space,
    seg_seg_dist,
)
from .dagcomplex import (
    DagComplex,
    ProductReach,
    path_complex,
    product_reachability,
)
from .discrete_edit import (
    EditDpTable,
    EditOp,
    EditScript,
    MinQueue,
    delete_table,
    discrete_delete_edit,
    discrete_edit,
    discrete_insert_edit,
    edit_table,
    insert_table,
    mu_table,
    reconstruct_edits,
    verified_apply,
)
from .minvertex import (
    MvResult,
    candidate_points,
    mv_anchored,
    mv_one_sided,
    mv_unanchored,
)
from .continuous_edit import (
    CanonicalSubcurveSet,
    CsCandidate,
    WeightedLayeredComplex,
    canonical_subcurves,
    complete_weighted_complex,
    continuous_delete_edit,
    continuous_delete_edit_two_sided,
    continuous_delete_edit_two_sided_value,
    continuous_delete_edit_two_sided_witness,
    continuous_delete_edit_value,
    continuous_delete_edit_witness,
    continuous_edit,
    continuous_edit_value,
    continuous_edit_witness,
    continuous_insert_edit,
    continuous_insert_edit_value,
    continuous_insert_edit_witness,
    shortcut_decide,
)

from .hardness import (
    DEFAULT_COMBO_CAP,
    DEFAULT_SUBSET_CAP,
    DELETE_BUDGET,
    DELETE_UNLIMITED,
    EDIT_BUDGET,
    INSERT_BUDGET,
    KINDS,
    EnumerationCapExceeded,
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

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "Curve",
    "ball_segment_clip",
    "clip",
    "clip_end",
    "clip_start",
    "concat",
    "dist",
    "enter_point",
    "leave_point",
    "load_curve",
    "min_enclosing_ball",
    "point_segment_dist",
    "save_curve",
    "save_curve_json",
    "FreeSpaceDiagram",
    "decide_continuous",
    "decide_discrete",
    "decide_weak_continuous",
    "decide_weak_discrete",
    "discrete_frechet",
    "frechet_matching",
    "render_free_space",
    "seg_seg_dist",
    "DagComplex",
    "ProductReach",
    "path_complex",
    "product_reachability",
    "EditDpTable",
    "EditOp",
    "EditScript",
    "MinQueue",
    "delete_table",
    "discrete_delete_edit",
    "discrete_edit",
    "discrete_insert_edit",
    "edit_table",
    "insert_table",
    "mu_table",
    "reconstruct_edits",
    "verified_apply",
    "MvResult",
    "candidate_points",
    "mv_anchored",
    "mv_one_sided",
    "mv_unanchored",
    "CanonicalSubcurveSet",
    "CsCandidate",
    "WeightedLayeredComplex",
    "canonical_subcurves",
    "complete_weighted_complex",
    "continuous_delete_edit",
    "continuous_delete_edit_two_sided",
    "continuous_delete_edit_two_sided_value",
    "continuous_delete_edit_two_sided_witness",
    "continuous_delete_edit_value",
    "continuous_delete_edit_witness",
    "continuous_edit",
    "continuous_edit_value",
    "continuous_edit_witness",
    "continuous_insert_edit",
    "continuous_insert_edit_value",
    "continuous_insert_edit_witness",
    "shortcut_decide",
    "DEFAULT_COMBO_CAP",
    "DEFAULT_SUBSET_CAP",
    "DELETE_BUDGET",
    "DELETE_UNLIMITED",
    "EDIT_BUDGET",
    "INSERT_BUDGET",
    "KINDS",
    "EnumerationCapExceeded",
    "ReductionBlueprint",
    "SatInstance",
    "brute_force_weak_edit",
    "gen_deletion_reduction",
    "gen_insertion_reduction",
    "gen_reduction",
    "lift_blueprint",
    "lift_to_plane",
    "sat_from_dimacs",
    "sat_to_dimacs",
    "save_blueprint",
    "unlimited_insertion_feasible",
    "verify_reduction",
    "__version__",
]
