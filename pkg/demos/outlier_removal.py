"""Continuous-distance outlier removal and the free-space picture.

sigma is a planar track with two glitch points far off the route.  The
continuous deletion search finds the fewest vertices to drop so the curve
sweeps within delta of the reference, and the renderer writes before/after
free-space diagrams next to this script.  Run with:

    python3 demos/outlier_removal.py
"""

import os

import numpy as np

from frechet_edit import (
    Curve,
    continuous_delete_edit_value,
    continuous_delete_edit_witness,
    continuous_delete_edit_two_sided_value,
    decide_continuous,
    render_free_space,
    shortcut_decide,
)

here = os.path.dirname(os.path.abspath(__file__))

pi = Curve([[0.0, 0.0], [3.0, 0.5], [6.0, 0.0], [9.0, 0.5]])
sigma = Curve([
    [0.2, 0.1],
    [2.0, 6.0],   # glitch: GPS jumped
    [3.1, 0.4],
    [6.0, -4.5],  # glitch again
    [6.2, 0.1],
    [8.8, 0.4],
])
delta = 1.0

cost = continuous_delete_edit_value(pi, sigma, delta)
curve, k = continuous_delete_edit_witness(pi, sigma, delta, int(cost))
assert k == cost and decide_continuous(pi, curve, delta + 1e-9)

print(f"deletions needed at delta={delta}: {int(cost)}")
print("kept vertices:")
print(np.round(curve.vertices, 2))

# shortcutting = deleting interior vertices for free while pinning the ends;
# with both glitches interior, the answer must be yes here
print("shortcut feasible:", shortcut_decide(pi, sigma, delta))

# if pi itself may also shed vertices, a shared budget can only help
both = continuous_delete_edit_two_sided_value(pi, sigma, delta)
print(f"two-sided deletions: {int(both)} (never more than one-sided)")

render_free_space(pi, sigma, delta, out=os.path.join(here, "free_space_before.svg"))
render_free_space(pi, curve, delta, out=os.path.join(here, "free_space_after.svg"))
print("wrote free_space_before.svg / free_space_after.svg")
