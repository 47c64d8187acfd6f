"""Fewest-vertex curves within delta of a given curve.

Given a wiggly polyline, how few vertices can a replacement curve have
while staying within Frechet distance delta?  The anchored variant pins the
replacement's endpoints to prescribed points, which is what the insertion
machinery uses to build candidate subcurves.  Run with:

    python3 demos/minimum_vertex_cover.py
"""

import numpy as np

from frechet_edit import Curve, decide_continuous, mv_anchored, mv_unanchored

# a saw-tooth: lots of vertices, but delta=1.1 lets one straight segment
# thread the middle of the teeth
saw = Curve([
    [0.0, 0.0], [1.0, 1.0], [2.0, 0.0], [3.0, 1.0],
    [4.0, 0.0], [5.0, 1.0], [6.0, 0.0],
])

for delta in (1.1, 0.6, 0.3):
    r = mv_unanchored(saw, delta)
    assert decide_continuous(saw, r.full_curve(), delta + 1e-9)
    print(f"delta={delta}: {len(saw)} vertices -> {r.count}")
    print("   ", np.round(r.full_curve().vertices, 2).tolist())

# anchoring the endpoints somewhere specific can cost up to two extra
# vertices but never more
s, t = (0.0, 0.8), (6.0, 0.2)
delta = 1.1
free = mv_unanchored(saw, delta)
pinned = mv_anchored(s, t, saw, delta)
print(f"\nanchored at {s} and {t}: {pinned.count} vertices "
      f"(free version used {free.count})")
assert free.count <= pinned.count <= free.count + 2
ends = pinned.full_curve().vertices[[0, -1]]
print("curve ends:", np.round(ends, 2).tolist())
