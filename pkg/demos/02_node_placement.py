#!/usr/bin/env python3
"""How the node ratio alpha shapes the curve and the linear system.

alpha measures where each interval's interpolation node sits, as the
offset from the interval's RIGHT end divided by the interval width
(alpha = 1/2 is the midpoint).  Inside [1/3, 2/3] the system rows are
strictly diagonally dominant, which is what guarantees a unique curve.
This demo sweeps alpha, prints the dominance margins, and shows what
strict mode rejects.
"""

import numpy as np

from tangentspline import (
    ControlPolygon,
    DomainError,
    NodePlacement,
    StrictAlphaError,
    assemble_system,
    build_grids,
    build_spline,
    dominance_margins,
    evaluate,
)

control = ControlPolygon([0.0, 1.0, 2.0, 3.0], [0.0, 1.0, 1.0, 0.0])

print("alpha   min interior margin   S(1.5)")
for alpha in (1 / 3, 0.4, 0.5, 0.6, 2 / 3):
    placement = NodePlacement.constant(alpha, control.n - 1)
    margins = dominance_margins(assemble_system(build_grids(control, placement)))
    curve = build_spline(control, placement)
    print(f"{alpha:5.3f}   {margins[1:-1].min():19.6f}   {evaluate(curve, 1.5):8.5f}")

# Strict mode refuses ratios outside the guaranteed range...
try:
    NodePlacement([0.5, 0.8, 0.5])
except StrictAlphaError as e:
    print("\nstrict mode says:", e)

# ...but you can opt out, at your own risk: the system may (rarely) be
# singular, and there is no containment/uniqueness guarantee.
wild = build_spline(control, NodePlacement.constant(0.9, 3, strict=False))
print("alpha=0.9 (non-strict) knot values:", np.round(wild.knot_values, 4))

# Even inside the strict range, the margin closes right at a 2/3 -> 1/3
# ratio handoff between adjacent intervals; strict mode flags that too.
try:
    build_spline(ControlPolygon([0, 1, 2], [0, 1, 0]), NodePlacement([2 / 3, 1 / 3]))
except DomainError as e:
    print("borderline handoff:", e)
