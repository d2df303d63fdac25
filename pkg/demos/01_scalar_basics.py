#!/usr/bin/env python3
"""A first curve: build, evaluate, and see why the polygon is tangent.

The curve does not pass through interior control points.  Instead, one
interpolation node is placed inside every interval, and there the curve
takes the value AND the slope of the control-polygon segment -- so each
segment touches the curve tangentially.  Run this script and open
demos/output/scalar_basics.svg to see it.
"""

from pathlib import Path

import numpy as np

from tangentspline import (
    ControlPolygon,
    build_spline,
    evaluate,
    evaluate_derivative,
    sample_curve,
)
from tangentspline.io_formats import write_svg

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

# A zig-zag polygon.
control = ControlPolygon(
    tau=[0.0, 1.0, 2.0, 3.5, 5.0],
    values=[0.0, 2.0, -1.0, 3.0, 1.0],
)
curve = build_spline(control)  # midpoint node placement by default

print("knot values (curve at the tau's):", np.round(curve.knot_values, 4))
print("cubic-term coefficient per interval:", np.round(curve.leading_coeffs, 4))

# At every interior node the curve value and slope equal the chord's.
g = curve.grids
print("\nnode      curve value  chord value  curve slope  chord slope")
for j in range(g.intervals):
    x = g.nodes[j]
    print(
        f"{x:7.3f}  {evaluate(curve, x):11.6f}  {g.chord_values[j]:11.6f}"
        f"  {evaluate_derivative(curve, x):11.6f}  {g.chord_slopes[j]:11.6f}"
    )

# Endpoints are interpolated exactly.
a, b = curve.domain
print(f"\nS({a}) = {evaluate(curve, a)}   S({b}) = {evaluate(curve, b)}")

samples = sample_curve(curve, 800)
path = out_dir / "scalar_basics.svg"
path.write_bytes(write_svg(np.column_stack([g.tau, g.values]), samples))
print(f"\nfigure written to {path}")
