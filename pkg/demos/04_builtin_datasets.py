#!/usr/bin/env python3
"""The two built-in datasets, their figures, and their health reports.

Dataset 1 is a deliberately spiky polyline: a good stress test for the
containment property (the curve must stay inside the control-point
hull).  Dataset 2 samples a half-circle; the curve approximates the arc
closely everywhere except near the ends, where the circle's tangent is
vertical and no function graph can follow it.
"""

from pathlib import Path

import numpy as np

from tangentspline import build_spline, compute_diagnostics, example_data, example_polygon, sample_curve
from tangentspline.io_formats import write_svg

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

for ex_id in (1, 2):
    control = example_polygon(ex_id)
    curve = build_spline(control)
    diag = compute_diagnostics(curve, sample_count=1000)
    samples = sample_curve(curve, 1000)
    path = out_dir / f"dataset{ex_id}.svg"
    path.write_bytes(write_svg(np.column_stack([control.tau, control.values]), samples))
    name = example_data(ex_id)["name"]
    print(f"dataset {ex_id} ({name}):")
    print(f"  dominance margin min : {diag.dominance_margins.min():.3f}")
    print(f"  c1 residual max      : {diag.max_c1_residual():.2e}")
    print(f"  hull margin          : {diag.hull_margin:+.2e}")
    print(f"  figure               : {path}")

# How close does dataset 2 get to the true half-circle?
curve = build_spline(example_polygon(2))
xs = np.linspace(0.0, 1.0, 5001)
gap = np.abs(curve(xs) - np.sqrt(xs - xs**2))
print("\nhalf-circle gap: max {:.5f} at x = {:.3f}; max over [0.1, 0.9] = {:.5f}".format(
    gap.max(), xs[gap.argmax()], gap[(xs >= 0.1) & (xs <= 0.9)].max()
))
