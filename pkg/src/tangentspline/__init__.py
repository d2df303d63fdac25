"""C1 cubic spline curves tangent to their control polygon."""

from .core import (
    ALPHA_MAX,
    ALPHA_MIN,
    ControlPolygon,
    Diagnostics,
    DomainError,
    NodePlacement,
    SingularSystemError,
    SplineCurve,
    SplineGrids,
    StrictAlphaError,
    TridiagonalSystem,
    assemble_system,
    build_grids,
    build_spline,
    compute_diagnostics,
    dominance_margins,
    evaluate,
    evaluate_derivative,
    interior_coefficients,
    interval_coefficients,
    leading_coefficients,
    one_sided_derivatives,
    sample_curve,
    solve_tridiagonal,
)
from .datasets import EXAMPLE_IDS, example_data, example_polygon
from .hull import convex_hull, signed_hull_margin
from .parametric import (
    ParametricCurve,
    PlanarControlPoints,
    build_parametric,
    compute_parametric_diagnostics,
    parameterize,
    sample_parametric,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_MAX",
    "ALPHA_MIN",
    "ControlPolygon",
    "Diagnostics",
    "DomainError",
    "EXAMPLE_IDS",
    "NodePlacement",
    "ParametricCurve",
    "PlanarControlPoints",
    "SingularSystemError",
    "SplineCurve",
    "SplineGrids",
    "StrictAlphaError",
    "TridiagonalSystem",
    "assemble_system",
    "build_grids",
    "build_parametric",
    "build_spline",
    "compute_diagnostics",
    "compute_parametric_diagnostics",
    "convex_hull",
    "dominance_margins",
    "evaluate",
    "evaluate_derivative",
    "example_data",
    "example_polygon",
    "interior_coefficients",
    "interval_coefficients",
    "leading_coefficients",
    "one_sided_derivatives",
    "parameterize",
    "sample_curve",
    "sample_parametric",
    "signed_hull_margin",
    "solve_tridiagonal",
]
