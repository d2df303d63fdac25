"""Planar curves built from one scalar spline per coordinate.

2D control points are assigned a shared parameter grid (uniform or
chord-length); each coordinate is then a scalar spline over that grid.
The curve passes through the first and last control points, touches
every control-polygon chord at the interior parameter nodes, and is
tangent to the chord there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import (
    ControlPolygon,
    Diagnostics,
    DomainError,
    NodePlacement,
    SplineCurve,
    _readonly,
    assemble_system,
    build_spline,
    dominance_margins,
    evaluate,
    evaluate_derivative,
    one_sided_derivatives,
)
from .hull import signed_hull_margin

Parameterization = Literal["uniform", "chord"]


@dataclass(frozen=True)
class PlanarControlPoints:
    """2D control points; consecutive points must not coincide."""

    points: np.ndarray

    def __post_init__(self):
        pts = _readonly(np.atleast_2d(self.points))
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DomainError("points must be an (n, 2) array")
        if pts.shape[0] < 2:
            raise DomainError("need at least 2 control points")
        if not np.all(np.isfinite(pts)):
            raise DomainError("control points must be finite")
        steps = np.hypot(*np.diff(pts, axis=0).T)
        if np.any(steps == 0.0):
            bad = int(np.flatnonzero(steps == 0.0)[0])
            raise DomainError(f"points {bad} and {bad + 1} coincide")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class ParametricCurve:
    """Coordinate splines sharing one parameter grid and placement."""

    t: np.ndarray
    sx: SplineCurve
    sy: SplineCurve
    parameterization: Parameterization

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.t[0]), float(self.t[-1])

    def __call__(self, t):
        return evaluate(self.sx, t), evaluate(self.sy, t)

    def tangent(self, t):
        return evaluate_derivative(self.sx, t), evaluate_derivative(self.sy, t)


def parameterize(points: PlanarControlPoints, kind: Parameterization = "chord") -> np.ndarray:
    """Parameter grid for the points: ``0, 1, 2, ...`` or cumulative chord length."""
    if kind == "uniform":
        return np.arange(points.n, dtype=np.float64)
    if kind == "chord":
        steps = np.hypot(*np.diff(points.points, axis=0).T)
        if np.any(steps == 0.0):
            bad = int(np.flatnonzero(steps == 0.0)[0])
            raise DomainError(
                f"chord parameterization undefined: points {bad} and {bad + 1} coincide"
            )
        return np.concatenate([[0.0], np.cumsum(steps)])
    raise DomainError(f"unknown parameterization {kind!r}")


def build_parametric(
    points: PlanarControlPoints,
    placement: NodePlacement | None = None,
    kind: Parameterization = "chord",
) -> ParametricCurve:
    """Build the planar curve; both coordinates share grid and placement."""
    t = parameterize(points, kind)
    if placement is None:
        placement = NodePlacement.midpoint(points.n - 1)
    sx = build_spline(ControlPolygon(t, points.points[:, 0]), placement)
    sy = build_spline(ControlPolygon(t, points.points[:, 1]), placement)
    return ParametricCurve(t=_readonly(t), sx=sx, sy=sy, parameterization=kind)


def sample_parametric(curve: ParametricCurve, count: int) -> np.ndarray:
    """Sample ``(t, x, y)`` rows on a uniform parameter grid."""
    if count < 2:
        raise DomainError("sample count must be at least 2")
    a, b = curve.domain
    ts = np.linspace(a, b, count)
    return np.column_stack([ts, evaluate(curve.sx, ts), evaluate(curve.sy, ts)])


def compute_parametric_diagnostics(
    curve: ParametricCurve, sample_count: int = 1000
) -> Diagnostics:
    """Health report for a planar curve.

    The system matrix depends only on the shared grid, so the dominance
    margins are common to both coordinates; residuals take the worse of
    the two coordinates per node; the hull margin is measured in the
    plane.
    """
    from .core import _deriv_on_intervals, _eval_on_intervals

    gx = curve.sx.grids
    system = assemble_system(gx)
    margins = dominance_margins(system)[1:-1] if gx.n > 2 else np.empty(0)

    def c1_res(s: SplineCurve):
        lefts, rights = one_sided_derivatives(s)
        return np.abs(lefts - rights)

    def interp_res(s: SplineCurve):
        g = s.grids
        idx = np.arange(g.intervals)
        return (
            np.abs(_eval_on_intervals(s, g.nodes, idx) - g.chord_values),
            np.abs(_deriv_on_intervals(s, g.nodes, idx) - g.chord_slopes),
        )

    c1 = np.maximum(c1_res(curve.sx), c1_res(curve.sy))
    vx, sx_res = interp_res(curve.sx)
    vy, sy_res = interp_res(curve.sy)
    value_res = np.maximum(vx, vy)
    slope_res = np.maximum(sx_res, sy_res)

    samples = sample_parametric(curve, sample_count)[:, 1:]
    control = np.column_stack([gx.values, curve.sy.grids.values])
    return Diagnostics(
        dominance_margins=_readonly(margins),
        c1_residuals=_readonly(c1),
        interp_value_residuals=_readonly(value_res),
        interp_slope_residuals=_readonly(slope_res),
        hull_margin=float(signed_hull_margin(control, samples)),
    )
