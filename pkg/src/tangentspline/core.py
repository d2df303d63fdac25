"""Scalar C1 cubic spline curves tangent to their control polygon.

Given control points ``(tau[i], values[i])`` the construction places one
extra interpolation node inside every interval and pins the curve to the
control polygon there: the curve takes the chord's value and the chord's
slope at that node, so every polygon segment is tangent to the curve.
The curve's values at the knots ``tau[i]`` are then the unique solution
of a tridiagonal linear system expressing continuity of the first
derivative across the knots.  For node placement ratios ``alpha`` in
``[1/3, 2/3]`` the system is diagonally dominant, which guarantees that
the curve exists, is unique, and is computed by pivot-free elimination.

Indexing is 0-based throughout: interval ``j`` spans
``[tau[j], tau[j+1]]`` and owns the interior node ``nodes[j]``; knot
``k`` (``0 < k < n-1``) joins intervals ``k-1`` and ``k``.  The node
ratio is measured from the right end of the interval:
``nodes[j] = tau[j+1] - alpha[j] * h[j]``.

All operations are pure; every returned object holds read-only arrays
and is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

ALPHA_MIN = 1.0 / 3.0
ALPHA_MAX = 2.0 / 3.0


class DomainError(ValueError):
    """Input violates a structural requirement (ordering, arity, finiteness)."""


class StrictAlphaError(DomainError):
    """A node ratio falls outside [1/3, 2/3] while strict mode is on."""

    def __init__(self, interval: int, value: float):
        self.interval = interval
        self.value = value
        super().__init__(f"alpha[{interval}]={value:g} outside [1/3, 2/3]")


class SingularSystemError(ArithmeticError):
    """Elimination hit a zero pivot; reachable only with strict mode off."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"zero pivot at row {row}: system is singular")


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.float64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class ControlPolygon:
    """Control points: strictly increasing abscissae ``tau`` and ordinates ``values``."""

    tau: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        tau = _readonly(np.atleast_1d(self.tau))
        values = _readonly(np.atleast_1d(self.values))
        if tau.ndim != 1 or values.ndim != 1:
            raise DomainError("tau and values must be one-dimensional")
        if tau.shape != values.shape:
            raise DomainError(
                f"tau and values lengths differ: {tau.size} vs {values.size}"
            )
        if tau.size < 2:
            raise DomainError("need at least 2 control points")
        if not (np.all(np.isfinite(tau)) and np.all(np.isfinite(values))):
            raise DomainError("control points must be finite")
        if not np.all(np.diff(tau) > 0.0):
            bad = int(np.flatnonzero(np.diff(tau) <= 0.0)[0])
            raise DomainError(
                f"tau must be strictly increasing (tau[{bad + 1}] <= tau[{bad}])"
            )
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.tau.size

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.tau[0]), float(self.tau[-1])

    @property
    def scale(self) -> float:
        """Reference magnitude for relative tolerances."""
        return max(
            1.0,
            float(np.max(np.abs(self.values))),
            float(self.tau[-1] - self.tau[0]),
        )


@dataclass(frozen=True)
class NodePlacement:
    """Per-interval node ratios; ``strict`` keeps them in the guaranteed range.

    ``alpha[j]`` locates the interior node of interval ``j`` at
    ``tau[j+1] - alpha[j] * h[j]``.  With ``strict`` on (the default)
    ratios must lie in [1/3, 2/3], the range for which solvability is
    guaranteed; turning it off admits any ratio in (0, 1) with no such
    guarantee.
    """

    alpha: np.ndarray
    strict: bool = True

    def __post_init__(self):
        alpha = _readonly(np.atleast_1d(self.alpha))
        if alpha.ndim != 1:
            raise DomainError("alpha must be one-dimensional")
        if not np.all(np.isfinite(alpha)):
            raise DomainError("alpha must be finite")
        if np.any((alpha <= 0.0) | (alpha >= 1.0)):
            bad = int(np.flatnonzero((alpha <= 0.0) | (alpha >= 1.0))[0])
            raise DomainError(f"alpha[{bad}]={alpha[bad]:g} outside (0, 1)")
        if self.strict:
            off = (alpha < ALPHA_MIN) | (alpha > ALPHA_MAX)
            if np.any(off):
                bad = int(np.flatnonzero(off)[0])
                raise StrictAlphaError(bad, float(alpha[bad]))
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def constant(cls, alpha: float, intervals: int, strict: bool = True) -> "NodePlacement":
        return cls(np.full(intervals, float(alpha)), strict=strict)

    @classmethod
    def midpoint(cls, intervals: int) -> "NodePlacement":
        return cls.constant(0.5, intervals)


@dataclass(frozen=True)
class SplineGrids:
    """Derived per-interval quantities: node positions and chord data.

    ``nodes[j]`` is the interior interpolation node of interval ``j``;
    ``chord_values[j]`` / ``chord_slopes[j]`` are the value and slope of
    the control-polygon segment at that node; ``mu[j]`` is the offset
    ``tau[j+1] - nodes[j]``.
    """

    tau: np.ndarray
    values: np.ndarray
    nodes: np.ndarray
    h: np.ndarray
    mu: np.ndarray
    chord_values: np.ndarray
    chord_slopes: np.ndarray
    strict: bool = True

    @property
    def n(self) -> int:
        return self.tau.size

    @property
    def intervals(self) -> int:
        return self.tau.size - 1


@dataclass(frozen=True)
class TridiagonalSystem:
    """Rows of the knot-value system; rows 0 and n-1 pin the endpoints."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    @property
    def size(self) -> int:
        return self.diag.size


@dataclass(frozen=True)
class SplineCurve:
    """A solved curve: knot values plus one cubic per interval.

    ``knot_values[k]`` is the curve's value at ``tau[k]``;
    ``leading_coeffs[j]`` is the coefficient of the cubic term on
    interval ``j`` (zero iff that piece is a parabola or flatter).
    """

    grids: SplineGrids
    knot_values: np.ndarray
    leading_coeffs: np.ndarray

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.grids.tau[0]), float(self.grids.tau[-1])

    def __call__(self, x):
        return evaluate(self, x)

    def derivative(self, x):
        return evaluate_derivative(self, x)

    def diagnostics(self, sample_count: int = 1000) -> "Diagnostics":
        return compute_diagnostics(self, sample_count)


@dataclass(frozen=True)
class Diagnostics:
    """Numerical health report for a solved curve.

    ``dominance_margins`` covers interior system rows only (boundary
    rows are trivially dominant); residual arrays are indexed like the
    quantities they check; ``hull_margin`` is the minimal signed
    distance of the sampled curve to the control-point hull boundary
    (positive = inside).
    """

    dominance_margins: np.ndarray
    c1_residuals: np.ndarray
    interp_value_residuals: np.ndarray
    interp_slope_residuals: np.ndarray
    hull_margin: float

    def max_c1_residual(self) -> float:
        return float(np.max(self.c1_residuals)) if self.c1_residuals.size else 0.0


class InteriorCoefficients(NamedTuple):
    """Named coefficients of interior row ``k`` (one entry per interior knot).

    The row reads ``a*phi[k-1] - (b1+b2)*phi[k] + c*phi[k+1] = rhs``;
    ``a``/``b1`` derive from the interval left of the knot, ``b2``/``c``
    from the interval to its right.
    """

    a: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    c: np.ndarray
    rhs: np.ndarray


def build_grids(control: ControlPolygon, placement: NodePlacement) -> SplineGrids:
    """Derive interval widths, interior nodes, and chord data.

    The node of interval ``j`` sits at ``tau[j+1] - alpha[j] * h[j]``;
    the chord value/slope there come from the control-polygon segment
    spanning the interval.
    """
    tau, values = control.tau, control.values
    if placement.alpha.size != control.n - 1:
        raise DomainError(
            f"alpha has {placement.alpha.size} entries, expected {control.n - 1}"
        )
    h = np.diff(tau)
    nodes = tau[1:] - placement.alpha * h
    # Recompute offsets from the stored nodes so evaluation at a node is
    # bitwise exact; extreme ratios could still collapse a node onto a knot.
    mu = tau[1:] - nodes
    if not np.all((tau[:-1] < nodes) & (nodes < tau[1:])):
        bad = int(np.flatnonzero(~((tau[:-1] < nodes) & (nodes < tau[1:])))[0])
        raise DomainError(f"node of interval {bad} degenerates onto a knot")
    chord_slopes = np.diff(values) / h
    chord_values = values[:-1] + chord_slopes * (nodes - tau[:-1])
    return SplineGrids(
        tau=tau,
        values=values,
        nodes=_readonly(nodes),
        h=_readonly(h),
        mu=_readonly(mu),
        chord_values=_readonly(chord_values),
        chord_slopes=_readonly(chord_slopes),
        strict=placement.strict,
    )


def interior_coefficients(grids: SplineGrids) -> InteriorCoefficients:
    """Coefficients of the derivative-continuity equation at each interior knot.

    Equating the one-sided first derivatives at knot ``k`` (after
    eliminating the per-interval cubic coefficients via the chord-slope
    conditions) yields ``a*phi[k-1] - (b1+b2)*phi[k] + c*phi[k+1] = rhs``
    with all four coefficients positive.
    """
    h, mu, tau = grids.h, grids.mu, grids.tau
    w = grids.nodes - tau[:-1]  # left part of each interval, h - mu
    f, values = grids.chord_values, grids.values

    hL, muL, wL, fL = h[:-1], mu[:-1], w[:-1], f[:-1]
    hR, muR, wR, fR = h[1:], mu[1:], w[1:], f[1:]

    a = muL**2 / (wL**2 * hL)
    b1 = (2.0 * hL + muL) / (muL * hL)
    b2 = (3.0 * hR - muR) / (wR * hR)
    c = wR**2 / (hR * muR**2)
    rhs = (
        -fL * hL * (2.0 * hL - 3.0 * muL) / (wL**2 * muL)
        - (values[1:-1] - values[:-2]) / wL
        + fR * hR * (hR - 3.0 * muR) / (wR * muR**2)
        + (values[2:] - values[1:-1]) / muR
    )
    return InteriorCoefficients(a=a, b1=b1, b2=b2, c=c, rhs=rhs)


def assemble_system(grids: SplineGrids) -> TridiagonalSystem:
    """Assemble the tridiagonal system for the knot values.

    Interior rows carry the derivative-continuity equations; the first
    and last rows pin the curve to the first and last control points.
    With fewer than three knots only the boundary rows exist.
    """
    n = grids.n
    sub = np.zeros(n)
    diag = np.ones(n)
    sup = np.zeros(n)
    rhs = np.zeros(n)
    rhs[0] = grids.values[0]
    rhs[-1] = grids.values[-1]
    if n > 2:
        co = interior_coefficients(grids)
        sub[1:-1] = co.a
        diag[1:-1] = -(co.b1 + co.b2)
        sup[1:-1] = co.c
        rhs[1:-1] = co.rhs
    return TridiagonalSystem(
        sub=_readonly(sub), diag=_readonly(diag), sup=_readonly(sup), rhs=_readonly(rhs)
    )


def dominance_margins(system: TridiagonalSystem) -> np.ndarray:
    """Per-row diagonal-dominance margins ``|diag| - |sub| - |sup|``.

    Pure report; callers decide what to do with non-positive margins.
    """
    return np.abs(system.diag) - np.abs(system.sub) - np.abs(system.sup)


def solve_tridiagonal(system: TridiagonalSystem) -> np.ndarray:
    """Solve the system by elimination without pivoting.

    Positive dominance margins make this stable; outside that regime a
    zero pivot raises :class:`SingularSystemError` naming the row.
    """
    n = system.size
    sub = system.sub.tolist()
    diag = system.diag.tolist()
    sup = system.sup.tolist()
    rhs = system.rhs.tolist()

    cp = [0.0] * n
    x = [0.0] * n
    piv = diag[0]
    if piv == 0.0:
        raise SingularSystemError(0)
    cp[0] = sup[0] / piv
    x[0] = rhs[0] / piv
    for k in range(1, n):
        piv = diag[k] - sub[k] * cp[k - 1]
        if piv == 0.0:
            raise SingularSystemError(k)
        cp[k] = sup[k] / piv
        x[k] = (rhs[k] - sub[k] * x[k - 1]) / piv
    for k in range(n - 2, -1, -1):
        x[k] -= cp[k] * x[k + 1]
    return np.asarray(x)


def leading_coefficients(grids: SplineGrids, knot_values: np.ndarray) -> np.ndarray:
    """Cubic-term coefficient of every interval, from the chord-slope condition."""
    knot_values = np.asarray(knot_values, dtype=np.float64)
    if knot_values.size != grids.n:
        raise DomainError(
            f"knot_values has {knot_values.size} entries, expected {grids.n}"
        )
    h, mu = grids.h, grids.mu
    w = grids.nodes - grids.tau[:-1]
    f, s = grids.chord_values, grids.chord_slopes
    return (
        -knot_values[:-1] / (w**2 * h)
        + knot_values[1:] / (h * mu**2)
        - f * (h - 2.0 * mu) / (w**2 * mu**2)
        - s / (mu * w)
    )


def build_spline(
    control: ControlPolygon, placement: NodePlacement | None = None
) -> SplineCurve:
    """Build the curve for the given control points and node placement.

    Defaults to midpoint placement.  In strict mode the assembled system
    is required to have strictly positive interior dominance margins
    before solving.
    """
    if placement is None:
        placement = NodePlacement.midpoint(control.n - 1)
    grids = build_grids(control, placement)
    system = assemble_system(grids)
    if placement.strict and grids.n > 2:
        margins = dominance_margins(system)[1:-1]
        if np.any(margins <= 0.0):
            bad = int(np.flatnonzero(margins <= 0.0)[0]) + 1
            raise DomainError(
                f"dominance margin not positive at row {bad}; "
                "solvability is not guaranteed for this placement"
            )
    phi = solve_tridiagonal(system)
    q = leading_coefficients(grids, phi)
    return SplineCurve(
        grids=grids, knot_values=_readonly(phi), leading_coeffs=_readonly(q)
    )


def _locate(curve: SplineCurve, xs: np.ndarray) -> np.ndarray:
    # Ties at interior knots resolve to the right interval; x == b to the last.
    idx = np.searchsorted(curve.grids.tau, xs, side="right") - 1
    return np.clip(idx, 0, curve.grids.intervals - 1)

def _check_domain(curve: SplineCurve, xs: np.ndarray) -> None:
    a, b = curve.domain
    if not np.all(np.isfinite(xs)):
        raise DomainError("evaluation points must be finite")
    if np.any((xs < a) | (xs > b)):
        bad = float(xs[np.flatnonzero((xs < a) | (xs > b))[0]])
        raise DomainError(f"x={bad:g} outside domain [{a:g}, {b:g}]")


def _pieces(curve: SplineCurve, xs: np.ndarray, idx: np.ndarray):
    g = curve.grids
    tL = g.tau[idx]
    tR = g.tau[idx + 1]
    xn = g.nodes[idx]
    h = g.h[idx]
    m = g.mu[idx]
    w = xn - tL
    da = xs - xn
    db = xs - tR
    dc = xs - tL
    return tL, tR, xn, h, m, w, da, db, dc


def _eval_on_intervals(curve: SplineCurve, xs: np.ndarray, idx: np.ndarray) -> np.ndarray:
    g = curve.grids
    _, _, _, h, m, w, da, db, dc = _pieces(curve, xs, idx)
    pL = curve.knot_values[idx]
    pR = curve.knot_values[idx + 1]
    f = g.chord_values[idx]
    q = curve.leading_coeffs[idx]
    # Each Lagrange-style term is coeff * (numerator / denominator) so that
    # at a node the ratio is exactly +-1 and the node value is returned bitwise.
    n3 = db * dc
    y = pL * ((da * db) / (w * h))
    y += pR * ((da * dc) / (m * h))
    y -= f * (n3 / (m * w))
    y += q * (n3 * da)
    return y


def _deriv_on_intervals(curve: SplineCurve, xs: np.ndarray, idx: np.ndarray) -> np.ndarray:
    g = curve.grids
    _, _, _, h, m, w, da, db, dc = _pieces(curve, xs, idx)
    pL = curve.knot_values[idx]
    pR = curve.knot_values[idx + 1]
    f = g.chord_values[idx]
    q = curve.leading_coeffs[idx]
    y = pL * ((da + db) / (w * h))
    y += pR * ((da + dc) / (m * h))
    y -= f * ((db + dc) / (m * w))
    y += q * (da * (db + dc) + db * dc)
    return y


def evaluate(curve: SplineCurve, x) -> float | np.ndarray:
    """Evaluate the curve at ``x`` (scalar or array) inside its domain.

    Outside the domain this raises :class:`DomainError`; there is no
    extrapolation.
    """
    xs = np.asarray(x, dtype=np.float64)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    _check_domain(curve, xs)
    y = _eval_on_intervals(curve, xs, _locate(curve, xs))
    return float(y[0]) if scalar else y


def evaluate_derivative(curve: SplineCurve, x) -> float | np.ndarray:
    """First derivative at ``x``; at interior knots the two one-sided limits agree."""
    xs = np.asarray(x, dtype=np.float64)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    _check_domain(curve, xs)
    y = _deriv_on_intervals(curve, xs, _locate(curve, xs))
    return float(y[0]) if scalar else y


def one_sided_derivatives(curve: SplineCurve) -> tuple[np.ndarray, np.ndarray]:
    """Left and right derivative limits at every interior knot."""
    n = curve.grids.n
    if n < 3:
        empty = np.empty(0)
        return empty, empty
    knots = curve.grids.tau[1:-1]
    left = _deriv_on_intervals(curve, knots, np.arange(0, n - 2))
    right = _deriv_on_intervals(curve, knots, np.arange(1, n - 1))
    return left, right


def interval_coefficients(curve: SplineCurve, j: int) -> np.ndarray:
    """Power-basis coefficients ``[c0, c1, c2, c3]`` of interval ``j``.

    The piece evaluates as ``c0 + c1*t + c2*t**2 + c3*t**3`` with
    ``t = x - tau[j]``.
    """
    g = curve.grids
    if not 0 <= j < g.intervals:
        raise DomainError(f"interval index {j} outside 0..{g.intervals - 1}")
    h = float(g.h[j])
    m = float(g.mu[j])
    w = float(g.nodes[j] - g.tau[j])
    f = float(g.chord_values[j])
    pL = float(curve.knot_values[j])
    pR = float(curve.knot_values[j + 1])
    q = float(curve.leading_coeffs[j])
    c3 = q
    c2 = pL / (w * h) + pR / (m * h) - f / (m * w) - q * (h + w)
    c1 = -pL * (w + h) / (w * h) - pR * w / (m * h) + f * h / (m * w) + q * h * w
    c0 = pL
    return np.array([c0, c1, c2, c3])


def sample_curve(
    curve: SplineCurve, count: int, include_nodes: bool = False
) -> np.ndarray:
    """Sample the curve on a uniform grid; returns an ``(m, 2)`` array.

    With ``include_nodes`` the knots and interior nodes are merged into
    the abscissa grid (sorted, duplicates removed).
    """
    if count < 2:
        raise DomainError("sample count must be at least 2")
    a, b = curve.domain
    xs = np.linspace(a, b, count)
    if include_nodes:
        xs = np.unique(np.concatenate([xs, curve.grids.tau, curve.grids.nodes]))
    ys = evaluate(curve, xs)
    return np.column_stack([xs, ys])


def compute_diagnostics(curve: SplineCurve, sample_count: int = 1000) -> Diagnostics:
    """Recompute the numerical health report for a solved curve."""
    from .hull import signed_hull_margin

    g = curve.grids
    system = assemble_system(g)
    margins = dominance_margins(system)[1:-1] if g.n > 2 else np.empty(0)
    left, right = one_sided_derivatives(curve)
    node_idx = np.arange(g.intervals)
    value_res = np.abs(
        _eval_on_intervals(curve, g.nodes, node_idx) - g.chord_values
    )
    slope_res = np.abs(
        _deriv_on_intervals(curve, g.nodes, node_idx) - g.chord_slopes
    )
    samples = sample_curve(curve, sample_count)
    control_pts = np.column_stack([g.tau, g.values])
    return Diagnostics(
        dominance_margins=_readonly(margins),
        c1_residuals=_readonly(np.abs(left - right)),
        interp_value_residuals=_readonly(value_res),
        interp_slope_residuals=_readonly(slope_res),
        hull_margin=float(signed_hull_margin(control_pts, samples)),
    )
