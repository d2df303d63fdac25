import numpy as np
import pytest
from numpy.testing import assert_allclose

from tangentspline import (
    ControlPolygon,
    DomainError,
    NodePlacement,
    StrictAlphaError,
    build_grids,
)
from conftest import random_case


def test_straight_line_single_interval():
    g = build_grids(ControlPolygon([0.0, 1.0], [0.0, 1.0]), NodePlacement([0.5]))
    assert_allclose(g.nodes, [0.5])
    assert_allclose(g.h, [1.0])
    assert_allclose(g.mu, [0.5])
    assert_allclose(g.chord_values, [0.5])
    assert_allclose(g.chord_slopes, [1.0])


def test_hand_substitution_three_points():
    # first three control points of the spiky dataset, midpoint nodes
    g = build_grids(ControlPolygon([1.0, 2.0, 3.0], [1.0, 3.0, 3.0]), NodePlacement([0.5, 0.5]))
    assert_allclose(g.nodes, [1.5, 2.5])
    assert_allclose(g.chord_values, [2.0, 3.0])
    assert_allclose(g.chord_slopes, [2.0, 0.0])


def test_third_ratio_offsets_from_right():
    # alpha measures the node's offset from the interval's right end
    g = build_grids(ControlPolygon([0.0, 3.0], [0.0, 6.0]), NodePlacement([1.0 / 3.0]))
    assert_allclose(g.mu, [1.0])
    assert_allclose(g.nodes, [2.0])
    assert_allclose(g.chord_values, [4.0])
    assert_allclose(g.chord_slopes, [2.0])


def test_nodes_strictly_inside_intervals():
    rng = np.random.default_rng(7)
    for _ in range(50):
        control, placement = random_case(rng)
        g = build_grids(control, placement)
        assert np.all(g.tau[:-1] < g.nodes)
        assert np.all(g.nodes < g.tau[1:])


def test_chord_value_lies_on_segment():
    rng = np.random.default_rng(8)
    for _ in range(50):
        control, placement = random_case(rng)
        g = build_grids(control, placement)
        expected = np.interp(g.nodes, control.tau, control.values)
        assert_allclose(g.chord_values, expected, atol=1e-12 * control.scale)


def test_non_increasing_tau_rejected():
    with pytest.raises(DomainError, match="strictly increasing"):
        ControlPolygon([0.0, 1.0, 1.0], [0.0, 1.0, 2.0])


def test_alpha_outside_unit_interval_rejected():
    with pytest.raises(DomainError, match="outside \\(0, 1\\)"):
        NodePlacement([0.5, 1.2], strict=False)
    with pytest.raises(DomainError):
        NodePlacement([0.0], strict=False)


def test_strict_alpha_names_offending_interval():
    with pytest.raises(StrictAlphaError, match=r"alpha\[3\]=0.8 outside \[1/3, 2/3\]"):
        NodePlacement([0.5, 0.5, 0.5, 0.8, 0.5])
    # boundary values are allowed
    NodePlacement([1.0 / 3.0, 2.0 / 3.0])


def test_non_strict_allows_wide_ratios():
    p = NodePlacement([0.1, 0.9], strict=False)
    assert not p.strict


def test_alpha_arity_checked():
    with pytest.raises(DomainError, match="expected 2"):
        build_grids(ControlPolygon([0.0, 1.0, 2.0], [0.0, 1.0, 0.0]), NodePlacement([0.5]))


def test_too_few_points_rejected():
    with pytest.raises(DomainError, match="at least 2"):
        ControlPolygon([0.0], [1.0])


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        ControlPolygon([0.0, np.nan], [0.0, 1.0])
    with pytest.raises(DomainError):
        ControlPolygon([0.0, 1.0], [0.0, np.inf])
    with pytest.raises(DomainError):
        NodePlacement([np.nan], strict=False)


def test_grids_are_deterministic_and_readonly():
    control = ControlPolygon([0.0, 1.0, 2.5], [1.0, -2.0, 4.0])
    placement = NodePlacement([0.4, 0.6])
    a = build_grids(control, placement)
    b = build_grids(control, placement)
    assert_allclose(a.nodes, b.nodes, rtol=0)
    assert_allclose(a.chord_values, b.chord_values, rtol=0)
    with pytest.raises(ValueError):
        a.nodes[0] = 99.0
