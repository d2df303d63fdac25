import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tangentspline import ControlPolygon, NodePlacement, build_spline, example_polygon

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def example1():
    return example_polygon(1)


@pytest.fixture(scope="session")
def example2():
    return example_polygon(2)


@pytest.fixture(scope="session")
def spline1(example1):
    return build_spline(example1)


@pytest.fixture(scope="session")
def spline2(example2):
    return build_spline(example2)


@pytest.fixture(scope="session")
def tent():
    return build_spline(ControlPolygon([0.0, 1.0, 2.0], [0.0, 1.0, 0.0]))


def random_case(rng, max_points=50):
    """One random admissible instance: uneven grid, wild ordinates, strict ratios."""
    n = int(rng.integers(2, max_points + 1))
    start = rng.uniform(-5.0, 5.0)
    tau = start + np.cumsum(np.concatenate([[0.0], rng.uniform(0.2, 2.0, n - 1)]))
    values = rng.uniform(-5.0, 10.0, n)
    alpha = rng.uniform(1.0 / 3.0, 2.0 / 3.0, n - 1)
    return ControlPolygon(tau, values), NodePlacement(alpha)


def scale_of(control: ControlPolygon) -> float:
    return control.scale
