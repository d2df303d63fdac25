"""Built-in demonstration datasets.

Dataset 1 is an 11-point polyline with sharp value swings (including a
tall spike) on [1, 11]; dataset 2 places 11 points on the half-circle
``y = sqrt(x - x**2)`` over [0, 1], with ordinates kept exactly as
their 10-significant-digit decimal literals.
"""

from __future__ import annotations

from .core import ControlPolygon

_DATASETS: dict[int, dict] = {
    1: {
        "name": "spiky polyline",
        "tau": [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0],
        "F": [1.0, 3.0, 3.0, 1.0, 2.0, 7.0, 1.5, 1.0, 10.0, 2.0, 1.5],
    },
    2: {
        "name": "half-circle",
        "tau": [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
        "F": [
            0.0,
            0.3,
            0.4,
            0.458257569,
            0.489897949,
            0.5,
            0.4898979495,
            0.458257569,
            0.4,
            0.3,
            0.0,
        ],
    },
}

EXAMPLE_IDS = tuple(sorted(_DATASETS))


def example_data(example_id: int) -> dict:
    """Raw ``{"name", "tau", "F"}`` dict for a built-in dataset."""
    if example_id not in _DATASETS:
        raise KeyError(f"no example {example_id}; available: {EXAMPLE_IDS}")
    d = _DATASETS[example_id]
    return {"name": d["name"], "tau": list(d["tau"]), "F": list(d["F"])}


def example_polygon(example_id: int) -> ControlPolygon:
    d = _DATASETS[example_id] if example_id in _DATASETS else None
    if d is None:
        raise KeyError(f"no example {example_id}; available: {EXAMPLE_IDS}")
    return ControlPolygon(d["tau"], d["F"])
