"""Convex-hull containment margins for sampled curves.

The hull is built over the control points only; the margin of a sample
point is its signed distance to the hull boundary (positive inside,
negative outside).  Control sets that are collinear to within
``1e-12 * scale`` degrade to distance-from-segment.
"""

from __future__ import annotations

import numpy as np

COLLINEAR_TOL = 1e-12


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Hull vertices in counter-clockwise order (monotone chain).

    Collinear boundary points are dropped.  Returns the input points
    (lexicographically sorted, deduplicated) when fewer than three hull
    vertices exist.
    """
    pts = np.unique(np.asarray(points, dtype=np.float64), axis=0)
    if pts.shape[0] < 3:
        return pts

    def half(chain_pts):
        chain: list[np.ndarray] = []
        for p in chain_pts:
            while len(chain) >= 2:
                o, a = chain[-2], chain[-1]
                if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) > 0.0:
                    break
                chain.pop()
            chain.append(p)
        return chain[:-1]

    lower = half(pts)
    upper = half(pts[::-1])
    hull = np.array(lower + upper)
    return hull if hull.shape[0] >= 3 else pts[[0, -1]]


def _segment_distances(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return np.hypot(*(p - a).T)
    t = np.clip((p - a) @ ab / denom, 0.0, 1.0)
    foot = a + np.outer(t, ab)
    return np.hypot(p[:, 0] - foot[:, 0], p[:, 1] - foot[:, 1])


def signed_hull_margin(points: np.ndarray, samples: np.ndarray) -> float:
    """Minimal signed distance of ``samples`` to the hull of ``points``.

    Positive means every sample lies inside; the most-violating sample
    sets the (negative) margin otherwise.
    """
    points = np.asarray(points, dtype=np.float64)
    samples = np.atleast_2d(np.asarray(samples, dtype=np.float64))
    scale = max(1.0, float(np.max(np.abs(points))))
    hull = convex_hull(points)

    if hull.shape[0] < 3 or _hull_area(hull) <= COLLINEAR_TOL * scale * scale:
        lo = points[np.lexsort((points[:, 1], points[:, 0]))][0]
        hi = points[np.lexsort((points[:, 1], points[:, 0]))][-1]
        return -float(np.max(_segment_distances(samples, lo, hi)))

    # Outward edge normals of the CCW hull; the margin of a point is the
    # (negated) worst half-plane violation, which equals the distance to
    # the boundary for interior points.
    edges = np.roll(hull, -1, axis=0) - hull
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    normals = np.column_stack([edges[:, 1], -edges[:, 0]]) / lengths[:, None]

    margin = np.inf
    step = 4096
    for start in range(0, samples.shape[0], step):
        chunk = samples[start : start + step]
        # (m, e): how far each sample sits beyond each edge's half-plane
        g = np.einsum("mej,ej->me", chunk[:, None, :] - hull[None, :, :], normals)
        margin = min(margin, float(np.min(-np.max(g, axis=1))))
    return margin


def _hull_area(hull: np.ndarray) -> float:
    x, y = hull[:, 0], hull[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))
