"""Planar geometry for constriction measurement.

The point-to-polyline kernel is the hot loop of tract-variable extraction;
a compiled extension is preferred and a numpy implementation with identical
semantics is selected at import time when the extension is missing.
"""

import numpy as np

from . import _geompy
from .errors import InvalidTraceError

try:
    from . import _geomcore as _kernel

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _kernel = _geompy
    BACKEND = "python"

ARC_SAMPLES = 512
_COLLINEAR_RTOL = 1e-9


def backend_name():
    return BACKEND


def min_dist_to_polyline(points, verts, backend=None):
    """Minimum distance from each of ``points`` to the polyline ``verts``."""
    verts = np.asarray(verts, dtype=np.float64)
    if verts.ndim != 2 or verts.shape[0] < 2 or verts.shape[1] != 2:
        raise InvalidTraceError("polyline needs at least two 2-D vertices")
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if backend == "python":
        return _geompy.min_dist_to_polyline(points, verts)
    if backend == "cython" and BACKEND != "cython":
        raise RuntimeError("compiled geometry kernel not available")
    return _kernel.min_dist_to_polyline(points, verts)


def circumcircle(p1, p2, p3):
    """Center and radius of the circle through three points.

    Returns None when the points are collinear (relative to their spread).
    """
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    p3 = np.asarray(p3, dtype=np.float64)
    a = p2 - p1
    b = p3 - p1
    cross = a[0] * b[1] - a[1] * b[0]
    scale = max(np.hypot(*a), np.hypot(*b))
    if scale == 0.0 or abs(cross) <= _COLLINEAR_RTOL * scale * scale:
        return None
    a2 = a @ a
    b2 = b @ b
    ux = (b[1] * a2 - a[1] * b2) / (2.0 * cross)
    uy = (a[0] * b2 - b[0] * a2) / (2.0 * cross)
    center = p1 + np.array([ux, uy])
    radius = np.hypot(ux, uy)
    return center, radius


def sample_polyline(verts, n):
    """n points uniformly spaced by cumulative arc length along a polyline."""
    verts = np.asarray(verts, dtype=np.float64)
    seg = np.diff(verts, axis=0)
    seg_len = np.hypot(seg[:, 0], seg[:, 1])
    total = seg_len.sum()
    if total == 0.0:
        return np.repeat(verts[:1], n, axis=0)
    cum = np.concatenate([[0.0], np.cumsum(seg_len)])
    s = np.linspace(0.0, total, n)
    x = np.interp(s, cum, verts[:, 0])
    y = np.interp(s, cum, verts[:, 1])
    return np.column_stack([x, y])


def arc_angles(p1, p2, p3, center):
    """Start angle and signed sweep of the circular arc p1 -> p3 through p2."""
    t1 = np.arctan2(p1[1] - center[1], p1[0] - center[0])
    t2 = np.arctan2(p2[1] - center[1], p2[0] - center[0])
    t3 = np.arctan2(p3[1] - center[1], p3[0] - center[0])
    two_pi = 2.0 * np.pi
    d13 = (t3 - t1) % two_pi
    d12 = (t2 - t1) % two_pi
    sweep = d13 if d12 <= d13 else d13 - two_pi
    return t1, sweep


def sample_arc(center, radius, start, sweep, n):
    theta = start + sweep * np.linspace(0.0, 1.0, n)
    return np.column_stack(
        [center[0] + radius * np.cos(theta), center[1] + radius * np.sin(theta)]
    )


def sample_tongue_body_curve(p2, p3, p4, n=ARC_SAMPLES):
    """Sample the curve joining three tongue pellets.

    Circumcircle arc through the pellets; collinear pellets fall back to the
    two-segment polyline. Returns (samples, arc_info) where arc_info is
    (center, radius, start, sweep) or None for the polyline fallback.
    """
    circ = circumcircle(p2, p3, p4)
    if circ is None:
        pts = np.array([p2, p3, p4], dtype=np.float64)
        return sample_polyline(pts, n), None
    center, radius = circ
    start, sweep = arc_angles(np.asarray(p2, float), np.asarray(p3, float), np.asarray(p4, float), center)
    return sample_arc(center, radius, start, sweep, n), (center, radius, start, sweep)
