"""Pure-numpy geometry kernels.

Fallback implementation used when the compiled extension is unavailable.
Function signatures and numerical behaviour match ``vtvlab._geomcore``.
"""

import numpy as np

_CHUNK = 16384


def min_dist_to_polyline(points, verts):
    """Exact minimum distance from each query point to a polyline.

    points : (N, 2) float64
    verts  : (M, 2) float64, M >= 2, consecutive vertices form the segments
    returns (N,) float64 distances
    """
    points = np.ascontiguousarray(points, dtype=np.float64)
    verts = np.ascontiguousarray(verts, dtype=np.float64)
    ax = verts[:-1, 0][None, :]
    ay = verts[:-1, 1][None, :]
    dx = verts[1:, 0][None, :] - ax
    dy = verts[1:, 1][None, :] - ay
    seg_len2 = dx * dx + dy * dy
    # Zero-length segments degrade to their endpoint.
    safe_len2 = np.where(seg_len2 > 0.0, seg_len2, 1.0)

    out = np.empty(points.shape[0], dtype=np.float64)
    for lo in range(0, points.shape[0], _CHUNK):
        hi = min(lo + _CHUNK, points.shape[0])
        px = points[lo:hi, 0][:, None]
        py = points[lo:hi, 1][:, None]
        t = ((px - ax) * dx + (py - ay) * dy) / safe_len2
        np.clip(t, 0.0, 1.0, out=t)
        qx = ax + t * dx - px
        qy = ay + t * dy - py
        d2 = qx * qx + qy * qy
        out[lo:hi] = np.sqrt(d2.min(axis=1))
    return out
