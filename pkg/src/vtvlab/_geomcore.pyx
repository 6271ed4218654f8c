# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled geometry kernels (hot path for tract-variable extraction)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def min_dist_to_polyline(points, verts):
    """Exact minimum distance from each query point to a polyline.

    points : (N, 2) float64
    verts  : (M, 2) float64, M >= 2, consecutive vertices form the segments
    returns (N,) float64 distances
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] p = np.ascontiguousarray(points, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef Py_ssize_t n = p.shape[0]
    cdef Py_ssize_t m = v.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)

    cdef Py_ssize_t i, j
    cdef double px, py, ax, ay, bx, by, dx, dy, seg2, t, qx, qy, d2, best
    with nogil:
        for i in range(n):
            px = p[i, 0]
            py = p[i, 1]
            best = 1e300
            for j in range(m - 1):
                ax = v[j, 0]
                ay = v[j, 1]
                bx = v[j + 1, 0]
                by = v[j + 1, 1]
                dx = bx - ax
                dy = by - ay
                seg2 = dx * dx + dy * dy
                if seg2 > 0.0:
                    t = ((px - ax) * dx + (py - ay) * dy) / seg2
                    if t < 0.0:
                        t = 0.0
                    elif t > 1.0:
                        t = 1.0
                else:
                    t = 0.0
                qx = ax + t * dx - px
                qy = ay + t * dy - py
                d2 = qx * qx + qy * qy
                if d2 < best:
                    best = d2
            out[i] = sqrt(best)
    return out
