"""Numeric kernels for the metric computations.

Two implementations of each kernel: a numba ``@njit`` version and a pure
numpy version.  ``GRAPHTRIALS_NO_NUMBA=1`` forces the numpy path; otherwise
numba is used when importable.  Both are exported for benchmarking.
"""

from __future__ import annotations

import math
import os

import numpy as np

EPS = 1e-12


# --- pure numpy / python implementations -----------------------------------


def crossing_scan_numpy(pts: np.ndarray, edges: np.ndarray):
    """All properly crossing edge pairs.

    Returns (i_idx, j_idx, angles_deg, degenerate_count); shared-endpoint
    pairs are skipped, near-zero orientations treated as non-crossing, and
    collinear overlapping pairs counted as degenerate.
    """
    m = len(edges)
    ii, jj, angs = [], [], []
    degenerate = 0
    for i in range(m):
        a, b = edges[i]
        ax, ay = pts[a]
        bx, by = pts[b]
        for j in range(i + 1, m):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                continue
            cx, cy = pts[c]
            dx, dy = pts[d]
            o1 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            o2 = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
            o3 = (dx - cx) * (ay - cy) - (dy - cy) * (ax - cx)
            o4 = (dx - cx) * (by - cy) - (dy - cy) * (bx - cx)
            if abs(o1) < EPS and abs(o2) < EPS:
                # collinear; overlapping ranges are a degenerate drawing
                lo1, hi1 = min(ax, bx), max(ax, bx)
                lo2, hi2 = min(cx, dx), max(cx, dx)
                lo1y, hi1y = min(ay, by), max(ay, by)
                lo2y, hi2y = min(cy, dy), max(cy, dy)
                if hi1 - lo2 > EPS and hi2 - lo1 > EPS:
                    degenerate += 1
                elif hi1y - lo2y > EPS and hi2y - lo1y > EPS:
                    degenerate += 1
                continue
            if o1 * o2 < -EPS and o3 * o4 < -EPS:
                ux, uy = bx - ax, by - ay
                vx, vy = dx - cx, dy - cy
                dot = abs(ux * vx + uy * vy)
                nu = math.hypot(ux, uy)
                nv = math.hypot(vx, vy)
                cosang = min(1.0, dot / (nu * nv))
                angs.append(math.degrees(math.acos(cosang)))
                ii.append(i)
                jj.append(j)
    return (
        np.asarray(ii, dtype=np.int64),
        np.asarray(jj, dtype=np.int64),
        np.asarray(angs, dtype=np.float64),
        degenerate,
    )


def stress_terms_numpy(pts: np.ndarray, dist: np.ndarray):
    """Accumulate (A, B, C) with A = sum e^2/d^2, B = sum e/d, C = pair count
    over vertex pairs with finite graph distance d > 0 (dist <= 0 skipped)."""
    n = len(pts)
    iu = np.triu_indices(n, k=1)
    d = dist[iu]
    mask = d > 0
    d = d[mask]
    diff = pts[iu[0][mask]] - pts[iu[1][mask]]
    e = np.hypot(diff[:, 0], diff[:, 1])
    A = float(np.sum((e / d) ** 2))
    B = float(np.sum(e / d))
    C = float(len(d))
    return A, B, C


def pair_extremes_numpy(pts: np.ndarray):
    """(min, max) pairwise Euclidean distance."""
    n = len(pts)
    iu = np.triu_indices(n, k=1)
    diff = pts[iu[0]] - pts[iu[1]]
    d = np.hypot(diff[:, 0], diff[:, 1])
    return float(d.min()), float(d.max())


# --- numba implementations ---------------------------------------------------

try:  # pragma: no cover - import guard
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _crossing_scan_jit(pts, edges):  # pragma: no cover - compiled
        m = len(edges)
        cap = m * (m - 1) // 2
        ii = np.empty(cap, dtype=np.int64)
        jj = np.empty(cap, dtype=np.int64)
        angs = np.empty(cap, dtype=np.float64)
        cnt = 0
        degenerate = 0
        for i in range(m):
            a, b = edges[i, 0], edges[i, 1]
            ax, ay = pts[a, 0], pts[a, 1]
            bx, by = pts[b, 0], pts[b, 1]
            for j in range(i + 1, m):
                c, d = edges[j, 0], edges[j, 1]
                if a == c or a == d or b == c or b == d:
                    continue
                cx, cy = pts[c, 0], pts[c, 1]
                dx, dy = pts[d, 0], pts[d, 1]
                o1 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
                o2 = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
                o3 = (dx - cx) * (ay - cy) - (dy - cy) * (ax - cx)
                o4 = (dx - cx) * (by - cy) - (dy - cy) * (bx - cx)
                if abs(o1) < EPS and abs(o2) < EPS:
                    lo1, hi1 = min(ax, bx), max(ax, bx)
                    lo2, hi2 = min(cx, dx), max(cx, dx)
                    lo1y, hi1y = min(ay, by), max(ay, by)
                    lo2y, hi2y = min(cy, dy), max(cy, dy)
                    if hi1 - lo2 > EPS and hi2 - lo1 > EPS:
                        degenerate += 1
                    elif hi1y - lo2y > EPS and hi2y - lo1y > EPS:
                        degenerate += 1
                    continue
                if o1 * o2 < -EPS and o3 * o4 < -EPS:
                    ux, uy = bx - ax, by - ay
                    vx, vy = dx - cx, dy - cy
                    dot = abs(ux * vx + uy * vy)
                    nu = math.hypot(ux, uy)
                    nv = math.hypot(vx, vy)
                    cosang = dot / (nu * nv)
                    if cosang > 1.0:
                        cosang = 1.0
                    angs[cnt] = math.degrees(math.acos(cosang))
                    ii[cnt] = i
                    jj[cnt] = j
                    cnt += 1
        return ii[:cnt], jj[:cnt], angs[:cnt], degenerate

    def crossing_scan_numba(pts, edges):
        if len(edges) == 0:
            return (
                np.empty(0, dtype=np.int64),
                np.empty(0, dtype=np.int64),
                np.empty(0, dtype=np.float64),
                0,
            )
        return _crossing_scan_jit(
            np.ascontiguousarray(pts, dtype=np.float64),
            np.ascontiguousarray(edges, dtype=np.int64),
        )

    @numba.njit(cache=True)
    def _stress_terms_jit(pts, dist):  # pragma: no cover - compiled
        n = len(pts)
        A = 0.0
        B = 0.0
        C = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                d = dist[i, j]
                if d <= 0:
                    continue
                e = math.hypot(pts[i, 0] - pts[j, 0], pts[i, 1] - pts[j, 1])
                A += (e / d) ** 2
                B += e / d
                C += 1.0
        return A, B, C

    def stress_terms_numba(pts, dist):
        return _stress_terms_jit(
            np.ascontiguousarray(pts, dtype=np.float64),
            np.ascontiguousarray(dist, dtype=np.float64),
        )

    @numba.njit(cache=True)
    def _pair_extremes_jit(pts):  # pragma: no cover - compiled
        n = len(pts)
        lo = math.inf
        hi = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                d = math.hypot(pts[i, 0] - pts[j, 0], pts[i, 1] - pts[j, 1])
                if d < lo:
                    lo = d
                if d > hi:
                    hi = d
        return lo, hi

    def pair_extremes_numba(pts):
        return _pair_extremes_jit(np.ascontiguousarray(pts, dtype=np.float64))

else:  # pragma: no cover
    crossing_scan_numba = None
    stress_terms_numba = None
    pair_extremes_numba = None


USE_NUMBA = HAVE_NUMBA and os.environ.get("GRAPHTRIALS_NO_NUMBA", "") != "1"

if USE_NUMBA:
    crossing_scan = crossing_scan_numba
    stress_terms = stress_terms_numba
    pair_extremes = pair_extremes_numba
else:
    crossing_scan = crossing_scan_numpy
    stress_terms = stress_terms_numpy
    pair_extremes = pair_extremes_numpy
