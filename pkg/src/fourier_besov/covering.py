"""Covering an ellipse (or a segment) by K equal balls: search and certification.

The search is a minimax Lloyd iteration on a sample cloud: each sample is
assigned to its nearest centre and every centre moves to the centre of the
smallest circle enclosing its cluster.  A final pass on a finer cloud
certifies the radius: every point of a convex region lies within
delta (sqrt(2) + 1) / 2 of the cloud (interior lattice of spacing delta plus
boundary points at arc spacing <= delta), so adding that margin to the
sampled covering radius gives a valid upper bound for the chosen centres.
"""
import math

import numpy as np
from scipy.spatial import ConvexHull, cKDTree


def _circle_two(a, b):
    cx, cy = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    return cx, cy, math.hypot(a[0] - cx, a[1] - cy)


def _circle_three(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-15:
        pairs = [(a, b), (a, c), (b, c)]
        u, v = max(pairs, key=lambda uv: math.hypot(uv[0][0] - uv[1][0], uv[0][1] - uv[1][1]))
        return _circle_two(u, v)
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return ux, uy, math.hypot(ax - ux, ay - uy)


def min_enclosing_circle(points, rng=None):
    """Smallest enclosing circle (Welzl, iterative form) of 2-D points.

    Returns (centre, radius).
    """
    pts = np.asarray(points, dtype=float)
    if len(pts) == 0:
        raise ValueError("no points")
    if len(pts) == 1:
        return pts[0].copy(), 0.0
    if len(pts) > 16:
        try:
            pts = pts[ConvexHull(pts).vertices]
        except Exception:  # collinear or degenerate clouds keep all points
            pass
    rng = np.random.default_rng(0) if rng is None else rng
    P = [tuple(q) for q in pts[rng.permutation(len(pts))].tolist()]
    eps = 1e-12

    def outside(q, c):
        return math.hypot(q[0] - c[0], q[1] - c[1]) > c[2] + eps

    c = (P[0][0], P[0][1], 0.0)
    for i in range(1, len(P)):
        if not outside(P[i], c):
            continue
        c = (P[i][0], P[i][1], 0.0)
        for j in range(i):
            if not outside(P[j], c):
                continue
            c = _circle_two(P[i], P[j])
            for k in range(j):
                if outside(P[k], c):
                    c = _circle_three(P[i], P[j], P[k])
    return np.array(c[:2]), c[2]


def ellipse_samples(a, b, delta):
    """Interior lattice points of spacing delta plus boundary points at arc spacing <= delta."""
    xs = np.arange(-a, a + delta, delta)
    ys = np.arange(-b, b + delta, delta)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    inside = (X / a) ** 2 + (Y / b) ** 2 <= 1
    interior = np.column_stack([X[inside], Y[inside]])
    # arc length between consecutive parameter values is at most max(a, b) * dt
    m = int(math.ceil(2 * math.pi * max(a, b) / delta)) + 1
    t = np.linspace(0, 2 * math.pi, m, endpoint=False)
    boundary = np.column_stack([a * np.cos(t), b * np.sin(t)])
    return np.vstack([interior, boundary])


def certification_margin(delta, dim=2):
    return delta * (math.sqrt(dim) + 1) / 2


def covering_radius(centers, samples):
    d, _ = cKDTree(centers).query(samples)
    return float(d.max())


def _farthest_point_init(samples, K, rng):
    idx = [int(rng.integers(len(samples)))]
    d = np.linalg.norm(samples - samples[idx[0]], axis=1)
    for _ in range(1, K):
        i = int(np.argmax(d))
        idx.append(i)
        d = np.minimum(d, np.linalg.norm(samples - samples[i], axis=1))
    return samples[idx].copy()


def minimax_lloyd(samples, centers, iters=200, rng=None):
    best_c, best_r = centers.copy(), covering_radius(centers, samples)
    c = centers.copy()
    for _ in range(iters):
        _, lab = cKDTree(c).query(samples)
        new = c.copy()
        for j in range(len(c)):
            cl = samples[lab == j]
            if len(cl):
                new[j] = min_enclosing_circle(cl, rng)[0]
        r = covering_radius(new, samples)
        if r < best_r - 1e-12:
            best_c, best_r = new.copy(), r
        elif np.allclose(new, c, atol=1e-12):
            break
        c = new
    return best_c, best_r


def search_ellipse_covering(a, b, K, seed=0, restarts=8, coarse=60, fine=600):
    """Certified covering radius of the ellipse with semi-axes a >= b by K balls.

    Returns (radius, centers).  ``coarse`` and ``fine`` are the numbers of
    sample spacings across the major semi-axis for search and certification.
    """
    rng = np.random.default_rng(seed)
    samples = ellipse_samples(a, b, a / coarse)
    best_c, best_r = None, math.inf
    for t in range(restarts):
        if t % 2 == 0:
            init = _farthest_point_init(samples, K, rng)
        else:
            init = samples[rng.choice(len(samples), size=K, replace=False)].copy()
        c, r = minimax_lloyd(samples, init, rng=rng)
        if r < best_r:
            best_c, best_r = c, r
    delta = a / fine
    cert = covering_radius(best_c, ellipse_samples(a, b, delta)) + certification_margin(delta)
    return cert, best_c


def _greedy_interval_centres(samples, eps):
    """Left-to-right greedy cover of sorted 1-D samples by intervals of radius eps
    (optimal for points on a line)."""
    centres = []
    i, n = 0, len(samples)
    while i < n:
        c = samples[i] + eps
        centres.append(c)
        i = int(np.searchsorted(samples, c + eps, side="right"))
    return np.array(centres)


def search_segment_covering(a, K, coarse=40000, fine=400000, iters=60):
    """Certified covering radius of [-a, a] by K intervals: bisection on the
    radius with the greedy cover as feasibility oracle."""
    samples = np.linspace(-a, a, 2 * coarse + 1)
    lo, hi = 0.0, a
    for _ in range(iters):
        mid = (lo + hi) / 2
        if len(_greedy_interval_centres(samples, mid)) <= K:
            hi = mid
        else:
            lo = mid
    centres = _greedy_interval_centres(samples, hi)
    delta = a / fine
    fine_s = np.linspace(-a, a, 2 * fine + 1)
    d, _ = cKDTree(centres[:, None]).query(fine_s[:, None])
    return float(d.max()) + delta / 2, centres
