"""Small planar geometry helpers shared across the package."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TAU = 2.0 * math.pi

LEN_TOL = 1e-9
ANG_TOL = 1e-9


def polygon_area(points) -> float:
    """Signed area (shoelace); positive for counterclockwise boundaries."""
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def points_in_polygon(points, polygon) -> np.ndarray:
    """Vectorized crossing test. Boundary points are not handled reliably;
    callers keep samples away from edges."""
    pts = np.asarray(points, dtype=float)
    poly = np.asarray(polygon, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    inside = np.zeros(len(pts), dtype=bool)
    x0, y0 = poly[-1]
    for x1, y1 in poly:
        crosses = (y0 > y) != (y1 > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
        inside ^= crosses & (x < np.where(crosses, xint, np.inf))
        x0, y0 = x1, y1
    return inside


def point_segment_distance(points, a, b) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    denom = float(d @ d)
    if denom < LEN_TOL**2:
        return np.hypot(*(pts - a).T)
    t = np.clip(((pts - a) @ d) / denom, 0.0, 1.0)
    proj = a + t[:, None] * d
    return np.hypot(pts[:, 0] - proj[:, 0], pts[:, 1] - proj[:, 1])


def polyline_is_simple(points, tol: float = LEN_TOL) -> bool:
    """True when the closed polygon through `points` has no self-intersection.

    Consecutive edges may share their common endpoint; any other contact
    (proper crossing, touching, overlap, repeated vertex) counts as
    non-simple. Fully vectorized: the batch pipelines run this on thousands
    of boundaries.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n < 3:
        return False
    diff = pts[:, None, :] - pts[None, :, :]
    d2 = diff[:, :, 0] ** 2 + diff[:, :, 1] ** 2
    np.fill_diagonal(d2, np.inf)
    if d2.min() <= tol * tol:
        return False

    a = pts
    d = np.roll(pts, -1, axis=0) - pts
    idx = np.arange(n)
    adjacent = (
        (idx[:, None] == idx[None, :])
        | ((idx[:, None] + 1) % n == idx[None, :])
        | ((idx[None, :] + 1) % n == idx[:, None])
    )

    denom = d[:, None, 0] * d[None, :, 1] - d[:, None, 1] * d[None, :, 0]
    r = a[None, :, :] - a[:, None, :]  # a_j - a_i
    cross_r_dj = r[:, :, 0] * d[None, :, 1] - r[:, :, 1] * d[None, :, 0]
    cross_r_di = r[:, :, 0] * d[:, None, 1] - r[:, :, 1] * d[:, None, 0]

    skew = np.abs(denom) > tol
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(skew, cross_r_dj / np.where(skew, denom, 1.0), np.nan)
        u = np.where(skew, cross_r_di / np.where(skew, denom, 1.0), np.nan)
    hits = skew & (t >= -tol) & (t <= 1 + tol) & (u >= -tol) & (u <= 1 + tol)
    if np.any(hits & ~adjacent):
        return False

    # Parallel pairs: overlap only if collinear and the projected spans meet.
    parallel = ~skew & (np.abs(cross_r_di) <= tol)
    if np.any(parallel & ~adjacent):
        len2 = (d[:, None, 0] ** 2 + d[:, None, 1] ** 2).repeat(n, axis=1)
        t3 = (r[:, :, 0] * d[:, None, 0] + r[:, :, 1] * d[:, None, 1]) / len2
        rb = r + d[None, :, :]
        t4 = (rb[:, :, 0] * d[:, None, 0] + rb[:, :, 1] * d[:, None, 1]) / len2
        lo = np.minimum(t3, t4)
        hi = np.maximum(t3, t4)
        overlap = (hi >= -tol) & (lo <= 1 + tol)
        if np.any(parallel & ~adjacent & overlap):
            return False
    return True


@dataclass(frozen=True)
class Isometry:
    """Planar isometry: reflect across the x-axis first (optional), then
    rotate by `angle`, then translate by (tx, ty)."""

    reflect: bool
    angle: float
    tx: float
    ty: float

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.angle), math.sin(self.angle)
        rot = np.array([[c, -s], [s, c]])
        if self.reflect:
            rot = rot @ np.array([[1.0, 0.0], [0.0, -1.0]])
        return rot

    def apply(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return pts @ self.matrix().T + np.array([self.tx, self.ty])

    def apply_one(self, point) -> tuple[float, float]:
        out = self.apply([point])[0]
        return float(out[0]), float(out[1])

    @staticmethod
    def identity() -> "Isometry":
        return Isometry(False, 0.0, 0.0, 0.0)

    @staticmethod
    def from_matrix(rot: np.ndarray, t) -> "Isometry":
        det = rot[0, 0] * rot[1, 1] - rot[0, 1] * rot[1, 0]
        reflect = det < 0
        lin = rot @ np.array([[1.0, 0.0], [0.0, -1.0]]) if reflect else rot
        angle = math.atan2(lin[1, 0], lin[0, 0])
        return Isometry(bool(reflect), angle, float(t[0]), float(t[1]))


def reflection_across(a, b) -> Isometry:
    """Isometry reflecting the plane across the line through a and b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    theta = math.atan2(d[1], d[0])
    c2, s2 = math.cos(2 * theta), math.sin(2 * theta)
    rot = np.array([[c2, s2], [s2, -c2]])
    t = a - rot @ a
    return Isometry.from_matrix(rot, t)


def align_segment(src_a, src_b, dst_a, dst_b, reflect: bool = False) -> Isometry:
    """Rigid motion sending segment (src_a, src_b) onto (dst_a, dst_b)."""
    src_a = np.asarray(src_a, dtype=float)
    src_b = np.asarray(src_b, dtype=float)
    dst_a = np.asarray(dst_a, dtype=float)
    dst_b = np.asarray(dst_b, dtype=float)
    ang_src = math.atan2(*(src_b - src_a)[::-1])
    ang_dst = math.atan2(*(dst_b - dst_a)[::-1])
    if reflect:
        mirror = np.array([[1.0, 0.0], [0.0, -1.0]])
        src_a2 = mirror @ src_a
        ang_src = math.atan2(-(src_b - src_a)[1], (src_b - src_a)[0])
    else:
        src_a2 = src_a
    angle = ang_dst - ang_src
    c, s = math.cos(angle), math.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    t = dst_a - rot @ src_a2
    return Isometry(reflect, angle, float(t[0]), float(t[1]))
