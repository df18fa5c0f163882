"""Trace a zipping's seam across a doubly covered polygon.

A geodesic on the double of a convex polygon K develops as a billiard
trajectory inside K (crossing the rim = specular reflection = switching
layers). The seam of a perimeter-halving fold is a path of geodesic
segments whose lengths are the arc gaps between glue events and whose turn
at each event is fixed by the event's two side angles; cone events must
land exactly on corners of K. That leaves one free parameter, the launch
angle at the starting anchor; the fold exists iff some launch angle makes
the seam close up on the far anchor's corner. Root-finding that angle both
decides flat-foldability onto K and recovers the exact seed placement for
the folding construction.
"""

from __future__ import annotations

import math

import numpy as np


def rot(u, a):
    c, s = math.cos(a), math.sin(a)
    return np.array([c * u[0] - s * u[1], s * u[0] + c * u[1]])


def _reflect_dir(u, d):
    d = d / np.hypot(*d)
    return 2.0 * float(u @ d) * d - u


class Billiard:
    def __init__(self, target):
        self.P = np.asarray(target, dtype=float)
        self.n = len(self.P)
        self.sides = [(self.P[k], self.P[(k + 1) % self.n]) for k in range(self.n)]

    def corner_angle(self, k):
        c = self.P[k]
        u = self.P[k - 1] - c
        w = self.P[(k + 1) % self.n] - c
        return math.acos(np.clip((u @ w) / (np.hypot(*u) * np.hypot(*w)), -1, 1))

    def _inside_dir(self, p, u, eps=1e-9):
        q = p + u * eps
        inside = True
        for a, b in self.sides:
            d = b - a
            if (d[0] * (q[1] - a[1]) - d[1] * (q[0] - a[0])) < -1e-12:
                inside = False
                break
        return inside

    def _push_inside(self, p, u):
        """Reflect u across violated sides until it points into K from p.
        Returns (u, parity_flips)."""
        flips = 0
        for _ in range(8):
            if self._inside_dir(p, u):
                return u, flips
            for a, b in self.sides:
                d = b - a
                q = p + u * 1e-9
                if (d[0] * (q[1] - a[1]) - d[1] * (q[0] - a[0])) < -1e-12:
                    # Only reflect across sides the point actually lies on.
                    t = float((p - a) @ d) / float(d @ d)
                    foot = a + np.clip(t, 0, 1) * d
                    if np.hypot(*(p - foot)) < 1e-7:
                        u = _reflect_dir(u, d)
                        flips += 1
                        break
            else:
                return u, flips
        return u, flips

    def march(self, p, u, ell, tol=1e-12):
        """Advance a geodesic by arc length ell. Returns (p, u, flips).
        A rim hit within 1e-9 of the arrival point counts as arrival, not a
        reflection: stations often sit exactly on the rim."""
        flips = 0
        for _ in range(10000):
            if ell <= tol:
                return p, u, flips
            best_t = None
            best_side = None
            for k, (a, b) in enumerate(self.sides):
                d = b - a
                denom = u[0] * d[1] - u[1] * d[0]
                if abs(denom) < 1e-14:
                    continue
                w = a - p
                t = (w[0] * d[1] - w[1] * d[0]) / denom
                s = (w[0] * u[1] - w[1] * u[0]) / denom
                if t > 1e-9 and -1e-9 <= s <= 1 + 1e-9:
                    if best_t is None or t < best_t:
                        best_t = t
                        best_side = k
            if best_t is None or best_t >= ell - 1e-9:
                return p + ell * u, u, flips
            p = p + best_t * u
            a, b = self.sides[best_side]
            u = _reflect_dir(u, b - a)
            flips += 1
            ell -= best_t
        raise RuntimeError("billiard march did not terminate")


def seam_stations(net, anchor):
    """(gap lengths, station data) along the seam from anchor to co-anchor.

    Station data is (angle on the +s side, angle on the -s side, cone flag)
    at each glue event strictly between the anchors; collinear-against-
    collinear points are smooth and carry no station.
    """
    x = anchor % 1.0
    corners = net.boundary
    n = len(corners)
    perim = net.perimeter

    def angle_at(arc):
        for bv in corners:
            d = abs((bv.arc - arc) % 1.0)
            if d <= 1e-9 or d >= 1.0 - 1e-9:
                return bv.angle
        return math.pi

    ts = set()
    for bv in corners:
        for t in ((bv.arc - x) % 1.0, (x - bv.arc) % 1.0):
            if 1e-9 < t < 0.5 - 1e-9:
                ts.add(round(t, 12))
    stations = []
    for t in sorted(ts):
        a_plus = angle_at((x + t) % 1.0)
        a_minus = angle_at((x - t) % 1.0)
        if abs(a_plus - math.pi) < 1e-9 and abs(a_minus - math.pi) < 1e-9:
            continue
        stations.append((t, a_plus, a_minus, a_plus + a_minus < 2 * math.pi - 1e-9))
    gaps = []
    prev = 0.0
    for t, *_ in stations:
        gaps.append((t - prev) * perim)
        prev = t
    gaps.append((0.5 - prev) * perim)
    return gaps, stations


def trace(net, anchor, target, start_corner, phi, left_plus=True, start_parity=1):
    """Shoot the seam from target corner `start_corner` at launch angle phi
    (measured from the corner's outgoing side). Returns (end point, end
    direction, log of station positions)."""
    bil = Billiard(target)
    gaps, stations = seam_stations(net, anchor)
    c0 = bil.P[start_corner]
    side_dir = bil.P[(start_corner + 1) % bil.n] - c0
    side_dir = side_dir / np.hypot(*side_dir)
    u = rot(side_dir, phi)
    p = c0.copy()
    parity = start_parity
    u, flips = bil._push_inside(p, u)
    parity *= (-1) ** flips
    log = []
    for gap, st in zip(gaps, stations + [None]):
        p, u, flips = bil.march(p, u, gap)
        parity *= (-1) ** flips
        if st is None:
            break
        _, a_plus, a_minus, cone = st
        a_left = a_plus if left_plus else a_minus
        u = rot(-u, parity * a_left)
        u, flips = bil._push_inside(p, u)
        parity *= (-1) ** flips
        log.append((p.copy(), cone))
    return p, u, log


def closure_residual(net, anchor, target, start_corner, phi, left_plus=True, start_parity=1):
    """Distance from the seam's end to the nearest corner matching the far
    anchor's cone angle, plus any mid-seam cone event missing its corner."""
    bil = Billiard(target)
    gaps, stations = seam_stations(net, anchor)
    x = anchor % 1.0
    corners = net.boundary

    def angle_at(arc):
        for bv in corners:
            d = abs((bv.arc - arc) % 1.0)
            if d <= 1e-9 or d >= 1.0 - 1e-9:
                return bv.angle
        return math.pi

    end_angle = angle_at((x + 0.5) % 1.0)
    end_corners = [
        bil.P[k] for k in range(bil.n) if abs(2 * bil.corner_angle(k) - end_angle) < 1e-6
    ]
    if not end_corners:
        return math.inf
    p, u, log = trace(net, anchor, target, start_corner, phi, left_plus, start_parity)
    res = min(float(np.hypot(*(p - c))) for c in end_corners)
    for q, cone in log:
        if cone:
            d = min(float(np.hypot(*(q - c))) for c in bil.P)
            res = max(res, d)
    return res


def first_constraint_residual(net, anchor, target, start_corner, phi, left_plus=True, start_parity=1):
    """Distance of the first cone station (or, failing that, the seam end)
    from its required corner: a smooth 1-D objective for the launch scan."""
    bil = Billiard(target)
    gaps, stations = seam_stations(net, anchor)
    c0 = bil.P[start_corner]
    side_dir = bil.P[(start_corner + 1) % bil.n] - c0
    side_dir = side_dir / np.hypot(*side_dir)
    u = rot(side_dir, phi)
    p = c0.copy()
    parity = start_parity
    u, flips = bil._push_inside(p, u)
    parity *= (-1) ** flips
    for gap, st in zip(gaps, stations + [None]):
        p, u, flips = bil.march(p, u, gap)
        parity *= (-1) ** flips
        if st is None or st[3]:
            return min(float(np.hypot(*(p - c))) for c in bil.P)
        _, a_plus, a_minus, _ = st
        a_left = a_plus if left_plus else a_minus
        u = rot(-u, parity * a_left)
        u, flips = bil._push_inside(p, u)
        parity *= (-1) ** flips
    return min(float(np.hypot(*(p - c))) for c in bil.P)


def solve_launch(net, anchor, target, left_plus=True, samples=2400):
    """Find (start_corner, phi, start_parity, residual) closing the seam, or
    None. Launch angles 0 and theta (seam along the rim) are common and are
    scanned inclusively."""
    bil = Billiard(target)
    x = anchor % 1.0
    corners = net.boundary

    def angle_at(arc):
        for bv in corners:
            d = abs((bv.arc - arc) % 1.0)
            if d <= 1e-9 or d >= 1.0 - 1e-9:
                return bv.angle
        return math.pi

    start_angle = angle_at(x)
    best = None
    for k in range(bil.n):
        if abs(2 * bil.corner_angle(k) - start_angle) > 1e-6:
            continue
        theta = bil.corner_angle(k)
        for parity in (1, -1):
            phis = np.linspace(0.0, theta, samples)
            res = np.array(
                [
                    first_constraint_residual(net, anchor, target, k, phi, left_plus, parity)
                    for phi in phis
                ]
            )
            is_min = np.ones(len(phis), dtype=bool)
            is_min[1:] &= res[1:] <= res[:-1]
            is_min[:-1] &= res[:-1] <= res[1:]
            for i in np.nonzero(is_min & (res < 0.2))[0]:
                lo = phis[max(i - 1, 0)]
                hi = phis[min(i + 1, len(phis) - 1)]
                for _ in range(90):
                    m1 = lo + (hi - lo) / 3
                    m2 = hi - (hi - lo) / 3
                    r1 = first_constraint_residual(net, anchor, target, k, m1, left_plus, parity)
                    r2 = first_constraint_residual(net, anchor, target, k, m2, left_plus, parity)
                    if r1 < r2:
                        hi = m2
                    else:
                        lo = m1
                phi = (lo + hi) / 2
                if first_constraint_residual(net, anchor, target, k, phi, left_plus, parity) > 1e-8:
                    continue
                r = closure_residual(net, anchor, target, k, phi, left_plus, parity)
                if r < 1e-7 and (best is None or r < best[3]):
                    best = (k, phi, parity, r)
    return best
