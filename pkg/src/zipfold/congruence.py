"""Canonical forms for planar nets (up to isometry) and for cut paths in
3-space (up to the solid's symmetry group).

Two simple polygons are congruent exactly when their cyclic sequences of
(edge length, signed turning angle) agree up to rotation and reflection.
All lengths here are 1 and all angles come from small multiples of the face
angle, separated far above float noise, so quantizing to a 1e-6 grid makes
signature comparison exact.
"""

from __future__ import annotations

import math

import numpy as np

from .solids import automorphisms
from .unfold import Net, NonSimpleNetError

_QUANTUM = 1e-6


def _quantize(value: float) -> int:
    return int(round(value / _QUANTUM))


def _edges_and_turns(points: np.ndarray):
    n = len(points)
    lengths = []
    turns = []
    for i in range(n):
        a, b = points[i], points[(i + 1) % n]
        lengths.append(float(np.hypot(*(b - a))))
        p, q, r = points[i - 1], points[i], points[(i + 1) % n]
        d1, d2 = q - p, r - q
        turns.append(math.atan2(d1[0] * d2[1] - d1[1] * d2[0], float(d1 @ d2)))
    return lengths, turns


def _cyclic_min(seq: list[tuple[int, int]]) -> tuple:
    n = len(seq)
    return min(tuple(seq[(k + i) % n] for i in range(n)) for k in range(n))


def signature(net: Net) -> tuple:
    """Congruence-canonical form of the net's boundary polygon.

    The mirror image traversed counterclockwise pairs each edge with the
    turn at its tail instead of its head, so the reflected sequence is the
    reversed list of (edge i, turn at vertex i) pairs.
    """
    if not net.simple:
        raise NonSimpleNetError("signature requires a simple net")
    pts = net.boundary_points()
    lengths, turns = _edges_and_turns(pts)
    n = len(lengths)
    forward = [(_quantize(lengths[i]), _quantize(turns[(i + 1) % n])) for i in range(n)]
    mirrored = [(_quantize(lengths[i]), _quantize(turns[i])) for i in range(n)][::-1]
    return min(_cyclic_min(forward), _cyclic_min(mirrored))


def dedupe(nets) -> list[list[Net]]:
    """Partition nets into congruence classes, ordered by first occurrence."""
    classes: dict[tuple, list[Net]] = {}
    order = []
    for net in nets:
        sig = signature(net)
        if sig not in classes:
            classes[sig] = []
            order.append(sig)
        classes[sig].append(net)
    return [classes[sig] for sig in order]


def path_congruence_classes(solid: str, paths) -> list[list]:
    """Partition cut paths by congruence as polylines in 3-space.

    The solid's full symmetry group (rotations and reflections) acts on
    vertex indices; two paths are congruent exactly when some symmetry maps
    one vertex sequence onto the other or its reversal.
    """
    perms = automorphisms(solid)
    classes: dict[tuple, list] = {}
    order = []
    for cp in paths:
        vs = tuple(cp.vertices)
        rev = vs[::-1]
        canon = min(
            min(tuple(perm[v] for v in vs), tuple(perm[v] for v in rev)) for perm in perms
        )
        if canon not in classes:
            classes[canon] = []
            order.append(canon)
        classes[canon].append(cp)
    return [classes[c] for c in order]


def dedupe_report_dict(classes: list[list[Net]]) -> dict:
    return {
        "class_count": len(classes),
        "classes": [
            {
                "representative": {"solid": cls[0].solid, "path": list(cls[0].path)},
                "size": len(cls),
            }
            for cls in classes
        ],
    }
