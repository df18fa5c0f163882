"""Deterministic SVG emission: net layouts and fold-certificate overlays.

Fixed scale of 100 px per unit edge; no timestamps or random ids, so output
bytes are stable across runs.
"""

from __future__ import annotations

import numpy as np

from .foldverify import FoldSpec
from .unfold import Net

SCALE = 100.0
MARGIN = 30.0


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def _viewport(points):
    pts = np.asarray(points, dtype=float)
    lo = pts.min(axis=0) * SCALE - MARGIN
    hi = pts.max(axis=0) * SCALE + MARGIN
    return lo, hi


def _path(points, transform):
    coords = [transform(p) for p in points]
    body = " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)
    return f"M {body} Z"


def net_svg(net: Net) -> str:
    """Face layout with the cut path endpoints marked."""
    all_pts = [p for face in net.face_coords for p in face]
    lo, hi = _viewport(all_pts)

    def tx(p):
        # Flip y so the net appears with the mathematical orientation.
        return (p[0] * SCALE - lo[0], hi[1] - p[1] * SCALE)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(hi[0] - lo[0])}" '
        f'height="{_fmt(hi[1] - lo[1])}" viewBox="0 0 {_fmt(hi[0] - lo[0])} {_fmt(hi[1] - lo[1])}">',
    ]
    for face in net.face_coords:
        parts.append(
            f'  <path d="{_path(face, tx)}" fill="#dfe8f5" stroke="#345" stroke-width="1.5"/>'
        )
    endpoints = {net.path[0], net.path[-1]}
    for bv in net.boundary:
        if bv.origin in endpoints:
            x, y = tx(bv.position)
            parts.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" fill="#c22"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def fold_svg(spec: FoldSpec) -> str:
    """Facet images overlaid on the target polygon."""
    imgs = [spec.isometries[i].apply(np.asarray(f)) for i, f in enumerate(spec.facets)]
    all_pts = list(spec.target) + [tuple(p) for img in imgs for p in img]
    lo, hi = _viewport(all_pts)

    def tx(p):
        return (p[0] * SCALE - lo[0], hi[1] - p[1] * SCALE)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(hi[0] - lo[0])}" '
        f'height="{_fmt(hi[1] - lo[1])}" viewBox="0 0 {_fmt(hi[0] - lo[0])} {_fmt(hi[1] - lo[1])}">',
        f'  <path d="{_path(spec.target, tx)}" fill="#fff" stroke="#000" stroke-width="2"/>',
    ]
    for img in imgs:
        parts.append(
            f'  <path d="{_path(img, tx)}" fill="#4a90d9" fill-opacity="0.25" '
            'stroke="#1b4f8a" stroke-width="0.8"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
