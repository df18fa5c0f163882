"""Develop a solid cut along a Hamiltonian path into a planar net.

Placement roots the dual spanning tree at face 0 with that face's first edge
on the positive x-axis, so outputs are deterministic and comparable. The
boundary walk starts at the corner developed from the cut path's first
vertex, which makes that corner's arc position 0.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .geometry import ANG_TOL, polygon_area, polyline_is_simple
from .hampath import CutPath
from .solids import Polyhedron, build_solid


@dataclass(frozen=True)
class BoundaryVertex:
    """One corner of the net boundary."""

    position: tuple  # (x, y)
    angle: float  # interior angle, radians
    angle_multiple: int  # interior angle as a count of face angles
    arc: float  # position along the perimeter, normalized to [0, 1)
    origin: int  # polyhedron vertex this corner developed from
    reflex: bool  # angle > pi


@dataclass(frozen=True)
class Net:
    """Planar development of a solid cut along a Hamiltonian path."""

    solid: str
    path: tuple
    face_coords: tuple  # per face: tuple of (x, y) matching the face cycle
    boundary: tuple  # of BoundaryVertex, counterclockwise, arc-ordered
    perimeter: float
    simple: bool

    @property
    def cut_path(self) -> CutPath:
        return CutPath(self.solid, self.path)

    @property
    def polyhedron(self) -> Polyhedron:
        return build_solid(self.solid)

    def boundary_points(self) -> np.ndarray:
        return np.array([bv.position for bv in self.boundary])

    def is_convex(self) -> bool:
        """No reflex corner (interior angle of exactly pi still counts as
        convex)."""
        return not any(bv.reflex for bv in self.boundary)

    def area(self) -> float:
        return abs(polygon_area(self.boundary_points()))


class NonSimpleNetError(ValueError):
    """Raised by operations whose contract requires a simple net."""


def _face_frame(verts3, face):
    """Develop one face in its own plane, counterclockwise from outside."""
    pts = verts3[list(face)]
    origin = pts[0]
    e1 = pts[1] - origin
    e1 /= np.linalg.norm(e1)
    normal = np.zeros(3)
    for k in range(len(face)):
        normal += np.cross(pts[k], pts[(k + 1) % len(face)])
    normal /= np.linalg.norm(normal)
    e2 = np.cross(normal, e1)
    rel = pts - origin
    return np.stack([rel @ e1, rel @ e2], axis=1)


def unfold(p: Polyhedron, c: CutPath) -> Net:
    """Develop p into the plane, cutting exactly along c's edges."""
    if c.solid != p.name:
        raise ValueError(f"cut path is for {c.solid}, not {p.name}")
    verts3 = np.array(p.vertices)
    cut_edges = set(c.edges)

    # Dual adjacency across uncut edges.
    dart_face = {}
    for fi, face in enumerate(p.faces):
        for k in range(len(face)):
            dart_face[(face[k], face[(k + 1) % len(face)])] = fi

    locals_2d = [_face_frame(verts3, f) for f in p.faces]
    placed: dict[int, np.ndarray] = {}
    placed[0] = locals_2d[0].copy()
    queue = deque([0])
    tree_edges = 0
    while queue:
        fi = queue.popleft()
        face = p.faces[fi]
        for k in range(len(face)):
            a, b = face[k], face[(k + 1) % len(face)]
            if tuple(sorted((a, b))) in cut_edges:
                continue
            gi = dart_face[(b, a)]
            if gi in placed:
                continue
            gface = p.faces[gi]
            ia, ib = gface.index(a), gface.index(b)
            loc = locals_2d[gi]
            # Rotation + translation sending g's local copy of edge (a, b)
            # onto the placed copy; both developments are ccw so the faces
            # land on opposite sides automatically.
            src = loc[ib] - loc[ia]
            dst = placed[fi][(k + 1) % len(face)] - placed[fi][k]
            ang = math.atan2(dst[1], dst[0]) - math.atan2(src[1], src[0])
            rot = np.array([[math.cos(ang), -math.sin(ang)], [math.sin(ang), math.cos(ang)]])
            img = loc @ rot.T
            img += placed[fi][k] - img[ia]
            placed[gi] = img
            tree_edges += 1
            queue.append(gi)
    if len(placed) != p.face_count or tree_edges != p.face_count - 1:
        raise ValueError("uncut edges do not span the face-adjacency graph")

    boundary = _walk_boundary(p, c, placed, dart_face)
    points = [bv.position for bv in boundary]
    simple = polyline_is_simple(points)
    perimeter = float(2 * (p.vertex_count - 1))
    net = Net(
        solid=p.name,
        path=tuple(c.vertices),
        face_coords=tuple(tuple(map(tuple, placed[fi])) for fi in range(p.face_count)),
        boundary=tuple(boundary),
        perimeter=perimeter,
        simple=simple,
    )
    _check_net(net, p)
    return net


def _walk_boundary(p, c, placed, dart_face):
    cut_edges = set(c.edges)
    faces = p.faces

    def next_in_face(fi, k):
        return fi, (k + 1) % len(faces[fi])

    def dart(fi, k):
        face = faces[fi]
        return face[k], face[(k + 1) % len(face)]

    p0, p1 = c.vertices[0], c.vertices[1]
    start_f = dart_face[(p0, p1)]
    start = (start_f, faces[start_f].index(p0))

    corners = []
    fi, k = start
    while True:
        u, v = dart(fi, k)
        assert tuple(sorted((u, v))) in cut_edges
        # Rotate around v across uncut edges, collecting its corner fan.
        fan = 1
        fj, kj = next_in_face(fi, k)
        while True:
            a, b = dart(fj, kj)
            if tuple(sorted((a, b))) in cut_edges:
                break
            # Cross the uncut edge to its twin dart (b -> a), then advance to
            # the neighbor face's dart leaving a again.
            gj = dart_face[(b, a)]
            kj = p.faces[gj].index(a)
            fj = gj
            fan += 1
        pos = placed[fi][(k + 1) % len(faces[fi])]
        corners.append((v, fan, (float(pos[0]), float(pos[1]))))
        fi, k = fj, kj
        if (fi, k) == start:
            break

    # Rotate so the corner developed from the path's first vertex is first.
    origins = [c0 for c0, _, _ in corners]
    first = origins.index(c.vertices[0])
    corners = corners[first:] + corners[:first]

    n_edges = 2 * (p.vertex_count - 1)
    if len(corners) != n_edges:
        raise AssertionError("boundary walk did not close after one circuit")
    perimeter = float(n_edges)
    out = []
    for i, (origin, fan, pos) in enumerate(corners):
        angle = fan * p.face_angle
        out.append(
            BoundaryVertex(
                position=pos,
                angle=angle,
                angle_multiple=fan,
                arc=i / n_edges,
                origin=origin,
                reflex=angle > math.pi + ANG_TOL,
            )
        )
    # The walk emits the corner at each dart's head, so the list is offset by
    # one edge from the arc origin; positions already match because we
    # re-anchored on the first path vertex's unique corner.
    _ = perimeter
    return out


def _check_net(net: Net, p: Polyhedron):
    pts = net.boundary_points()
    n = len(pts)
    seg = np.roll(pts, -1, axis=0) - pts
    lengths = np.hypot(seg[:, 0], seg[:, 1])
    if np.abs(lengths - 1.0).max() > 1e-6:
        raise AssertionError("boundary edge is not unit length")
    angle_sum = sum(bv.angle for bv in net.boundary)
    if abs(angle_sum - (n - 2) * math.pi) > 1e-6:
        raise AssertionError("boundary angle sum != (n-2)*pi")
    # Each polyhedron vertex's boundary occurrences reassemble its full angle.
    per_origin: dict[int, float] = {}
    for bv in net.boundary:
        per_origin[bv.origin] = per_origin.get(bv.origin, 0.0) + bv.angle
    for v, total in per_origin.items():
        if abs(total - p.vertex_angle(v)) > 1e-6:
            raise AssertionError(f"vertex {v} angle does not reassemble")


def boundary_angle_profile(net: Net) -> list[tuple[float, int]]:
    """(interior angle, origin vertex) in boundary order. Simple nets only."""
    if not net.simple:
        raise NonSimpleNetError("net boundary self-intersects")
    return [(bv.angle, bv.origin) for bv in net.boundary]


def net_to_json_dict(net: Net) -> dict:
    return {
        "provenance": {"solid": net.solid, "path": list(net.path)},
        "faces": [[list(pt) for pt in face] for face in net.face_coords],
        "boundary": [
            {
                "x": bv.position[0],
                "y": bv.position[1],
                "angle": bv.angle,
                "arc": bv.arc,
                "origin": bv.origin,
            }
            for bv in net.boundary
        ],
        "perimeter": net.perimeter,
        "simple": net.simple,
    }


def net_from_provenance(solid: str, path) -> Net:
    p = build_solid(solid)
    return unfold(p, CutPath(solid, tuple(path)))
