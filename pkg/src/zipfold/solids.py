"""Geometric and combinatorial models of the five Platonic solids.

Vertices come from closed-form constructions (golden-ratio coordinates for
the icosahedron and dodecahedron) rescaled so every edge has length exactly
1. Faces are traced from the rotation system induced by the embedding, so
their vertex cycles are counterclockwise as seen from outside.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .geometry import ANG_TOL, LEN_TOL

SOLID_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

_PHI = (1.0 + math.sqrt(5.0)) / 2.0

_EXPECTED = {
    # name: (V, E, F, face size)
    "tetrahedron": (4, 6, 4, 3),
    "cube": (8, 12, 6, 4),
    "octahedron": (6, 12, 8, 3),
    "dodecahedron": (20, 30, 12, 5),
    "icosahedron": (12, 30, 20, 3),
}


def _raw_coordinates(name: str) -> list[tuple[float, float, float]]:
    if name == "tetrahedron":
        return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    if name == "cube":
        return [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    if name == "octahedron":
        pts = []
        for axis in range(3):
            for sign in (-1, 1):
                p = [0.0, 0.0, 0.0]
                p[axis] = sign
                pts.append(tuple(p))
        return pts
    if name == "icosahedron":
        pts = []
        for a in (-1.0, 1.0):
            for b in (-_PHI, _PHI):
                pts.extend([(0.0, a, b), (a, b, 0.0), (b, 0.0, a)])
        return pts
    if name == "dodecahedron":
        pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        inv = 1.0 / _PHI
        for a in (-inv, inv):
            for b in (-_PHI, _PHI):
                pts.extend([(0.0, a, b), (a, b, 0.0), (b, 0.0, a)])
        return pts
    raise ValueError(f"unknown solid name: {name!r}")


@dataclass(frozen=True)
class Polyhedron:
    """Immutable model of one Platonic solid with unit edge length."""

    name: str
    vertices: tuple  # of (x, y, z)
    faces: tuple  # of vertex-index cycles, ccw from outside
    edges: tuple  # of (i, j) with i < j
    face_angle: float  # interior angle of the regular face polygon
    neighbors: tuple = field(repr=False)  # ccw cyclic neighbor order per vertex

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def vertex_angle(self, v: int) -> float:
        """Total face angle incident to vertex v."""
        return len(self.neighbors[v]) * self.face_angle

    def adjacency(self) -> dict:
        return {v: tuple(ns) for v, ns in enumerate(self.neighbors)}


def _neighbor_cycles(verts: np.ndarray, adjacency: list[list[int]]) -> list[list[int]]:
    """Order each vertex's neighbors counterclockwise as seen from outside."""
    cycles = []
    for v, nbrs in enumerate(adjacency):
        r = verts[v] / np.linalg.norm(verts[v])
        # Any basis of the plane perpendicular to the radial direction.
        seed = np.array([1.0, 0.0, 0.0])
        if abs(r @ seed) > 0.9:
            seed = np.array([0.0, 1.0, 0.0])
        e1 = seed - (seed @ r) * r
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(r, e1)
        angles = []
        for u in nbrs:
            d = verts[u] - verts[v]
            angles.append(math.atan2(d @ e2, d @ e1))
        order = [u for _, u in sorted(zip(angles, nbrs))]
        cycles.append(order)
    return cycles


def _trace_faces(adjacency, cycles) -> list[tuple[int, ...]]:
    """Faces as orbits of darts under the rotation system."""
    pos = [{u: k for k, u in enumerate(c)} for c in cycles]
    seen = set()
    faces = []
    for a in range(len(adjacency)):
        for b in adjacency[a]:
            if (a, b) in seen:
                continue
            face = []
            u, v = a, b
            while (u, v) not in seen:
                seen.add((u, v))
                face.append(u)
                cyc = cycles[v]
                k = pos[v][u]
                u, v = v, cyc[(k - 1) % len(cyc)]
            faces.append(tuple(face))
    return faces


def _canonical_faces(faces) -> tuple:
    out = []
    for f in faces:
        k = f.index(min(f))
        out.append(tuple(f[k:] + f[:k]))
    return tuple(sorted(out))


def _validate(name, verts, faces, edges, face_angle):
    v_n, e_n, f_n, size = _EXPECTED[name]
    if not (len(verts) == v_n and len(edges) == e_n and len(faces) == f_n):
        raise AssertionError(f"{name}: combinatorics mismatch")
    if len(verts) - len(edges) + len(faces) != 2:
        raise AssertionError(f"{name}: Euler formula violated")
    for i, j in edges:
        if abs(np.linalg.norm(verts[i] - verts[j]) - 1.0) > LEN_TOL:
            raise AssertionError(f"{name}: edge ({i},{j}) is not unit length")
    dart_count = {}
    for f in faces:
        if len(f) != size:
            raise AssertionError(f"{name}: face of wrong size {len(f)}")
        pts = verts[list(f)]
        centroid = pts.mean(axis=0)
        normal = np.zeros(3)
        for k in range(len(f)):
            normal += np.cross(pts[k], pts[(k + 1) % len(f)])
        if normal @ centroid <= 0:
            raise AssertionError(f"{name}: face {f} has inward orientation")
        normal /= np.linalg.norm(normal)
        if np.abs((pts - centroid) @ normal).max() > LEN_TOL:
            raise AssertionError(f"{name}: face {f} is not planar")
        for k in range(len(f)):
            a, b, c = pts[k - 1], pts[k], pts[(k + 1) % len(f)]
            u, w = a - b, c - b
            ang = math.acos(np.clip((u @ w) / (np.linalg.norm(u) * np.linalg.norm(w)), -1, 1))
            if abs(ang - face_angle) > ANG_TOL:
                raise AssertionError(f"{name}: face corner angle {ang} != {face_angle}")
            dart = (f[k], f[(k + 1) % len(f)])
            dart_count[dart] = dart_count.get(dart, 0) + 1
    for i, j in edges:
        if dart_count.get((i, j), 0) != 1 or dart_count.get((j, i), 0) != 1:
            raise AssertionError(f"{name}: edge ({i},{j}) not traversed once per direction")


@lru_cache(maxsize=None)
def build_solid(name: str) -> Polyhedron:
    """Construct one of the five solids; raises ValueError for other names."""
    if name not in SOLID_NAMES:
        raise ValueError(f"unknown solid name: {name!r}")
    raw = np.array(sorted(_raw_coordinates(name)), dtype=float)
    dists = np.linalg.norm(raw[:, None, :] - raw[None, :, :], axis=2)
    np.fill_diagonal(dists, np.inf)
    edge_len = dists.min()
    verts = raw / edge_len
    dists = dists / edge_len
    edges = tuple(
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if abs(dists[i, j] - 1.0) <= LEN_TOL
    )
    adjacency = [[] for _ in verts]
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    cycles = _neighbor_cycles(verts, adjacency)
    faces = _trace_faces(adjacency, cycles)
    size = _EXPECTED[name][3]
    face_angle = (size - 2) * math.pi / size
    faces = _canonical_faces(faces)
    _validate(name, verts, faces, edges, face_angle)
    return Polyhedron(
        name=name,
        vertices=tuple(map(tuple, verts)),
        faces=faces,
        edges=edges,
        face_angle=face_angle,
        neighbors=tuple(tuple(c) for c in cycles),
    )


def graph_distance(p: Polyhedron, u: int, v: int) -> int:
    """Shortest-path edge count between u and v in the 1-skeleton."""
    n = p.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex index out of range: {u}, {v}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in p.neighbors[w]:
            if x not in dist:
                dist[x] = dist[w] + 1
                if x == v:
                    return dist[x]
                queue.append(x)
    raise AssertionError("skeleton is connected; unreachable")


def distance_profile(p: Polyhedron, u: int) -> tuple:
    """Sorted multiset of graph distances from u to every vertex."""
    return tuple(sorted(graph_distance(p, u, v) for v in range(p.vertex_count)))


@lru_cache(maxsize=None)
def automorphisms(name: str) -> tuple:
    """All symmetries of the solid as vertex permutations.

    Every isometry of a Platonic solid induces a map determined by the image
    of one dart plus whether the rotation system is preserved or reversed,
    which yields exactly 4E candidates (the full symmetry group including
    reflections).
    """
    p = build_solid(name)
    cycles = p.neighbors
    pos = [{u: k for k, u in enumerate(c)} for c in cycles]
    n = p.vertex_count
    a0, b0 = 0, cycles[0][0]
    perms = set()
    for a1 in range(n):
        for b1 in cycles[a1]:
            for sign in (1, -1):
                perm = [-1] * n
                perm[a0], perm[b0] = a1, b1
                ok = True
                queue = deque([(a0, b0)])
                seen_dart = {(a0, b0)}
                while queue and ok:
                    u, w = queue.popleft()
                    cu, cu2 = cycles[u], cycles[perm[u]]
                    k, k2 = pos[u][w], pos[perm[u]][perm[w]]
                    for step in range(1, len(cu)):
                        x = cu[(k + step) % len(cu)]
                        y = cu2[(k2 + sign * step) % len(cu2)]
                        if perm[x] == -1:
                            perm[x] = y
                        elif perm[x] != y:
                            ok = False
                            break
                        if (x, u) not in seen_dart:
                            seen_dart.add((x, u))
                            queue.append((x, u))
                    if (w, u) not in seen_dart:
                        seen_dart.add((w, u))
                        queue.append((w, u))
                if ok and -1 not in perm:
                    edge_set = set(p.edges)
                    if all(tuple(sorted((perm[i], perm[j]))) in edge_set for i, j in p.edges):
                        perms.add(tuple(perm))
    return tuple(sorted(perms))
