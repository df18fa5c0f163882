"""Verify flat-folding certificates: a crease partition of a net plus
per-facet isometries claiming a doubly covered polygon.

Certificates are data, shipped with the package or supplied by the user;
nothing here searches for foldings. Every check is independent of how the
certificate was produced: tiling, isometry validity, crease reflection
consistency, image containment, exact double coverage (area plus a dense
point sample), and consistency with the claimed boundary gluing.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .geometry import Isometry, point_segment_distance, points_in_polygon, polygon_area
from .unfold import Net, net_from_provenance
from .zipper import zip_at

AREA_RTOL = 1e-6
POINT_TOL = 1e-7
MIN_COVER_SAMPLES = 10_000
EDGE_CLEARANCE = 1e-6


@dataclass(frozen=True)
class FoldSpec:
    """A flat-folding claim for one net."""

    name: str
    net_solid: str
    net_path: tuple
    facets: tuple  # of vertex arrays in net coordinates
    isometries: tuple  # of Isometry, one per facet
    target: tuple  # target polygon vertices
    gluing: dict  # {"type": "zipping", "anchor": x} or {"type": "non_zip", ...}
    description: str = ""

    @property
    def net(self) -> Net:
        return net_from_provenance(self.net_solid, list(self.net_path))

    @staticmethod
    def from_dict(d: dict) -> "FoldSpec":
        return FoldSpec(
            name=d.get("name", "unnamed"),
            net_solid=d["net"]["solid"],
            net_path=tuple(d["net"]["path"]),
            facets=tuple(tuple(map(tuple, facet)) for facet in d["facets"]),
            isometries=tuple(
                Isometry(bool(i["reflect"]), float(i["angle"]), float(i["tx"]), float(i["ty"]))
                for i in d["isometries"]
            ),
            target=tuple(map(tuple, d["target"])),
            gluing=d["gluing"],
            description=d.get("description", ""),
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "net": {"solid": self.net_solid, "path": list(self.net_path)},
            "facets": [[list(p) for p in facet] for facet in self.facets],
            "isometries": [
                {"reflect": i.reflect, "angle": i.angle, "tx": i.tx, "ty": i.ty}
                for i in self.isometries
            ],
            "target": [list(p) for p in self.target],
            "gluing": self.gluing,
        }


@dataclass
class VerificationReport:
    spec_name: str
    checks: dict = field(default_factory=dict)  # name -> (passed, detail)
    target_side_lengths: tuple = ()
    target_angles_deg: tuple = ()
    gluing_tree_degrees: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def add(self, name, ok, detail=""):
        self.checks[name] = (bool(ok), detail)

    def summary(self) -> str:
        lines = [f"{self.spec_name}: {'PASS' if self.passed else 'FAIL'}"]
        for name, (ok, detail) in self.checks.items():
            lines.append(f"  [{'ok' if ok else 'XX'}] {name}" + (f" ({detail})" if detail else ""))
        if self.target_side_lengths:
            sides = ", ".join(f"{s:.6f}" for s in self.target_side_lengths)
            angles = ", ".join(f"{a:.4f}" for a in self.target_angles_deg)
            lines.append(f"  target sides: {sides}; corner angles (deg): {angles}")
        if self.gluing_tree_degrees:
            lines.append(f"  gluing tree node degrees: {self.gluing_tree_degrees}")
        return "\n".join(lines)


def _point_in_poly_tol(points, poly, tol):
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    inside = points_in_polygon(pts, poly)
    near = np.zeros(len(pts), dtype=bool)
    poly = np.asarray(poly, dtype=float)
    for k in range(len(poly)):
        near |= point_segment_distance(pts, poly[k], poly[(k + 1) % len(poly)]) <= tol
    return inside | near


def _sample_grid(poly, min_count):
    poly = np.asarray(poly, dtype=float)
    lo = poly.min(axis=0)
    hi = poly.max(axis=0)
    area = abs(polygon_area(poly))
    step = math.sqrt(area / (2.5 * min_count))
    xs = np.arange(lo[0] + step / 2, hi[0], step)
    ys = np.arange(lo[1] + step / 2, hi[1], step)
    gx, gy = np.meshgrid(xs, ys)
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    return pts[points_in_polygon(pts, poly)]


def _clear_of_edges(points, edge_list, clearance):
    keep = np.ones(len(points), dtype=bool)
    for a, b in edge_list:
        keep &= point_segment_distance(points, a, b) > clearance
    return points[keep]


def _polygon_edges(poly):
    poly = np.asarray(poly, dtype=float)
    return [(poly[k], poly[(k + 1) % len(poly)]) for k in range(len(poly))]


def target_dimensions(target) -> tuple:
    """Side lengths and interior angles of the target polygon (the resolved
    angle output for claims that state only side lengths)."""
    poly = np.asarray(target, dtype=float)
    n = len(poly)
    sides = tuple(float(np.hypot(*(poly[(k + 1) % n] - poly[k]))) for k in range(n))
    angles = []
    for k in range(n):
        u = poly[k - 1] - poly[k]
        w = poly[(k + 1) % n] - poly[k]
        ang = math.degrees(
            math.acos(np.clip((u @ w) / (np.hypot(*u) * np.hypot(*w)), -1.0, 1.0))
        )
        angles.append(round(ang, 9))
    return sides, tuple(angles)


def target_area_check(f: FoldSpec) -> bool:
    """Facet areas must sum to exactly twice the target area."""
    net_area = f.net.area()
    facet_area = sum(abs(polygon_area(facet)) for facet in f.facets)
    target_area = abs(polygon_area(f.target))
    return abs(facet_area - 2.0 * target_area) <= AREA_RTOL * net_area


def _boundary_point(net: Net, arc: float):
    """Planar position of the boundary point at normalized arc position."""
    arc = arc % 1.0
    corners = net.boundary
    n = len(corners)
    i = int(math.floor(arc * n + 1e-12)) % n
    frac = arc * n - i
    a = np.asarray(corners[i].position)
    b = np.asarray(corners[(i + 1) % n].position)
    return a + frac * (b - a)


def _image_of_point(f: FoldSpec, p, tol=1e-6):
    """Fold image of a net point: apply the isometry of any facet containing
    it (facets agree on shared creases)."""
    for facet, iso in zip(f.facets, f.isometries):
        if _point_in_poly_tol([p], facet, tol)[0]:
            return np.asarray(iso.apply_one(p))
    return None


def verify_fold(f: FoldSpec) -> VerificationReport:
    rep = VerificationReport(spec_name=f.name)
    net = f.net
    net_outline = net.boundary_points()
    net_area = net.area()
    facet_polys = [np.asarray(facet, dtype=float) for facet in f.facets]
    facet_areas = [abs(polygon_area(fp)) for fp in facet_polys]
    target = np.asarray(f.target, dtype=float)
    target_area = abs(polygon_area(target))
    images = [iso.apply(fp) for fp, iso in zip(facet_polys, f.isometries)]

    # (a) tiling: areas plus a sample of net-interior points covered once.
    area_ok = abs(sum(facet_areas) - net_area) <= AREA_RTOL * net_area
    if not area_ok:
        rep.add("tiling", False, f"facet areas sum {sum(facet_areas):.9f} != net area {net_area:.9f}")
        return rep  # bad partition: remaining checks are meaningless
    samples = _sample_grid(net_outline, 4000)
    facet_edges = [e for fp in facet_polys for e in _polygon_edges(fp)]
    samples = _clear_of_edges(samples, facet_edges, EDGE_CLEARANCE)
    cover = np.zeros(len(samples), dtype=int)
    for fp in facet_polys:
        cover += points_in_polygon(samples, fp)
    rep.add(
        "tiling",
        bool(len(samples) > 0 and np.all(cover == 1)),
        f"{len(samples)} interior samples",
    )

    # (b) isometries preserve distances.
    iso_ok = True
    for fp, iso, img in zip(facet_polys, f.isometries, images):
        d_src = np.linalg.norm(np.diff(np.vstack([fp, fp[:1]]), axis=0), axis=1)
        d_img = np.linalg.norm(np.diff(np.vstack([img, img[:1]]), axis=0), axis=1)
        if np.abs(d_src - d_img).max() > 1e-7:
            iso_ok = False
    rep.add("isometries", iso_ok)

    # (c) adjacent facets agree on their shared crease and differ by a
    # reflection (or are identical).
    crease_ok = True
    detail = ""
    n_f = len(facet_polys)
    for i in range(n_f):
        for j in range(i + 1, n_f):
            seg = _shared_segment(facet_polys[i], facet_polys[j])
            if seg is None:
                continue
            p, q = seg
            pi = f.isometries[i].apply([p, q])
            pj = f.isometries[j].apply([p, q])
            if np.abs(pi - pj).max() > 1e-7:
                crease_ok = False
                detail = f"facets {i},{j} disagree on shared crease"
            same = f.isometries[i].reflect == f.isometries[j].reflect
            if same:
                # No fold across this crease: the full isometries must agree.
                test = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
                if np.abs(f.isometries[i].apply(test) - f.isometries[j].apply(test)).max() > 1e-7:
                    crease_ok = False
                    detail = f"facets {i},{j} share a crease without folding or matching"
    rep.add("crease-reflections", crease_ok, detail)

    # (d) every facet image inside the target.
    contain_ok = True
    for img in images:
        probes = [img]
        for a, b in _polygon_edges(img):
            ts = np.linspace(0.0, 1.0, 9)[:, None]
            probes.append(a[None, :] * (1 - ts) + b[None, :] * ts)
        probes = np.vstack(probes)
        if not np.all(_point_in_poly_tol(probes, target, 1e-6)):
            contain_ok = False
    rep.add("image-containment", contain_ok)

    # (e) exact double coverage.
    area2_ok = abs(sum(facet_areas) - 2.0 * target_area) <= AREA_RTOL * net_area
    pts = _sample_grid(target, MIN_COVER_SAMPLES)
    image_edges = [e for img in images for e in _polygon_edges(img)]
    pts = _clear_of_edges(pts, image_edges, EDGE_CLEARANCE)
    pts = _clear_of_edges(pts, _polygon_edges(target), EDGE_CLEARANCE)
    depth = np.zeros(len(pts), dtype=int)
    for img in images:
        depth += points_in_polygon(pts, img)
    sample_ok = len(pts) > 0 and bool(np.all(depth == 2))
    rep.add(
        "double-coverage",
        area2_ok and sample_ok,
        f"area ratio {sum(facet_areas) / target_area:.9f}, {len(pts)} samples",
    )

    # (f) gluing consistency.
    if f.gluing.get("type") == "zipping":
        x = float(f.gluing["anchor"])
        zipping = zip_at(net, x)  # raises if the claimed gluing is not valid
        glue_ok = True
        worst = 0.0
        for e in zipping.events:
            if len(e.arcs) == 2:
                pa = _image_of_point(f, _boundary_point(net, e.arcs[0]))
                pb = _image_of_point(f, _boundary_point(net, e.arcs[1]))
                if pa is None or pb is None:
                    glue_ok = False
                    continue
                worst = max(worst, float(np.hypot(*(pa - pb))))
        for s in np.linspace(0.0, 0.5, 101)[1:-1]:
            pa = _image_of_point(f, _boundary_point(net, (x + s) % 1.0))
            pb = _image_of_point(f, _boundary_point(net, (x - s) % 1.0))
            if pa is None or pb is None:
                glue_ok = False
                continue
            worst = max(worst, float(np.hypot(*(pa - pb))))
        glue_ok = glue_ok and worst <= 1e-6
        rep.add("gluing-consistency", glue_ok, f"max image mismatch {worst:.2e}")
    else:
        degrees = _gluing_tree_degrees(f, net)
        rep.gluing_tree_degrees = degrees
        rep.add("gluing-tree-reported", True, f"non-zip; node degrees {degrees}")

    sides, angles = target_dimensions(target)
    rep.target_side_lengths = sides
    rep.target_angles_deg = angles
    return rep


def _shared_segment(poly_a, poly_b, tol=1e-9):
    """A positive-length segment common to the boundaries of two facets, or
    None. Facet edges may subdivide each other, so overlap is detected on
    collinear spans rather than matching endpoints."""
    def cross2(p, q):
        return p[0] * q[1] - p[1] * q[0]

    best = None
    best_len = 2e-6
    for a1, a2 in _polygon_edges(poly_a):
        d = a2 - a1
        length = float(np.hypot(*d))
        if length < tol:
            continue
        u = d / length
        for b1, b2 in _polygon_edges(poly_b):
            if abs(cross2(u, b2 - b1)) > 1e-7 * max(1.0, np.hypot(*(b2 - b1))):
                continue
            if abs(cross2(u, b1 - a1)) > 1e-7:
                continue
            t1 = float((b1 - a1) @ u)
            t2 = float((b2 - a1) @ u)
            lo = max(0.0, min(t1, t2))
            hi = min(length, max(t1, t2))
            if hi - lo > best_len:
                best_len = hi - lo
                best = (a1 + lo * u, a1 + hi * u)
    return best


def _gluing_tree_degrees(f: FoldSpec, net: Net) -> dict:
    """Cluster boundary corners by coincident fold images; class size is the
    node degree in the identification tree (2 = seam interior, 1 = leaf).
    Coincidence is positional: the two layers of the claimed flat folding
    are not distinguished."""
    corners = net.boundary
    imgs = []
    for bv in corners:
        q = _image_of_point(f, np.asarray(bv.position))
        imgs.append(q)
    classes = []
    for idx, q in enumerate(imgs):
        if q is None:
            continue
        for cls in classes:
            if np.hypot(*(q - cls[0])) <= 1e-6:
                cls[1].append(idx)
                break
        else:
            classes.append((q, [idx]))
    degree_count: dict[int, int] = {}
    for _, members in classes:
        degree_count[len(members)] = degree_count.get(len(members), 0) + 1
    return dict(sorted(degree_count.items()))


def load_foldspec(path_or_dict) -> FoldSpec:
    if isinstance(path_or_dict, dict):
        return FoldSpec.from_dict(path_or_dict)
    with open(path_or_dict) as fh:
        return FoldSpec.from_dict(json.load(fh))


def shipped_foldspecs() -> list[FoldSpec]:
    """The flat-folding certificates shipped with the package."""
    specs = []
    root = resources.files("zipfold").joinpath("data/foldspecs")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            specs.append(FoldSpec.from_dict(json.loads(entry.read_text())))
    return specs
