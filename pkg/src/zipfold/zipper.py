"""Perimeter-halving refoldings of a net.

A fold anchored at arc position x glues boundary point x+s to x-s for
s in (0, 1/2); x and y = x + 1/2 are the fixed anchor points. The gluing is
a closed convex surface exactly when the total angle collected at every
glued point stays at or below 2*pi (with equality producing a smooth point).

For a nonconvex net the anchor candidates are finite: the first reflex
corner v either serves as an anchor, or exactly one strictly convex corner u
glues onto it, which pins the anchor at the perimeter midpoint between u and
v. Convex nets admit a continuum of valid folds and are reported as such
rather than enumerated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import ANG_TOL, TAU
from .unfold import Net, NonSimpleNetError

ARC_TOL = 1e-9
CURVATURE_TOL = 1e-9
ANGLE_SLACK = 1e-9


@dataclass(frozen=True)
class GlueEvent:
    """One glued point of the fold that involves at least one boundary
    corner (or an anchor)."""

    kind: str  # "anchor" | "pair" | "vertex-edge"
    arcs: tuple  # 1 or 2 arc positions
    corners: tuple  # boundary indices involved (possibly empty for anchors)
    angles: tuple  # contributing interior angles, same order as corners
    total_angle: float

    @property
    def curvature(self) -> float:
        return TAU - self.total_angle


@dataclass(frozen=True)
class VertexCluster:
    """A glued surface point with its total angle and curvature."""

    total_angle: float
    curvature: float
    arcs: tuple
    origins: tuple  # polyhedron vertices meeting here

    @property
    def is_cone_point(self) -> bool:
        return self.curvature > CURVATURE_TOL


@dataclass(frozen=True)
class Zipping:
    """A valid perimeter-halving gluing of a net."""

    net: Net
    anchor: float  # arc position x; x + 1/2 is the co-anchor
    events: tuple  # of GlueEvent, ordered by smallest participating arc
    clusters: tuple  # of VertexCluster, same order as events
    identity: bool  # pairing re-identifies the original cut edges
    flat_candidate: bool  # passes the necessary-condition flat screen

    def cone_points(self) -> tuple:
        return tuple(c for c in self.clusters if c.is_cone_point)

    def profile(self) -> tuple:
        """Sorted curvatures of the actual cone points."""
        return tuple(sorted(c.curvature for c in self.cone_points()))

    def cluster_count(self) -> int:
        return len(self.cone_points())


@dataclass(frozen=True)
class Rejection:
    """A discarded anchor candidate with the obstruction that killed it."""

    stage: str  # "angle-filter" | "gluing"
    anchor: float
    reflex_arc: float
    reflex_angle: float
    convex_arc: float | None
    convex_angle: float | None
    event_arcs: tuple
    total_angle: float


@dataclass(frozen=True)
class ZipReport:
    """Every fold of one net: discrete list, or a convex-net continuum."""

    net: Net
    continuum: bool
    zippings: tuple  # of Zipping (identity refolds included, flagged)
    rejections: tuple  # of Rejection
    candidates_evaluated: int

    def nonidentity(self) -> tuple:
        return tuple(z for z in self.zippings if not z.identity)


class GluingError(ValueError):
    """A glue event exceeded total angle 2*pi."""

    def __init__(self, arcs, total_angle):
        self.arcs = tuple(arcs)
        self.total_angle = float(total_angle)
        super().__init__(
            f"glued angle {math.degrees(total_angle):.6f} deg exceeds 360 at arc(s) {self.arcs}"
        )


def _circ_eq(a: float, b: float, tol: float = ARC_TOL) -> bool:
    d = abs(a - b) % 1.0
    return d <= tol or d >= 1.0 - tol


def zip_at(net: Net, x: float) -> Zipping:
    """Fold net with anchors at arcs x and x + 1/2.

    Raises GluingError (carrying the first violating event in boundary
    order) when some glued point collects more than 2*pi of angle.
    """
    if not net.simple:
        raise NonSimpleNetError("cannot zip a self-intersecting net")
    x = x % 1.0
    y = (x + 0.5) % 1.0
    corners = net.boundary
    arcs = [bv.arc for bv in corners]

    def corner_at(t):
        for i, a in enumerate(arcs):
            if _circ_eq(a, t):
                return i
        return None

    events = []
    consumed = set()
    for anchor_arc in (x, y):
        i = corner_at(anchor_arc)
        if i is not None:
            consumed.add(i)
            events.append(
                GlueEvent(
                    kind="anchor",
                    arcs=(arcs[i],),
                    corners=(i,),
                    angles=(corners[i].angle,),
                    total_angle=corners[i].angle,
                )
            )
        else:
            events.append(
                GlueEvent(
                    kind="anchor",
                    arcs=(anchor_arc,),
                    corners=(),
                    angles=(),
                    total_angle=math.pi,
                )
            )

    for i, bv in enumerate(corners):
        if i in consumed:
            continue
        partner = (2.0 * x - bv.arc) % 1.0
        j = corner_at(partner)
        if j is None:
            consumed.add(i)
            events.append(
                GlueEvent(
                    kind="vertex-edge",
                    arcs=(bv.arc, partner),
                    corners=(i,),
                    angles=(bv.angle,),
                    total_angle=bv.angle + math.pi,
                )
            )
        else:
            if j in consumed:
                continue
            consumed.add(i)
            consumed.add(j)
            events.append(
                GlueEvent(
                    kind="pair",
                    arcs=(bv.arc, corners[j].arc),
                    corners=(i, j),
                    angles=(bv.angle, corners[j].angle),
                    total_angle=bv.angle + corners[j].angle,
                )
            )

    events.sort(key=lambda e: min(e.arcs))
    for e in events:
        if e.total_angle > TAU + ANGLE_SLACK:
            raise GluingError(e.arcs, e.total_angle)

    clusters = tuple(
        VertexCluster(
            total_angle=e.total_angle,
            curvature=e.curvature,
            arcs=e.arcs,
            origins=tuple(corners[i].origin for i in e.corners),
        )
        for e in events
    )
    identity = _is_identity(net, events)
    z = Zipping(
        net=net,
        anchor=x,
        events=tuple(events),
        clusters=clusters,
        identity=identity,
        flat_candidate=False,
    )
    return Zipping(
        net=net,
        anchor=x,
        events=tuple(events),
        clusters=clusters,
        identity=identity,
        flat_candidate=flat_compatible(z),
    )


def _is_identity(net: Net, events) -> bool:
    """True when the pairing re-identifies exactly the original cut edges:
    anchors sit on the two path-endpoint corners and every pair event glues
    the two occurrences of one polyhedron vertex."""
    endpoints = {net.path[0], net.path[-1]}
    corners = net.boundary
    anchor_origins = set()
    for e in events:
        if e.kind == "anchor":
            if not e.corners:
                return False
            anchor_origins.add(corners[e.corners[0]].origin)
        elif e.kind == "pair":
            a, b = e.corners
            if corners[a].origin != corners[b].origin:
                return False
        else:
            return False
    return anchor_origins == endpoints


def enumerate_zippings(net: Net) -> ZipReport:
    """All folds of a net.

    Convex nets return a continuum marker: every anchor position yields a
    valid fold there, so there is no discrete list to report. Otherwise the
    candidates around the first reflex corner are tried in boundary order:
    the reflex corner as anchor first, then one canonical anchor per
    strictly convex corner small enough to glue onto it.
    """
    if not net.simple:
        raise NonSimpleNetError("cannot zip a self-intersecting net")
    if net.is_convex():
        return ZipReport(net=net, continuum=True, zippings=(), rejections=(), candidates_evaluated=0)

    corners = net.boundary
    v = next(i for i, bv in enumerate(corners) if bv.reflex)
    beta = corners[v].angle
    arc_v = corners[v].arc

    candidates = [("reflex-anchor", None, arc_v)]
    rejections = []
    for i, bv in enumerate(corners):
        if i == v or bv.angle >= math.pi - ANG_TOL:
            continue  # only strictly convex corners can glue onto v
        x = ((bv.arc + arc_v) / 2.0) % 0.5  # canonical representative of the two solutions
        if bv.angle + beta > TAU + ANGLE_SLACK:
            rejections.append(
                Rejection(
                    stage="angle-filter",
                    anchor=x,
                    reflex_arc=arc_v,
                    reflex_angle=beta,
                    convex_arc=bv.arc,
                    convex_angle=bv.angle,
                    event_arcs=(bv.arc, arc_v),
                    total_angle=bv.angle + beta,
                )
            )
            continue
        candidates.append(("glue", i, x))

    zippings = []
    for kind, i, x in candidates:
        try:
            zippings.append(zip_at(net, x))
        except GluingError as err:
            rejections.append(
                Rejection(
                    stage="gluing",
                    anchor=x,
                    reflex_arc=arc_v,
                    reflex_angle=beta,
                    convex_arc=corners[i].arc if i is not None else None,
                    convex_angle=corners[i].angle if i is not None else None,
                    event_arcs=err.arcs,
                    total_angle=err.total_angle,
                )
            )
    return ZipReport(
        net=net,
        continuum=False,
        zippings=tuple(zippings),
        rejections=tuple(rejections),
        candidates_evaluated=len(candidates),
    )


def is_zip_rigid(net: Net) -> bool:
    """True when the only valid fold re-creates the source solid."""
    report = enumerate_zippings(net)
    if report.continuum:
        return False
    return all(z.identity for z in report.zippings)


def flat_compatible(z: Zipping) -> bool:
    """Necessary-condition screen for the fold being a doubly covered
    convex polygon.

    The cone points would have to be the polygon's corners, with corner
    angles pi - curvature/2 each strictly inside (0, pi) and summing to
    (k-2)*pi. Exactly-flat glue events are smooth surface points and take no
    part in the corner multiset. The screen can never rule out a fold on
    curvature data alone, so a True here is only a candidacy claim; actual
    flatness is certified separately by fold verification.
    """
    cones = z.cone_points()
    k = len(cones)
    if k < 3:
        return False
    angles = [math.pi - c.curvature / 2.0 for c in cones]
    if any(not (ANG_TOL < a < math.pi - ANG_TOL) for a in angles):
        return False
    return abs(sum(angles) - (k - 2) * math.pi) <= 1e-6


def implied_polygon_angles(z: Zipping) -> tuple:
    """Corner angles of the doubly covered polygon this fold would form if
    it is actually flat, sorted ascending."""
    return tuple(sorted(math.pi - c.curvature / 2.0 for c in z.cone_points()))


def zipping_to_json_dict(z: Zipping) -> dict:
    return {
        "anchor": z.anchor,
        "identity": z.identity,
        "flat_candidate": z.flat_candidate,
        "events": [
            {
                "kind": e.kind,
                "arcs": list(e.arcs),
                "total_angle": e.total_angle,
                "curvature": e.curvature,
            }
            for e in z.events
        ],
        "clusters": [
            {"angle": c.total_angle, "curvature": c.curvature}
            for c in z.clusters
            if c.is_cone_point
        ],
    }


def report_to_json_dict(report: ZipReport) -> dict:
    return {
        "provenance": {"solid": report.net.solid, "path": list(report.net.path)},
        "continuum": report.continuum,
        "candidates_evaluated": report.candidates_evaluated,
        "zippings": [zipping_to_json_dict(z) for z in report.zippings],
        "rejections": [
            {
                "stage": r.stage,
                "anchor": r.anchor,
                "reflex_angle_deg": math.degrees(r.reflex_angle),
                "reflex_external_deg": 360.0 - math.degrees(r.reflex_angle),
                "convex_angle_deg": (
                    math.degrees(r.convex_angle) if r.convex_angle is not None else None
                ),
                "total_angle_deg": math.degrees(r.total_angle),
            }
            for r in report.rejections
        ],
    }
