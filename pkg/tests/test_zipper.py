import math

import pytest

from zipfold.geometry import TAU
from zipfold.hampath import enumerate_paths
from zipfold.report import cube_nets
from zipfold.solids import build_solid
from zipfold.unfold import NonSimpleNetError, unfold
from zipfold.zipper import (
    GluingError,
    enumerate_zippings,
    flat_compatible,
    implied_polygon_angles,
    is_zip_rigid,
    zip_at,
)

deg = math.degrees


def first_net(name, index=0):
    p = build_solid(name)
    return unfold(p, enumerate_paths(p)[index])


def profile_deg(z):
    return tuple(round(deg(c), 6) for c in z.profile())


# --- identity refolds -------------------------------------------------------

@pytest.mark.parametrize("name", ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"])
def test_identity_refold_always_valid(name):
    p = build_solid(name)
    for cp in enumerate_paths(p)[::7]:
        net = unfold(p, cp)
        z = zip_at(net, 0.0)
        assert z.identity
        expected = tuple(
            sorted(round(TAU - p.vertex_angle(v), 9) for v in range(p.vertex_count))
        )
        assert tuple(round(c, 9) for c in z.profile()) == expected


def test_identity_appears_in_enumeration():
    t_net, s_net, z_net = cube_nets()
    for net in (t_net, s_net, z_net):
        rep = enumerate_zippings(net)
        assert sum(1 for z in rep.zippings if z.identity) == 1


# --- tetrahedron: convex continuum ------------------------------------------

def test_tetrahedron_continuum_and_rhombus():
    net = first_net("tetrahedron")
    rep = enumerate_zippings(net)
    assert rep.continuum and not rep.zippings
    assert not is_zip_rigid(net)
    z = zip_at(net, 1.0 / 3.0)
    assert profile_deg(z) == (120.0, 120.0, 240.0, 240.0)  # doubly covered rhombus corners
    assert not z.identity


def test_anchor_pair_symmetry():
    net = first_net("tetrahedron")
    z1 = zip_at(net, 0.2)
    z2 = zip_at(net, 0.7)
    key1 = [(e.kind, tuple(round(a, 9) for a in e.arcs)) for e in z1.events]
    key2 = [(e.kind, tuple(round(a, 9) for a in e.arcs)) for e in z2.events]
    assert key1 == key2


# --- cube -------------------------------------------------------------------

def test_cube_rigidity_pattern():
    t_net, s_net, z_net = cube_nets()
    assert is_zip_rigid(t_net)
    assert not is_zip_rigid(s_net)
    assert not is_zip_rigid(z_net)


def test_cube_zigzag_census_computed():
    """Exact census of the distance-1 non-rigid cube net, verified by hand
    with integer arithmetic (angles in units of 90 degrees, arcs in 1/28):
    one flat-parallelogram profile, two all-curvature-pi profiles, one
    5-cone and two 6-cone refoldings."""
    _, _, z_net = cube_nets()
    rep = enumerate_zippings(z_net)
    nonid = rep.nonidentity()
    assert sorted(z.cluster_count() for z in nonid) == [4, 4, 4, 5, 6, 6]
    profiles = sorted(profile_deg(z) for z in nonid)
    assert profiles.count((90.0, 90.0, 270.0, 270.0)) == 1
    assert profiles.count((180.0, 180.0, 180.0, 180.0)) == 2


def test_cube_staircase_census_computed():
    """The distance-3 cube net: three flat-parallelogram profiles and three
    5-cone refoldings (hand-verified)."""
    _, s_net, _ = cube_nets()
    rep = enumerate_zippings(s_net)
    nonid = rep.nonidentity()
    assert sorted(z.cluster_count() for z in nonid) == [4, 4, 4, 5, 5, 5]
    profiles = [profile_deg(z) for z in nonid]
    assert profiles.count((90.0, 90.0, 270.0, 270.0)) == 3


def test_cube_parallelogram_profile_events_include_exact_flats():
    """Any cube-net refolding with the 45-degree-parallelogram profile must
    glue both 270-degree endpoint corners onto 90-degree corners, producing
    exactly-2*pi smooth points, which never enter the cone-point list."""
    _, s_net, z_net = cube_nets()
    for net in (s_net, z_net):
        rep = enumerate_zippings(net)
        for z in rep.nonidentity():
            if profile_deg(z) != (90.0, 90.0, 270.0, 270.0):
                continue
            flats = [e for e in z.events if e.kind == "pair" and abs(e.total_angle - TAU) < 1e-9]
            assert len(flats) >= 2
            assert all(c.curvature > 1e-9 for c in z.cone_points())


# --- dodecahedron ------------------------------------------------------------

def test_dodecahedron_sample_rigid_with_rejections():
    p = build_solid("dodecahedron")
    for cp in enumerate_paths(p)[::211]:
        net = unfold(p, cp)
        rep = enumerate_zippings(net)
        assert [z.identity for z in rep.zippings] == [True]
        assert rep.rejections
        for rej in rep.rejections:
            assert abs(deg(rej.reflex_angle) - 324.0) < 1e-9
            assert deg(rej.convex_angle) >= 108.0 - 1e-9
        assert min(deg(r.convex_angle) for r in rep.rejections) == pytest.approx(108.0)


# --- validity and properties --------------------------------------------------

@pytest.mark.parametrize("name", ["cube", "octahedron", "dodecahedron"])
def test_gauss_bonnet_and_involution(name):
    p = build_solid(name)
    for cp in enumerate_paths(p)[::17]:
        net = unfold(p, cp)
        rep = enumerate_zippings(net)
        for z in rep.zippings:
            assert abs(sum(c.curvature for c in z.clusters) - 4 * math.pi) < 1e-6
            # every boundary corner in exactly one event
            seen = [i for e in z.events for i in e.corners]
            assert sorted(seen) == list(range(len(net.boundary)))
            # pairing is an involution: glued arcs mirror through the anchor
            for e in z.events:
                if e.kind == "pair":
                    s = (e.arcs[0] + e.arcs[1] - 2 * z.anchor) % 1.0
                    assert min(s, 1 - s) < 1e-9


def test_candidate_bound_linear():
    for name in ("cube", "octahedron", "dodecahedron"):
        p = build_solid(name)
        for cp in enumerate_paths(p)[::29]:
            net = unfold(p, cp)
            rep = enumerate_zippings(net)
            convex = sum(1 for bv in net.boundary if bv.angle < math.pi - 1e-9)
            assert rep.candidates_evaluated <= 2 * convex + 1


def test_reflex_never_glued_to_edge_interior():
    for name in ("cube", "octahedron", "icosahedron"):
        p = build_solid(name)
        for cp in enumerate_paths(p)[::101]:
            net = unfold(p, cp)
            rep = enumerate_zippings(net)
            for z in rep.zippings:
                for e in z.events:
                    if e.kind == "vertex-edge":
                        assert e.angles[0] <= math.pi + 1e-9


def test_gluing_error_carries_the_obstruction():
    p = build_solid("dodecahedron")
    net = unfold(p, enumerate_paths(p)[0])
    # glue the 324-degree endpoint corner onto a 108-degree corner
    target = next(bv for bv in net.boundary if abs(bv.angle - 3 * math.pi / 5) < 1e-9)
    x = ((target.arc + net.boundary[0].arc) / 2.0) % 0.5
    with pytest.raises(GluingError) as err:
        zip_at(net, x)
    assert err.value.total_angle > TAU


def test_zip_requires_simple_net():
    from .test_unfold import _bowtie_net

    with pytest.raises(NonSimpleNetError):
        zip_at(_bowtie_net(), 0.0)
    with pytest.raises(NonSimpleNetError):
        enumerate_zippings(_bowtie_net())


# --- the flat screen -----------------------------------------------------------

def test_flat_screen_on_parallelogram_zipping():
    _, s_net, _ = cube_nets()
    rep = enumerate_zippings(s_net)
    z = next(zz for zz in rep.nonidentity() if profile_deg(zz) == (90.0, 90.0, 270.0, 270.0))
    assert flat_compatible(z)
    angles = tuple(round(deg(a), 6) for a in implied_polygon_angles(z))
    assert angles == (45.0, 45.0, 135.0, 135.0)


def test_flat_screen_is_candidate_only_for_identity():
    """The screen is necessary, never sufficient: the cube's own refold
    passes it and must be reported as a candidate only."""
    t_net, _, _ = cube_nets()
    z = zip_at(t_net, 0.0)
    assert z.identity
    assert flat_compatible(z)
    angles = implied_polygon_angles(z)
    assert len(angles) == 8
    assert abs(sum(angles) - 6 * math.pi) < 1e-9
