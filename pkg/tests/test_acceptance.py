"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line.

Several stated reference values are contradicted by exact recomputation
(hand-verified with integer arithmetic; see tests in test_zipper.py and
test_congruence.py). Those criteria are asserted as stated and fail
honestly, with the computed value in the failure message; the soft-failure
clause built into criterion 4 is honored as written.
"""

import math

import numpy as np
import pytest

from zipfold.congruence import dedupe, signature
from zipfold.hampath import count_cycles_through_edge, enumerate_paths
from zipfold.report import (
    FOLD_TARGET_DIMS,
    cube_nets,
    foldspec_results,
    icosahedron_parallelogram_class_count,
    octahedron_flat_signatures,
    survey,
)
from zipfold.solids import build_solid
from zipfold.unfold import unfold
from zipfold.zipper import enumerate_zippings, flat_compatible, zip_at

deg = math.degrees
R2 = math.sqrt(2.0)
R3 = math.sqrt(3.0)


def tell(n, ok, detail):
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


@pytest.fixture(scope="module")
def ico():
    return survey("icosahedron")


@pytest.fixture(scope="module")
def certs():
    return foldspec_results()


def test_criterion_01_icosahedron_path_counts(ico):
    expected = {1: 512, 2: 608, 3: 720}
    got = {d: len(ico.rows_for_pair(u, v)) for d, (u, v) in ico.endpoint_pairs.items()}
    assert tell(1, got == expected, f"labeled paths per distance class {got}")


def test_criterion_02_cycles_through_every_edge():
    p = build_solid("icosahedron")
    counts = {count_cycles_through_edge(p, e) for e in p.edges}
    assert tell(2, counts == {512}, f"cycle count set over all 30 edges: {sorted(counts)}")


def test_criterion_03_zippable_census(ico):
    per_class = {
        d: sum(1 for r in ico.rows_for_pair(u, v) if r.zippable)
        for d, (u, v) in ico.endpoint_pairs.items()
    }
    split = tuple(per_class[d] for d in sorted(per_class))
    total = sum(split)
    ok = tell(3, (total, split) == (82, (12, 20, 50)), f"computed {total} = {split}")
    assert ok, (
        f"stated 82 = (12, 20, 50); computed {total} = {split}. The computed census is "
        "exact: sample refoldings were re-verified by hand with integer arithmetic "
        "(see decisions ledger); the stated count under-enumerates."
    )


def test_criterion_04_distinct_zippable_classes_soft(ico):
    classes = dedupe([r.net for r in ico.zippable_rows()])
    n = len(classes)
    if n == 18:
        assert tell(4, True, "18 congruence classes among zippable nets")
    else:
        # The criterion itself declares a mismatch a soft failure reported
        # with both numbers (the stated count came from visual inspection).
        tell(4, False, f"SOFT - stated 18, computed {n}; both reported per the criterion's clause")
        assert n > 0


def test_criterion_05_cube_distinct_and_rigidity():
    cube = build_solid("cube")
    nets = [unfold(cube, cp) for cp in enumerate_paths(cube)]
    n_classes = len(dedupe(nets))
    t_net, s_net, z_net = cube_nets()
    from zipfold.zipper import is_zip_rigid

    ok = (
        n_classes == 3
        and is_zip_rigid(t_net)
        and not is_zip_rigid(s_net)
        and not is_zip_rigid(z_net)
    )
    assert tell(
        5, ok, f"{n_classes} classes; T rigid={is_zip_rigid(t_net)}, S/Z rigid=False/False"
    )


def test_criterion_06_cube_zigzag_zipping_census():
    _, _, z_net = cube_nets()
    rep = enumerate_zippings(z_net)
    nonid = rep.nonidentity()
    census = tuple(sorted(z.cluster_count() for z in nonid))
    flat_profile = (90.0, 90.0, 270.0, 270.0)
    copies = [
        z
        for z in nonid
        if tuple(round(deg(c), 6) for c in z.profile()) == flat_profile and flat_compatible(z)
    ]
    ok = census == (4, 4, 4, 4, 5, 6) and len(copies) == 2
    tell(6, ok, f"census {census}; flat-parallelogram copies {len(copies)}")
    assert ok, (
        f"stated census (4,4,4,4,5,6) with 2 flat-parallelogram copies; computed {census} "
        f"with {len(copies)} copy. Every candidate fold was hand-verified with integer "
        "arithmetic (see decisions ledger); the stated census miscounts one refolding."
    )


def test_criterion_07_octahedron(certs):
    oct_ = build_solid("octahedron")
    nets = [unfold(oct_, cp) for cp in enumerate_paths(oct_)]
    classes = dedupe(nets)
    flat_sigs = set(octahedron_flat_signatures(certs))
    special = []
    for cls in classes:
        net = cls[0]
        rep = enumerate_zippings(net)
        has_pi = any(
            tuple(round(deg(c), 6) for c in z.profile()) == (180.0,) * 4
            and z.cluster_count() == 4
            for z in rep.nonidentity()
        )
        if has_pi and signature(net) not in flat_sigs:
            special.append(net)
    ok = len(classes) == 3 and len(special) == 1
    tell(
        7,
        ok,
        f"{len(classes)} unfolding classes; {len(special)} class(es) with a 4x(curvature pi) "
        "refolding and no verified flat folding",
    )
    assert ok, (
        f"stated 3 distinct unfoldings, computed {len(classes)} (provably four path classes on "
        "K_2,2,2); the all-curvature-pi classes both carry verified flat foldings of other "
        "refoldings, so no class satisfies the stated conjunction. See decisions ledger."
    )


def test_criterion_08_dodecahedron_zip_rigid():
    s = survey("dodecahedron")
    rigid = all(r.rigid for r in s.rows)
    all_324 = all(
        abs(deg(rej.reflex_angle) - 324.0) < 1e-6 for r in s.rows for rej in r.report.rejections
    )
    min_alpha = min(
        deg(rej.convex_angle) for r in s.rows for rej in r.report.rejections
    )
    ok = rigid and all_324 and abs(min_alpha - 108.0) < 1e-6
    assert tell(
        8,
        ok,
        f"all {len(s.rows)} nets zip-rigid={rigid}; rejections show 324 deg endpoint angle, "
        f"minimum convex angle {min_alpha:.1f} deg",
    )


def test_criterion_09_tetrahedron():
    tet = build_solid("tetrahedron")
    nets = [unfold(tet, cp) for cp in enumerate_paths(tet)]
    classes = dedupe(nets)
    net = classes[0][0]
    corners = [bv for bv in net.boundary if abs(bv.angle - math.pi) > 1e-9]
    sides = []
    pos = [np.asarray(bv.position) for bv in corners]
    for k in range(len(pos)):
        sides.append(round(float(np.hypot(*(pos[(k + 1) % len(pos)] - pos[k]))), 9))
    rep = enumerate_zippings(net)
    ok = (
        len(classes) == 1
        and net.is_convex()
        and sorted(sides) == [1.0, 1.0, 2.0, 2.0]
        and rep.continuum
    )
    assert tell(9, ok, f"1 class; convex 2x1 parallelogram sides {sorted(sides)}; continuum reported")


def test_criterion_10_fold_certificates(certs):
    all_pass = all(rep.passed for _, rep in certs)
    dims_ok = True
    for spec, rep in certs:
        (lo, hi), angle = FOLD_TARGET_DIMS[spec.name]
        sides = sorted(set(round(s, 6) for s in rep.target_side_lengths))
        if abs(sides[0] - lo) > 1e-6 or abs(sides[-1] - hi) > 1e-6:
            dims_ok = False
        if not any(abs(a - angle) <= 1e-6 for a in rep.target_angles_deg):
            dims_ok = False
    count_ok = len(certs) == 9
    tell(
        10,
        all_pass and dims_ok and count_ok,
        f"{len(certs)} certificates shipped, all verify={all_pass}, dimensions match={dims_ok}",
    )
    assert all_pass and dims_ok, "a shipped certificate failed verification"
    assert count_ok, (
        "stated nine certificates; eight shipped. The ninth (a nonconvex non-zip flat folding "
        "of a dodecahedron net) is underdetermined by the source text, which gives no "
        "dimensions, net, or crease data for it; it is marked optional stretch data. See ledger."
    )


def test_criterion_11_unique_parallelogram_class(certs):
    count = icosahedron_parallelogram_class_count(certs)
    assert tell(
        11,
        count == 1,
        f"{count} zippable class contains a net with a verified sqrt(3) x 5 parallelogram folding",
    )


def test_criterion_12_property_suite(ico):
    failures = []
    # Gauss-Bonnet and involution for every valid refolding in the surveys.
    for name in ("cube", "octahedron", "dodecahedron"):
        for r in survey(name).rows:
            for z in r.report.zippings:
                if abs(sum(c.curvature for c in z.clusters) - 4 * math.pi) > 1e-6:
                    failures.append(f"curvature sum off for {name} {r.net.path}")
    for r in ico.rows[::13]:
        for z in r.report.zippings:
            if abs(sum(c.curvature for c in z.clusters) - 4 * math.pi) > 1e-6:
                failures.append(f"curvature sum off for icosahedron {r.net.path}")
            for e in z.events:
                if e.kind == "pair":
                    s = (e.arcs[0] + e.arcs[1] - 2 * z.anchor) % 1.0
                    if min(s, 1 - s) > 1e-9:
                        failures.append("pairing not an involution")
    # Boundary angle sums and identity refolds.
    for name in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
        p = build_solid(name)
        for cp in enumerate_paths(p)[::59]:
            net = unfold(p, cp)
            n = len(net.boundary)
            if abs(sum(bv.angle for bv in net.boundary) - (n - 2) * math.pi) > 1e-6:
                failures.append(f"angle sum off for {name}")
            z = zip_at(net, 0.0)
            expected = tuple(
                sorted(round(2 * math.pi - p.vertex_angle(v), 9) for v in range(p.vertex_count))
            )
            if tuple(round(c, 9) for c in z.profile()) != expected or not z.identity:
                failures.append(f"identity refold wrong for {name}")
    assert tell(12, not failures, f"{len(failures)} property violations"), failures
