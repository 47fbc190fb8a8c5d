"""Ten acceptance checks, one test per criterion.

Each test states its criterion in full and asserts it with no weakening;
shared golden data lives in chain_golden.py and the feature test modules.
"""

import itertools
import random

from campedelli.arrangement import (combinatorial_automorphisms,
                                    line_intersections, type_vector)
from campedelli.census import count_classes
from campedelli.covering import (GluedSurface, SurfaceTopology, betti,
                                 glue_oracle, preimage_topology, real_part,
                                 smith_thom_report)
from campedelli.equipment import (adjacency_profile, all_equipments,
                                  positive_faces, propagate,
                                  signs_from_quartics)
from campedelli.labeling import Label, is_campedelli
from campedelli.mixedreal import (REAL_STRUCTURE_TAGS, QUADRANT_SIDE_LABELS,
                                  MixedDefClass, RealStructureTag,
                                  class_invariant, classify_type, def_class,
                                  fix_topology)
from campedelli.moves import is_good_move, reverse_triangle, triangle_by_face
from campedelli.report import render_anchored_profile, render_walk
from campedelli.singularities import classify_arrangement, classify_point
from chain_golden import EXPECT, MOVES, WALK_ANCHORS
from conftest import (random_mixed_arrangement, random_simple_arrangement)
from test_mixedreal import witness_i, witness_iii
from test_singularities import expected_kind, random_one_triple_arrangement


def test_criterion_01_cell_complex_counts():
    # >= 100 random simple 7-line arrangements: V=21, E=42, F=22,
    # sum of face counts 22, side total 84, at least 5 triangles; exact.
    rng = random.Random(101)
    for _ in range(100):
        arr = random_simple_arrangement(rng)
        c = arr.complex
        assert len(c.points) == 21
        assert c.n_edges == 42
        assert c.n_faces == 22
        tv = type_vector(c)
        m = dict(zip(range(3, 8), tv.counts))
        assert sum(m.values()) == 22
        assert sum(n * cnt for n, cnt in m.items()) == 84
        assert m[3] >= 5


def _chain_tables(arr, eq, name_to_face):
    c = arr.complex
    face_to_name = {v: k for k, v in name_to_face.items()}
    t1 = [c.faces[name_to_face[f"P{i}"]].n_sides for i in range(7, 23)]
    walks = {p: render_walk(c, name_to_face[p], name_to_face[a],
                            name_to_face[b], face_to_name)
             for p, (a, b) in WALK_ANCHORS.items()}
    a_string = render_anchored_profile(
        c, [(name_to_face[p],) + tuple(name_to_face[x] for x in WALK_ANCHORS[p])
            for p in ("P1", "P2")])
    return str(type_vector(c)), t1, walks, a_string


def test_criterion_02_seeded_realization(fig5):
    # Type (11,5,5,1,0); both seeded-state tables exact under the fixture
    # numbering; exactly two positive polygons; the anchored profile string.
    arr, eq, names = fig5
    got_type, t1, walks, a_string = _chain_tables(arr, eq, names)
    exp_type, exp_t1, exp_walks, exp_a = EXPECT[0]
    assert got_type == "(11,5,5,1,0)"
    assert t1 == exp_t1
    assert walks == exp_walks
    assert len(positive_faces(eq)) == 2
    assert a_string == "((4,4',5,3',5,4'),(5,3',5,3',6,3'))"
    assert a_string == exp_a


def test_criterion_03_move_chain(fig5):
    # Seven scripted reversals reproduce all eight table sets with eight
    # pairwise distinct (type, profile) pairs; every move is a good move.
    arr, eq, names = fig5
    name_to_face = dict(names)
    invariant_pairs = []
    for state in range(8):
        got = _chain_tables(arr, eq, name_to_face)
        exp = EXPECT[state]
        assert got[0] == exp[0], f"state {state} type"
        assert got[1] == exp[1], f"state {state} side counts"
        assert got[2] == exp[2], f"state {state} walks"
        assert got[3] == exp[3], f"state {state} profile"
        invariant_pairs.append((got[0], got[3]))
        if state == 7:
            break
        t = triangle_by_face(arr, name_to_face[MOVES[state]])
        assert is_good_move(eq, t)
        rec = reverse_triangle(arr, eq, t)
        name_to_face = {nm: rec.face_map[f] for nm, f in name_to_face.items()}
        arr, eq = rec.arrangement, rec.equipment
    assert len(set(invariant_pairs)) == 8


def test_criterion_04_heptagon_reversal(heptagon_file):
    # Reversing the all-negative-star triangle of the (7,14,0,0,1)
    # arrangement gives (7,13,1,1,0) with a different adjacency profile.
    from campedelli.fileio import resolve_face_names

    arr = heptagon_file.labeled
    c = arr.complex
    assert str(type_vector(c)) == "(7,14,0,0,1)"
    names = resolve_face_names(heptagon_file, c)
    anchor = heptagon_file.anchor
    eq = propagate(arr, c.locate(anchor.point), anchor.signs)
    t = triangle_by_face(arr, names["P0"])
    assert all(eq.codes[f] != 0 for f in t.star)
    assert is_good_move(eq, t)
    before = str(adjacency_profile(arr, eq))
    rec = reverse_triangle(arr, eq, t)
    assert str(type_vector(rec.arrangement.complex)) == "(7,13,1,1,0)"
    after = str(adjacency_profile(rec.arrangement, rec.equipment))
    assert after != before


def test_criterion_05_covering_oracle():
    # Closed forms match the cell-counting oracle on all 22 faces of >= 20
    # random simple arrangements and on all four quadrants of >= 10 mixed
    # arrangements (two non-orientable components, chi = 1 - 2n); zero
    # mismatches allowed.
    rng = random.Random(505)
    mismatches = 0
    for _ in range(20):
        arr = random_simple_arrangement(rng)
        assert bool(is_campedelli(arr))
        lab = arr.labeling
        for face in arr.complex.faces:
            labels = tuple(lab[li] for li in face.side_lines)
            if glue_oracle(GluedSurface(labels)) != preimage_topology(face, lab):
                mismatches += 1
    for _ in range(10):
        m = random_mixed_arrangement(rng)
        total_vertices = 0
        for tag_name in ("c++", "c+-"):
            for piece in fix_topology(m, RealStructureTag(tag_name)):
                n = (1 - piece.euler_per_component) // 2
                total_vertices += n
                oracle = glue_oracle(
                    GluedSurface(QUADRANT_SIDE_LABELS, (Label(6),) * n))
                expected = SurfaceTopology(2, 1 - 2 * n, False)
                if oracle != expected or piece != SurfaceTopology(1, 1 - 2 * n, False):
                    mismatches += 1
        assert total_vertices == 2
    assert mismatches == 0


def test_criterion_06_premaximal_real_part(premax_file):
    # Real part {chi=-6 non-orientable, Klein bottle, torus}; Betti totals
    # 18 over Z/2 and 14 over Q; 18 < 22 and 14 > 10.
    arr = premax_file.labeled
    c = arr.complex
    anchor = premax_file.anchor
    eq = propagate(arr, c.locate(anchor.point), anchor.signs)
    parts = [top for _, top in real_part(arr, eq)]
    kinds = sorted((t.components, t.euler_per_component, t.orientable)
                   for t in parts)
    assert kinds == [(1, -6, False), (1, 0, False), (1, 0, True)]
    b = betti(parts)
    assert b.z2_total == 18
    assert b.q_total == 14
    assert b.z2_total < 22
    assert b.q_total > 10
    st = smith_thom_report(b)
    assert st.z2_within and st.q_exceeds


def test_criterion_07_equipment_laws(fig5):
    # On every tested arrangement: 8 distinct equipments, >= 7 distinct
    # triples within each, >= 7 of 8 with non-empty positive sets, and
    # propagation equal to the quartic-sign evaluation on every face.
    rng = random.Random(707)
    tested = [fig5[0]] + [random_simple_arrangement(rng) for _ in range(3)]
    for arr in tested:
        eqs = all_equipments(arr)
        assert len({e.codes for e in eqs}) == 8
        for eq in eqs:
            assert len(set(eq.codes)) >= 7
        non_empty = sum(1 for eq in eqs if positive_faces(eq))
        assert non_empty >= 7
        eq = propagate(arr, 0, signs_from_quartics(arr, 0))
        for face in arr.complex.faces:
            assert eq.sign(face.id) == signs_from_quartics(arr, face)


def test_criterion_08_orbit_counts(fig5):
    # count_classes is 120 on the seeded realization and 120 on the
    # (9,9,3,1,0) realization; the seeded realization has exactly two
    # combinatorial automorphisms.
    arr, eq, names = fig5
    assert count_classes(arr.complex) == 120
    assert len(combinatorial_automorphisms(arr.complex)) == 2
    t = triangle_by_face(arr, names[MOVES[0]])
    rec = reverse_triangle(arr, eq, t)
    c1 = rec.arrangement.complex
    assert str(type_vector(c1)) == "(9,9,3,1,0)"
    assert count_classes(c1) == 120


def test_criterion_09_mixed_classification(mixed_ii):
    # The stored proof coordinates classify as type II; both structure
    # classes give the same deformation class there; the five deformation
    # classes have five distinct (own, partner) fixed-set invariants; all
    # fixed components follow chi = 1 - 2n and the oracle.
    assert str(classify_type(mixed_ii)) == "II"
    assert (def_class(mixed_ii, RealStructureTag("c++"))
            == def_class(mixed_ii, RealStructureTag("c+-")))
    reps = {
        "I+": (witness_i(), RealStructureTag("c++")),
        "I-": (witness_i(), RealStructureTag("c--")),
        "II": (mixed_ii, RealStructureTag("c++")),
        "III+": (witness_iii(), RealStructureTag("c++")),
        "III-": (witness_iii(), RealStructureTag("c--")),
    }
    invariants = {}
    for name, (m, s) in reps.items():
        assert def_class(m, s) == MixedDefClass(name)
        invariants[name] = class_invariant(m, s)
    assert len(set(invariants.values())) == 5
    for m, _ in reps.values():
        for s in REAL_STRUCTURE_TAGS:
            for piece in fix_topology(m, s):
                assert not piece.orientable
                n = (1 - piece.euler_per_component) // 2
                assert piece.euler_per_component == 1 - 2 * n
                assert n in (0, 1, 2)


def test_criterion_10_singularity_classifier():
    # The six-case table on every size 2..3 multiset over the 7 labels plus
    # r >= 4 spot checks; all-canonical iff Campedelli-valid on >= 50
    # synthesized degenerate bijectively labeled arrangements.
    for r in (2, 3):
        for codes in itertools.combinations_with_replacement(range(1, 8), r):
            assert classify_point(Label(c) for c in codes).kind \
                == expected_kind(codes)
    for codes in ((1, 2, 4, 7), (3, 3, 3, 3), (1, 2, 3, 4, 5)):
        assert classify_point(Label(c) for c in codes).kind == "non-canonical"
    rng = random.Random(1010)
    outcomes = set()
    for _ in range(50):
        arr = random_one_triple_arrangement(rng)
        verdict = classify_arrangement(arr)
        ok = bool(is_campedelli(arr))
        assert verdict.all_canonical == ok
        outcomes.add(ok)
    assert outcomes == {True, False}
