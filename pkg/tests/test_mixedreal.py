"""Mixed arrangements: placement types, real structures, fixed sets."""

import random

import pytest

from campedelli.covering import SurfaceTopology
from campedelli.errors import (CampedelliError, Concurrent, Degenerate,
                               DuplicateLine, NotSimple)
from campedelli.exactgeom import ComplexProjLine, GaussRational, ProjLine
from campedelli.labeling import Renumbering
from campedelli.mixedreal import (CONJUGATION_RENUMBERING, MIXED_LABELS,
                                  REAL_STRUCTURE_TAGS, MixedArrangement,
                                  MixedDefClass, RealStructureTag,
                                  RealTransform, apply_renumbering_mixed,
                                  class_fixed_euler, class_invariant,
                                  classify_type, def_class, dif_report,
                                  fix_topology, normalize, pair_quadratic,
                                  structure_preserving_renumberings,
                                  transform_mixed)
from conftest import random_mixed_arrangement

AXES = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))


def g(re, im=0):
    return GaussRational.of(re, im)


def witness(second_pair_leading):
    """Axes-normalized arrangement with the first pair vertex at (1,1)."""
    half_100 = ComplexProjLine(g(-1, -1), g(1), g(0, 1))
    half_101 = ComplexProjLine(second_pair_leading, g(1), g(0, 1))
    return MixedArrangement.from_half(*AXES, half_100, half_101)


def witness_i():
    return witness(g(-2, -3))


def witness_iii():
    return witness(g(2, 3))


def test_fixture_is_type_ii(mixed_ii):
    assert str(classify_type(mixed_ii)) == "II"
    classes = {def_class(mixed_ii, s) for s in REAL_STRUCTURE_TAGS}
    assert classes == {MixedDefClass("II")}
    assert (def_class(mixed_ii, RealStructureTag("c++"))
            == def_class(mixed_ii, RealStructureTag("c+-")))


def test_fixture_pair_quadratics(mixed_ii):
    assert pair_quadratic(mixed_ii.cpx_100) == (2, 1, 1, -2, -2, 0)
    assert pair_quadratic(mixed_ii.cpx_101) == (2, 1, 1, -2, 2, 0)


def test_pair_quadratic_nonnegative(mixed_ii):
    for line in (mixed_ii.cpx_100, mixed_ii.cpx_101, witness_i().cpx_101):
        c = pair_quadratic(line)
        for z0 in range(-3, 4):
            for z1 in range(-3, 4):
                for z2 in range(-3, 4):
                    val = (c[0] * z0 * z0 + c[1] * z1 * z1 + c[2] * z2 * z2
                           + c[3] * z0 * z1 + c[4] * z0 * z2 + c[5] * z1 * z2)
                    assert val >= 0


def test_witness_types_and_classes():
    mi = witness_i()
    miii = witness_iii()
    assert str(classify_type(mi)) == "I"
    assert str(classify_type(miii)) == "III"
    assert def_class(mi, RealStructureTag("c++")).name == "I+"
    assert def_class(mi, RealStructureTag("c-+")).name == "I+"
    assert def_class(mi, RealStructureTag("c+-")).name == "I-"
    assert def_class(miii, RealStructureTag("c++")).name == "III+"
    assert def_class(miii, RealStructureTag("c--")).name == "III-"


def test_five_invariant_pairs_distinct(mixed_ii):
    reps = {
        "I+": (witness_i(), RealStructureTag("c++")),
        "I-": (witness_i(), RealStructureTag("c+-")),
        "II": (mixed_ii, RealStructureTag("c++")),
        "III+": (witness_iii(), RealStructureTag("c++")),
        "III-": (witness_iii(), RealStructureTag("c--")),
    }
    pairs = {}
    for name, (m, s) in reps.items():
        assert def_class(m, s).name == name
        pairs[name] = class_invariant(m, s)
    assert pairs["I+"] == ((-3, 1), (1, 1))
    assert pairs["I-"] == ((1, 1), (-3, 1))
    assert pairs["II"] == ((-1, 1), (-1, 1))
    assert pairs["III+"] == ((-1, -1), (1, 1))
    assert pairs["III-"] == ((1, 1), (-1, -1))
    assert len(set(pairs.values())) == 5
    for name, (own, _) in pairs.items():
        assert class_fixed_euler(MixedDefClass(name)) == own


def test_fix_topology_components():
    mi = witness_i()
    own = fix_topology(mi, RealStructureTag("c++"))
    assert own == [SurfaceTopology(1, -3, False), SurfaceTopology(1, 1, False)]
    other = fix_topology(mi, RealStructureTag("c--"))
    assert other == [SurfaceTopology(1, 1, False), SurfaceTopology(1, 1, False)]


def test_dif_report_groups(mixed_ii):
    classes = [MixedDefClass(n) for n in ("I+", "I-", "II", "III+", "III-")]
    rep = dif_report(classes)
    assert rep.computed_class_count == 4
    grouped = {key: tuple(c.name for c in val) for key, val in rep.groups}
    assert grouped == {
        (-3, 1): ("I+",),
        (-1, -1): ("III+",),
        (-1, 1): ("II",),
        (1, 1): ("I-", "III-"),
    }
    text = rep.lines()
    assert any("I-, III-" in ln for ln in text)
    assert text[-2].endswith("reported class count: 4")
    assert text[-1] == "reported identification: I- ~ III+"


def test_normalize_idempotent():
    mi = witness_i()
    nm, t = normalize(mi)
    nm2, t2 = normalize(nm)
    assert t2.is_identity()
    assert nm2.pair_vertices() == nm.pair_vertices()


def test_invariance_under_real_transforms():
    rng = random.Random(7)
    for m, expected in ((witness_i(), "I"), (witness_iii(), "III")):
        for _ in range(4):
            while True:
                rows = tuple(tuple(rng.randint(-5, 5) for _ in range(3))
                             for _ in range(3))
                try:
                    t = RealTransform(rows)
                    break
                except ValueError:
                    continue
            moved = transform_mixed(m, t)
            assert str(classify_type(moved)) == expected
            for s in REAL_STRUCTURE_TAGS:
                assert class_invariant(moved, s) == class_invariant(m, s)


def test_invariance_under_renumberings(mixed_ii):
    renums = structure_preserving_renumberings()
    assert len(renums) == 8
    expected_sigma = Renumbering((2, 4, 1))
    assert all(CONJUGATION_RENUMBERING.apply_code(c)
               == expected_sigma.apply_code(c) for c in range(8))
    for m in (witness_i(), witness_iii(), mixed_ii):
        expected = str(classify_type(m))
        for r in renums:
            relabeled = apply_renumbering_mixed(m, r)
            assert str(classify_type(relabeled)) == expected


def test_conjugation_renumbering_swaps_pairs():
    sigma = CONJUGATION_RENUMBERING
    assert sigma.apply_code(4) == 2 and sigma.apply_code(2) == 4
    assert sigma.apply_code(5) == 3 and sigma.apply_code(3) == 5
    for code in (1, 6, 7):
        assert sigma.apply_code(code) == code
    m = witness_i()
    swapped = apply_renumbering_mixed(m, sigma)
    assert swapped.cpx_100 == m.cpx_010
    assert swapped.cpx_101 == m.cpx_011


def test_structure_tags():
    assert [str(s) for s in REAL_STRUCTURE_TAGS] == ["c++", "c-+", "c+-", "c--"]
    assert RealStructureTag("c++").conjugacy_class == "c+"
    assert RealStructureTag("c--").conjugacy_class == "c-"
    assert RealStructureTag("c-+").partner_class == "c-"
    with pytest.raises(ValueError):
        RealStructureTag("c00")
    with pytest.raises(ValueError):
        MixedDefClass("IV")


def test_vertex_on_axis_rejected():
    m = MixedArrangement.from_half(
        *AXES,
        ComplexProjLine(g(0, 1), g(1), g(0)),
        ComplexProjLine(g(-2, -3), g(1), g(0, 1)))
    with pytest.raises(Degenerate):
        classify_type(m)


def test_concurrent_reals_rejected():
    with pytest.raises(Concurrent):
        MixedArrangement.from_half(
            ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0),
            ComplexProjLine(g(-1, -1), g(1), g(0, 1)),
            ComplexProjLine(g(-2, -3), g(1), g(0, 1)))


def test_coinciding_lines_rejected():
    with pytest.raises(DuplicateLine):
        witness(g(-1, -1))


def test_non_conjugate_slots_rejected():
    half = ComplexProjLine(g(-1, -1), g(1), g(0, 1))
    other = ComplexProjLine(g(-2, -3), g(1), g(0, 1))
    with pytest.raises(CampedelliError):
        MixedArrangement(*AXES, half, other,
                         other, ComplexProjLine(g(-2, 3), g(1), g(0, -1)))


def test_zero_sum_triple_rejected():
    m = MixedArrangement.from_half(
        *AXES,
        ComplexProjLine(g(-1, -1), g(1), g(0, 1)),
        ComplexProjLine(g(-1, -1), g(1), g(0, 2)))
    with pytest.raises(Degenerate):
        classify_type(m)


def test_four_lines_through_point_rejected():
    m = MixedArrangement.from_half(
        *AXES,
        ComplexProjLine(g(-1, -1), g(1), g(0, 1)),
        ComplexProjLine(g(-1, -2), g(1), g(0, 2)))
    with pytest.raises(NotSimple):
        classify_type(m)


def test_oracle_agreement_on_random_arrangements():
    rng = random.Random(20260819)
    type_tags = set()
    for _ in range(10):
        m = random_mixed_arrangement(rng)
        type_tags.add(str(classify_type(m)))
        for s in REAL_STRUCTURE_TAGS:
            parts = fix_topology(m, s)
            assert len(parts) == 2
            for piece in parts:
                assert piece.components == 1
                assert not piece.orientable
                assert piece.euler_per_component in (1, -1, -3)
    assert len(type_tags) >= 2


def test_mixed_labels_order():
    assert [lab.code for lab in MIXED_LABELS] == [6, 7, 1, 4, 2, 5, 3]
    m = witness_i()
    v0, v1 = m.pair_vertices()
    assert v0.coords == (1, 1, 1)
    assert v1.coords == (1, 2, 3)
