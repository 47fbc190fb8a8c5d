"""Crossing-point classification and the canonical/valid equivalence."""

import itertools
import random

import pytest

from campedelli.arrangement import line_intersections
from campedelli.errors import InvalidMultiplicity
from campedelli.exactgeom import ProjLine, ProjPoint, intersect
from campedelli.labeling import (Label, LabeledArrangement, Labeling,
                                 is_campedelli)
from campedelli.singularities import (PointLabelData, classify_arrangement,
                                      classify_point, zero_sum_triple)
from conftest import random_lines


def expected_kind(codes):
    """The six-case table, written out independently."""
    if len(codes) == 2:
        return "4xA1" if codes[0] == codes[1] else "smooth"
    if len(codes) == 3:
        total = codes[0] ^ codes[1] ^ codes[2]
        if total == 0:
            return "non-canonical"
        s = sum(1 for c in codes if c == total)
        return {0: "A1", 1: "2xA3", 3: "4xD4"}[s]
    return "non-canonical"


def test_all_pairs_and_triples():
    for r in (2, 3):
        for codes in itertools.combinations_with_replacement(range(1, 8), r):
            verdict = classify_point(Label(c) for c in codes)
            assert verdict.kind == expected_kind(codes), codes
            assert verdict.canonical == (verdict.kind != "non-canonical")


def test_middle_count_never_two():
    for codes in itertools.combinations_with_replacement(range(1, 8), 3):
        total = codes[0] ^ codes[1] ^ codes[2]
        if total != 0:
            assert sum(1 for c in codes if c == total) != 2, codes


def test_preimage_counts_match_kind_names():
    cases = [
        ((3, 3), "4xA1", 4),
        ((3, 5), "smooth", 2),
        ((1, 2, 4), "A1", 1),
        ((1, 1, 2), "2xA3", 2),
        ((5, 5, 5), "4xD4", 4),
        ((1, 2, 3), "non-canonical", 2),
    ]
    for codes, kind, upstairs in cases:
        verdict = classify_point([Label(c) for c in codes])
        assert (verdict.kind, verdict.preimage_count) == (kind, upstairs)
        assert str(verdict) == kind


def test_four_or_more_lines_never_canonical():
    for codes in [(1, 2, 4, 7), (1, 1, 2, 3), (3, 5, 6, 3, 5), (7,) * 6]:
        verdict = classify_point([Label(c) for c in codes])
        assert verdict.kind == "non-canonical"
        assert not verdict.canonical


def test_zero_sum_triple_predicate():
    assert zero_sum_triple([Label(1), Label(2), Label(3)])
    assert zero_sum_triple([Label(5), Label(6), Label(3)])
    assert not zero_sum_triple([Label(1), Label(2), Label(4)])
    assert not zero_sum_triple([Label(1), Label(1)])
    assert not zero_sum_triple([Label(1), Label(2), Label(3), Label(4)])


def test_too_few_lines_rejected():
    with pytest.raises(InvalidMultiplicity):
        PointLabelData((Label(1),))
    with pytest.raises(InvalidMultiplicity):
        classify_point([Label(3)])


def test_point_label_data_sorted_and_sums():
    d = PointLabelData((Label(6), Label(1), Label(7)))
    assert [lab.code for lab in d.labels] == [1, 6, 7]
    assert d.total == 0
    assert not d.is_branch
    d2 = PointLabelData((Label(1), Label(2)))
    assert d2.total == 3 and d2.is_branch


def test_simple_arrangement_reports_nothing(fig5):
    arr, _, _ = fig5
    result = classify_arrangement(arr)
    assert result.verdicts == ()
    assert result.all_canonical


def line_through(p, q):
    (a1, b1, c1), (a2, b2, c2) = p.coords, q.coords
    return ProjLine(b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)


def random_one_triple_arrangement(rng):
    """Six generic lines plus a seventh through one existing crossing."""
    while True:
        lines = list(random_lines(rng, count=6))
        pts = line_intersections(tuple(lines))
        if len(pts) != 15 or any(len(v) != 2 for v in pts.values()):
            continue
        i, j = rng.sample(range(6), 2)
        p = intersect(lines[i], lines[j])
        coords = tuple(rng.randint(-30, 30) for _ in range(3))
        if all(v == 0 for v in coords):
            continue
        try:
            seventh = line_through(p, ProjPoint(*coords))
        except ValueError:
            continue
        if seventh in lines:
            continue
        lines.append(seventh)
        pts = line_intersections(tuple(lines))
        mults = sorted(len(v) for v in pts.values())
        if mults != [2] * 18 + [3]:
            continue
        codes = list(range(1, 8))
        rng.shuffle(codes)
        return LabeledArrangement(
            tuple(lines), Labeling(tuple(Label(c) for c in codes)))


def test_canonical_iff_valid_on_degenerate_arrangements():
    rng = random.Random(20260819)
    seen = set()
    for _ in range(50):
        arr = random_one_triple_arrangement(rng)
        result = classify_arrangement(arr)
        ok = bool(is_campedelli(arr))
        assert result.all_canonical == ok
        assert len(result.verdicts) == 1
        point, verdict = result.verdicts[0]
        codes = [arr.labeling[k].code for k in point.line_indices]
        assert verdict.kind == expected_kind(tuple(sorted(codes)))
        seen.add(result.all_canonical)
    assert seen == {True, False}
