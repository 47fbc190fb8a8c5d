"""Labels over the eight-element group, renumberings, validity checks."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from campedelli.errors import DuplicateLine
from campedelli.exactgeom import ProjLine
from campedelli.labeling import (IDENTITY_RENUMBERING, Label,
                                 LabeledArrangement, Labeling, Renumbering,
                                 all_renumberings, is_campedelli, label_sum,
                                 span)

codes = st.integers(1, 7)


def test_label_parse_str_round_trip():
    for code in range(1, 8):
        lab = Label(code)
        assert Label.parse(str(lab)) == lab
    assert str(Label(4)) == "100"
    assert str(Label(1)) == "001"
    assert str(Label(6)) == "110"


def test_label_rejects_zero():
    with pytest.raises(ValueError):
        Label(0)
    with pytest.raises(ValueError):
        Label.parse("000")


def test_label_sum_is_xor():
    labs = [Label(4), Label(2), Label(6)]
    assert label_sum(labs) == 0
    assert label_sum([Label(4), Label(2)]) == 6


def test_span_dimensions():
    dim, _ = span([Label(4), Label(2), Label(1)])
    assert dim == 3
    dim, _ = span([Label(4), Label(2), Label(6)])
    assert dim == 2
    dim, _ = span([Label(5), Label(5)])
    assert dim == 1


def test_renumbering_group_size():
    group = all_renumberings()
    assert len(group) == 168
    assert len({r.basis_images for r in group}) == 168
    assert IDENTITY_RENUMBERING in group


def test_renumbering_compose_inverse():
    group = all_renumberings()
    r = group[17]
    s = group[101]
    assert r.compose(r.inverse()).is_identity()
    both = r.compose(s)
    for x in range(8):
        assert both.apply_code(x) == r.apply_code(s.apply_code(x))


@given(st.permutations([4, 2, 1]))
def test_renumbering_is_linear(basis):
    r = Renumbering(tuple(basis))
    for x in range(8):
        for y in range(8):
            assert r.apply_code(x ^ y) == r.apply_code(x) ^ r.apply_code(y)


@given(codes, codes, codes)
def test_renumbering_preserves_zero_sums(a, b, c):
    r = Renumbering((2, 1, 4))
    total = a ^ b ^ c
    image = r.apply_code(a) ^ r.apply_code(b) ^ r.apply_code(c)
    assert (total == 0) == (image == 0)


def _arr(lines, codes):
    return LabeledArrangement(
        tuple(ProjLine(*c) for c in lines),
        Labeling(tuple(Label(c) for c in codes)))


GENERIC = [(1, 2, 5), (1, -3, 7), (2, 11, -1), (1, 13, 17)]


def test_is_campedelli_flags_zero_sum_triple():
    lines = [(0, 1, 0), (0, 0, 1), (0, 1, 1)] + GENERIC
    arr = _arr(lines, [4, 2, 6, 5, 1, 7, 3])
    report = is_campedelli(arr)
    assert not report
    kinds = {v.kind for v in report.violations}
    assert kinds == {"zero-sum-triple"}
    v = report.violations[0]
    assert v.point.coords == (1, 0, 0)
    assert set(v.line_indices) == {0, 1, 2}


def test_is_campedelli_allows_branch_triple():
    lines = [(0, 1, 0), (0, 0, 1), (0, 1, 1)] + GENERIC
    arr = _arr(lines, [4, 2, 5, 6, 1, 7, 3])
    assert is_campedelli(arr)


def test_is_campedelli_flags_quadruple_point():
    lines = [(0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 1, -1),
             (1, 2, 5), (1, -3, 7), (2, 11, -1)]
    arr = _arr(lines, [4, 2, 6, 5, 1, 7, 3])
    report = is_campedelli(arr)
    assert not report
    assert any(v.kind == "multiplicity" for v in report.violations)


def test_duplicate_lines_raise():
    lines = [(1, 2, 5), (2, 4, 10), (0, 0, 1), (0, 1, 1), (0, 1, -1),
             (1, -3, 7), (2, 11, -1)]
    arr = _arr(lines, [4, 2, 6, 5, 1, 7, 3])
    with pytest.raises(DuplicateLine):
        is_campedelli(arr)


def test_fig5_is_valid(fig5):
    arr, _, _ = fig5
    assert arr.labeling.is_bijective
    assert bool(is_campedelli(arr))
