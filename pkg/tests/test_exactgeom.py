"""Exact projective primitives: normalization, incidence, Gaussian rationals."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from campedelli.errors import IdenticalLines
from campedelli.exactgeom import (ComplexProjLine, GaussRational, ProjLine,
                                  ProjPoint, complex_intersect,
                                  conjugate_line, det3, format_rational,
                                  intersect, on_line, orientation, rational)

nonzero_triples = st.tuples(
    st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)
).filter(lambda t: any(t))


def test_primitive_normalization():
    assert ProjPoint(2, 4, 6).coords == (1, 2, 3)
    assert ProjPoint(-2, 4, -6).coords == (1, -2, 3)
    assert ProjPoint(0, -5, 10).coords == (0, 1, -2)
    assert ProjPoint(Fraction(1, 2), Fraction(1, 3), 0).coords == (3, 2, 0)


def test_point_accepts_tuple_and_args():
    assert ProjPoint((1, 2, 3)) == ProjPoint(1, 2, 3)
    assert ProjPoint("1/2", 1, 0) == ProjPoint(1, 2, 0)


def test_line_evaluation_is_exact_int():
    line = ProjLine(22060, -210, 31)
    p = ProjPoint(1, 105, 10)
    assert isinstance(line(p), int)
    assert line(p) == 22060 - 210 * 105 + 310


def test_intersect_on_both_lines():
    l1 = ProjLine(1, -1, 0)
    l2 = ProjLine(1, 0, -1)
    p = intersect(l1, l2)
    assert on_line(p, l1) and on_line(p, l2)
    assert p == ProjPoint(1, 1, 1)


def test_intersect_identical_lines_raises():
    with pytest.raises(IdenticalLines):
        intersect(ProjLine(1, 2, 3), ProjLine(2, 4, 6))


@given(nonzero_triples, nonzero_triples)
def test_intersect_incidence_property(a, b):
    l1, l2 = ProjLine(*a), ProjLine(*b)
    if l1 == l2:
        return
    p = intersect(l1, l2)
    assert l1(p) == 0 and l2(p) == 0


@given(nonzero_triples)
def test_normalization_idempotent(t):
    p = ProjPoint(*t)
    assert ProjPoint(*p.coords) == p
    assert p.coords[next(i for i, v in enumerate(p.coords) if v)] > 0


@given(nonzero_triples, nonzero_triples, nonzero_triples)
def test_det3_antisymmetry(a, b, c):
    assert det3(a, b, c) == -det3(b, a, c)
    assert det3(a, b, c) == det3(b, c, a)


def test_orientation_sign():
    a, b = ProjPoint(1, 0, 0), ProjPoint(1, 1, 0)
    assert orientation(a, b, ProjPoint(1, 0, 1)) > 0
    assert orientation(a, b, ProjPoint(1, 0, -1)) < 0
    assert orientation(a, b, ProjPoint(1, 2, 0)) == 0


def test_rational_parsing():
    assert rational("3/4") == Fraction(3, 4)
    assert rational(5) == Fraction(5)
    assert format_rational(Fraction(-7, 2)) == "-7/2"
    assert format_rational(Fraction(4)) == "4"


def test_gauss_arithmetic():
    i = GaussRational.of(0, 1)
    one = GaussRational.of(1)
    assert i * i == GaussRational.of(-1)
    z = GaussRational.of(3, -2)
    assert z * z.inverse() == one
    assert z.conjugate() == GaussRational.of(3, 2)
    assert (z * z.conjugate()).is_real()
    assert not z.is_real()


gauss = st.builds(GaussRational.of, st.integers(-9, 9), st.integers(-9, 9))


@given(gauss, gauss)
def test_gauss_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_complex_line_normalizes_leading_coefficient():
    line = ComplexProjLine(GaussRational.of(2), GaussRational.of(0, 2),
                           GaussRational.of(-4))
    assert line.coeffs[0] == GaussRational.of(1)
    assert line.coeffs[1] == GaussRational.of(0, 1)


def test_complex_line_real_round_trip():
    real = ProjLine(3, -1, 2)
    lifted = ComplexProjLine.from_real(real)
    assert lifted.is_real()
    assert lifted.to_real_line() == real


def test_conjugate_pair_meets_in_real_point():
    line = ComplexProjLine(GaussRational.of(-1, -1), GaussRational.of(1),
                           GaussRational.of(0, 1))
    bar = conjugate_line(line)
    assert bar != line
    coords = complex_intersect(line, bar)
    assert all(c.is_real() for c in coords)


def test_complex_intersect_leading_coordinate_one():
    l1 = ComplexProjLine(GaussRational.of(1), GaussRational.of(0, 1),
                         GaussRational.of(0))
    l2 = ComplexProjLine(GaussRational.of(0), GaussRational.of(1),
                         GaussRational.of(1))
    coords = complex_intersect(l1, l2)
    lead = next(c for c in coords if not c.is_zero())
    assert lead == GaussRational.of(1)
    assert l1(coords).is_zero() and l2(coords).is_zero()
