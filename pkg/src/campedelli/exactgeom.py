"""Exact projective geometry over the rationals and Gaussian rationals.

Points and lines of the real projective plane are stored as primitive
integer triples: the gcd of the three entries is 1 and the first nonzero
entry is positive.  That makes equality a plain tuple comparison and keeps
every downstream computation exact.  Lines over the Gaussian rationals are
normalized so that their first nonzero coefficient is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Tuple, Union

from .errors import IdenticalLines

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like '3/4' or '-2' to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as 'p/q', or just 'p' when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _primitive(triple: Tuple[int, int, int]) -> Tuple[int, int, int]:
    a, b, c = triple
    if a == 0 and b == 0 and c == 0:
        raise ValueError("zero triple does not define a projective element")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    for entry in (a, b, c):
        if entry != 0:
            if entry < 0:
                a, b, c = -a, -b, -c
            break
    return (a, b, c)


def _clear_denominators(coords: Iterable[RationalLike]) -> Tuple[int, int, int]:
    fracs = [rational(v) for v in coords]
    if len(fracs) != 3:
        raise ValueError("projective elements need exactly three coordinates")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = tuple(int(f * lcm) for f in fracs)
    return _primitive(ints)  # type: ignore[arg-type]


def _cross(u: Tuple[int, int, int], v: Tuple[int, int, int]) -> Tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Tuple[int, int, int], v: Tuple[int, int, int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u: Tuple[int, int, int], v: Tuple[int, int, int], w: Tuple[int, int, int]) -> int:
    """Determinant of the 3x3 integer matrix with rows u, v, w."""
    return _dot(u, _cross(v, w))


class _ProjTriple:
    """Shared storage for primitive integer triples."""

    __slots__ = ("coords",)

    def __init__(self, *coords: RationalLike):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        self.coords = _clear_denominators(coords)

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.coords == other.coords  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, idx: int) -> int:
        return self.coords[idx]

    def __repr__(self) -> str:
        name = type(self).__name__
        return f"{name}{self.coords}"


class ProjPoint(_ProjTriple):
    """A point of the real projective plane as a primitive integer triple."""


class ProjLine(_ProjTriple):
    """A line of the real projective plane, stored by its covector."""

    def __call__(self, point: ProjPoint) -> int:
        """Evaluate the covector on a point (exact integer)."""
        return _dot(self.coords, point.coords)


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Meet of two distinct lines, computed as a cross product."""
    if l1.coords == l2.coords:
        raise IdenticalLines(f"lines are equal: {l1!r}")
    return ProjPoint(*_cross(l1.coords, l2.coords))


def on_line(p: ProjPoint, l: ProjLine) -> bool:
    """Exact incidence test."""
    return _dot(p.coords, l.coords) == 0


def orientation(l1: ProjLine, l2: ProjLine, l3: ProjLine) -> int:
    """Sign of the determinant of the three covectors.

    Zero exactly when the lines are concurrent (or two of them equal).
    Alternating: swapping two arguments flips the sign.
    """
    d = det3(l1.coords, l2.coords, l3.coords)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class GaussRational:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: RationalLike, im: RationalLike = 0) -> "GaussRational":
        return GaussRational(rational(re), rational(im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def inverse(self) -> "GaussRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        return self * other.inverse()

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @staticmethod
    def from_json(obj: dict) -> "GaussRational":
        return GaussRational(rational(obj["re"]), rational(obj["im"]))


GR_ZERO = GaussRational(Fraction(0), Fraction(0))
GR_ONE = GaussRational(Fraction(1), Fraction(0))


class ComplexProjLine:
    """A line of the complex projective plane with Gaussian rational
    coefficients, normalized so the first nonzero coefficient is 1."""

    __slots__ = ("coeffs",)

    def __init__(self, *coeffs: GaussRational):
        if len(coeffs) == 1 and isinstance(coeffs[0], (tuple, list)):
            coeffs = tuple(coeffs[0])
        if len(coeffs) != 3:
            raise ValueError("a complex line needs exactly three coefficients")
        entries = []
        for c in coeffs:
            if isinstance(c, GaussRational):
                entries.append(c)
            else:
                entries.append(GaussRational.of(c))
        lead = None
        for c in entries:
            if not c.is_zero():
                lead = c
                break
        if lead is None:
            raise ValueError("zero coefficients do not define a line")
        inv = lead.inverse()
        self.coeffs = tuple(c * inv for c in entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ComplexProjLine) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{format_rational(c.re)}{'+' if c.im >= 0 else '-'}{format_rational(abs(c.im))}i"
            for c in self.coeffs
        )
        return f"ComplexProjLine({parts})"

    def __call__(self, point: Tuple[GaussRational, GaussRational, GaussRational]) -> GaussRational:
        total = GR_ZERO
        for c, x in zip(self.coeffs, point):
            total = total + c * x
        return total

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def to_real_line(self) -> ProjLine:
        if not self.is_real():
            raise ValueError("line has non-real coefficients")
        return ProjLine(*(c.re for c in self.coeffs))

    @staticmethod
    def from_real(line: ProjLine) -> "ComplexProjLine":
        return ComplexProjLine(*(GaussRational.of(c) for c in line.coords))


def conjugate_line(l: ComplexProjLine) -> ComplexProjLine:
    """Coefficient-wise complex conjugate; an involution on complex lines."""
    return ComplexProjLine(*(c.conjugate() for c in l.coeffs))


def complex_intersect(
    l1: ComplexProjLine, l2: ComplexProjLine
) -> Tuple[GaussRational, GaussRational, GaussRational]:
    """Meet of two distinct complex lines, normalized so the first nonzero
    coordinate is 1."""
    if l1 == l2:
        raise IdenticalLines(f"complex lines are equal: {l1!r}")
    a, b, c = l1.coeffs
    d, e, f = l2.coeffs
    raw = (b * f - c * e, c * d - a * f, a * e - b * d)
    lead = None
    for x in raw:
        if not x.is_zero():
            lead = x
            break
    assert lead is not None
    inv = lead.inverse()
    return tuple(x * inv for x in raw)  # type: ignore[return-value]
