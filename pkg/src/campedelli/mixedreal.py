"""Arrangements with three real lines and two conjugate complex pairs.

The seven labels split so that the real lines carry 110, 111 and 001 while
the complex pairs carry (100, 010) and (101, 011).  Each pair meets in a
real point, so after moving the real lines onto the coordinate axes the
whole configuration is controlled by where the two pair vertices sit among
the four triangles cut out by the real lines.  This module normalizes
coordinates, classifies the vertex placement, and computes the fixed-point
sets of the four real structures of the covering surface together with the
resulting deformation classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from .covering import GluedSurface, SurfaceTopology, glue_oracle
from .errors import (
    CampedelliError,
    Concurrent,
    Degenerate,
    DuplicateLine,
    NotSimple,
)
from .exactgeom import (
    ComplexProjLine,
    GaussRational,
    ProjLine,
    ProjPoint,
    complex_intersect,
    conjugate_line,
    det3,
)
from .labeling import Label, Renumbering, all_renumberings

# Label order used throughout this module: real carriers first, then the
# two pairs, each pair listed with its 1xx member first.
MIXED_LABELS: Tuple[Label, ...] = (
    Label(6),  # 110
    Label(7),  # 111
    Label(1),  # 001
    Label(4),  # 100
    Label(2),  # 010
    Label(5),  # 101
    Label(3),  # 011
)

# Boundary labels of each of the four triangles of the real picture.
QUADRANT_SIDE_LABELS: Tuple[Label, Label, Label] = (Label(6), Label(7), Label(1))

DEF_CLASS_NAMES = ("I+", "I-", "II", "III+", "III-")


def _gauss_det(u, v, w) -> GaussRational:
    c0 = v[1] * w[2] - v[2] * w[1]
    c1 = v[2] * w[0] - v[0] * w[2]
    c2 = v[0] * w[1] - v[1] * w[0]
    return u[0] * c0 + u[1] * c1 + u[2] * c2


def _adjugate(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


@dataclass(frozen=True)
class RealTransform:
    """Invertible real projective map, stored as an integer matrix.

    Points transform by matrix times column vector.  Line covectors
    transform through the adjugate, so everything stays exact.
    """

    rows: Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("a projective transform needs a 3x3 matrix")
        if det3(*self.rows) == 0:
            raise ValueError("transform matrix is singular")

    @staticmethod
    def identity() -> "RealTransform":
        return RealTransform(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def is_identity(self) -> bool:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a == e == i and a != 0 and b == c == d == f == g == h == 0

    def compose(self, other: "RealTransform") -> "RealTransform":
        rows = tuple(
            tuple(
                sum(self.rows[i][k] * other.rows[k][j] for k in range(3))
                for j in range(3)
            )
            for i in range(3)
        )
        return RealTransform(rows)  # type: ignore[arg-type]

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(
            *(sum(row[k] * p.coords[k] for k in range(3)) for row in self.rows)
        )

    def apply_line(self, line: ProjLine) -> ProjLine:
        adj = _adjugate(self.rows)
        return ProjLine(
            *(sum(line.coords[k] * adj[k][j] for k in range(3)) for j in range(3))
        )

    def apply_complex_line(self, line: ComplexProjLine) -> ComplexProjLine:
        adj = _adjugate(self.rows)
        new = []
        for j in range(3):
            acc = GaussRational.of(0)
            for k in range(3):
                acc = acc + line.coeffs[k] * GaussRational.of(adj[k][j])
            new.append(acc)
        return ComplexProjLine(*new)


@dataclass(frozen=True)
class MixedArrangement:
    """Seven lines: three real carriers and two conjugate pairs.

    The real lines carry the labels 110, 111 and 001.  The pair (100, 010)
    meets in one real vertex and the pair (101, 011) in another; both
    vertices always have integer coordinate representatives because the
    pair members are exact conjugates.
    """

    real_110: ProjLine
    real_111: ProjLine
    real_001: ProjLine
    cpx_100: ComplexProjLine
    cpx_010: ComplexProjLine
    cpx_101: ComplexProjLine
    cpx_011: ComplexProjLine

    def __post_init__(self):
        if conjugate_line(self.cpx_100) != self.cpx_010:
            raise CampedelliError("lines labeled 100 and 010 must be conjugate")
        if conjugate_line(self.cpx_101) != self.cpx_011:
            raise CampedelliError("lines labeled 101 and 011 must be conjugate")
        lines = self.complex_lines()
        for i in range(7):
            for j in range(i + 1, 7):
                if lines[i] == lines[j]:
                    raise DuplicateLine(
                        f"lines labeled {MIXED_LABELS[i]} and {MIXED_LABELS[j]} coincide"
                    )
        if det3(self.real_110.coords, self.real_111.coords, self.real_001.coords) == 0:
            raise Concurrent("the three real lines pass through one point")

    @staticmethod
    def from_half(
        real_110: ProjLine,
        real_111: ProjLine,
        real_001: ProjLine,
        half_100: ComplexProjLine,
        half_101: ComplexProjLine,
    ) -> "MixedArrangement":
        """Build from one member per pair; the conjugates are derived."""
        return MixedArrangement(
            real_110,
            real_111,
            real_001,
            half_100,
            conjugate_line(half_100),
            half_101,
            conjugate_line(half_101),
        )

    def complex_lines(self) -> Tuple[ComplexProjLine, ...]:
        """All seven lines over the complex plane, in MIXED_LABELS order."""
        return (
            ComplexProjLine.from_real(self.real_110),
            ComplexProjLine.from_real(self.real_111),
            ComplexProjLine.from_real(self.real_001),
            self.cpx_100,
            self.cpx_010,
            self.cpx_101,
            self.cpx_011,
        )

    def pair_vertex(self, pair: int) -> ProjPoint:
        """Real intersection point of pair 0 (100, 010) or pair 1 (101, 011).

        Two exact conjugate lines always meet in a point fixed by
        conjugation, so the normalized intersection coordinates come out
        with zero imaginary parts and clear to a primitive integer triple.
        """
        if pair == 0:
            coords = complex_intersect(self.cpx_100, self.cpx_010)
        elif pair == 1:
            coords = complex_intersect(self.cpx_101, self.cpx_011)
        else:
            raise ValueError(f"pair index must be 0 or 1, got {pair}")
        assert all(c.is_real() for c in coords), "pair vertex must be real"
        return ProjPoint(*(c.re for c in coords))

    def pair_vertices(self) -> Tuple[ProjPoint, ProjPoint]:
        return (self.pair_vertex(0), self.pair_vertex(1))


def transform_mixed(m: MixedArrangement, t: RealTransform) -> MixedArrangement:
    """Apply a real projective transform to every line of the arrangement."""
    return MixedArrangement(
        t.apply_line(m.real_110),
        t.apply_line(m.real_111),
        t.apply_line(m.real_001),
        t.apply_complex_line(m.cpx_100),
        t.apply_complex_line(m.cpx_010),
        t.apply_complex_line(m.cpx_101),
        t.apply_complex_line(m.cpx_011),
    )


def normalize(m: MixedArrangement) -> Tuple[MixedArrangement, RealTransform]:
    """Move the real lines onto the coordinate axes, first vertex first.

    The line labeled 110 becomes z0 = 0, which plays the line at infinity
    of the affine chart x = z1/z0, y = z2/z0; 111 becomes z1 = 0 and 001
    becomes z2 = 0.  The remaining freedom flips the affine axes and is
    spent moving the vertex of the first pair into the positive open
    quadrant whenever it avoids the axes.  Returns the normalized
    arrangement together with the transform that was applied; running it
    twice gives the identity transform the second time.
    """
    rows = (m.real_110.coords, m.real_111.coords, m.real_001.coords)
    if det3(*rows) == 0:
        raise Concurrent("the three real lines pass through one point")
    base = RealTransform(rows)
    v1 = base.apply_point(m.pair_vertex(0))
    if v1.coords[0] == 0:
        sx, sy = 1, 1
    else:
        # primitive triples have a positive leading entry, so the signs of
        # the last two coordinates are the affine quadrant signs
        sx = -1 if v1.coords[1] < 0 else 1
        sy = -1 if v1.coords[2] < 0 else 1
    t = RealTransform(((1, 0, 0), (0, sx, 0), (0, 0, sy))).compose(base)
    return transform_mixed(m, t), t


def _quadrant(v: ProjPoint) -> Optional[int]:
    """Quadrant 1..4 of a point in normalized coordinates, None on an axis.

    Quadrants are numbered 1 = (+,+), 2 = (+,-), 3 = (-,-), 4 = (-,+).
    """
    z0, x, y = v.coords
    if z0 == 0 or x == 0 or y == 0:
        return None
    if x > 0:
        return 1 if y > 0 else 2
    return 4 if y > 0 else 3


def _vertex_quadrant_counts(nm: MixedArrangement) -> Tuple[int, int, int, int]:
    counts = [0, 0, 0, 0]
    for v in nm.pair_vertices():
        q = _quadrant(v)
        if q is None:
            raise Degenerate(f"pair vertex {v!r} lies on a real line")
        counts[q - 1] += 1
    return tuple(counts)  # type: ignore[return-value]


def _require_campedelli_complexification(m: MixedArrangement) -> None:
    """Reject the walls where the type classification breaks down.

    Triple points whose labels do not sum to zero are fine: the covering
    just acquires canonical double points there.  A point on four or more
    lines, or a triple point with zero label sum, puts the arrangement
    outside the class the placement table covers.
    """
    lines = m.complex_lines()
    through: Dict[Tuple[GaussRational, ...], set] = {}
    for i, j in combinations(range(7), 2):
        pt = complex_intersect(lines[i], lines[j])
        through.setdefault(pt, set()).update((i, j))
    for pt, members in through.items():
        if len(members) < 3:
            continue
        names = ", ".join(str(MIXED_LABELS[i]) for i in sorted(members))
        if len(members) >= 4:
            raise NotSimple(f"lines labeled {names} meet at one point")
        total = 0
        for i in members:
            total ^= MIXED_LABELS[i].code
        if total == 0:
            raise Degenerate(
                f"triple point with zero label sum on lines {names}"
            )


@dataclass(frozen=True)
class MixedType:
    """Coarse placement type of the second pair vertex: I, II or III."""

    tag: str
    degenerate: bool = False

    def __post_init__(self):
        if self.degenerate:
            if self.tag != "":
                raise ValueError("degenerate placements carry no tag")
        elif self.tag not in ("I", "II", "III"):
            raise ValueError(f"unknown type tag: {self.tag!r}")

    def __str__(self) -> str:
        return "degenerate" if self.degenerate else self.tag


def classify_type(m: MixedArrangement) -> MixedType:
    """Type of the arrangement by the quadrant of the second pair vertex.

    Normalizes first, so the first vertex sits in quadrant 1.  The second
    vertex in the same quadrant gives type I, across one axis gives type
    II (quadrants 2 and 4 are swapped by the renumbering that exchanges
    the labels 001 and 111, so they give the same type), and the opposite
    quadrant gives type III.  A vertex on a real line has no type and
    raises Degenerate, as does a triple point with zero label sum; a
    point on four or more lines raises NotSimple.
    """
    nm, _ = normalize(m)
    v1, v2 = nm.pair_vertices()
    q1 = _quadrant(v1)
    q2 = _quadrant(v2)
    if q1 is None or q2 is None:
        raise Degenerate("a pair vertex lies on a real line")
    _require_campedelli_complexification(nm)
    assert q1 == 1, "normalization puts the first pair vertex in quadrant 1"
    tag = {1: "I", 2: "II", 3: "III", 4: "II"}[q2]
    return MixedType(tag)


@dataclass(frozen=True)
class RealStructureTag:
    """One of the four lifts of the plane conjugation, named by two signs.

    The first sign is toggled by conjugating with the deck element of
    100, which never changes fixed-point topology; the second sign is
    toggled by composing with the deck element of 001 and determines the
    conjugacy class.  Class "c+" structures fix surface points over
    quadrants 1 and 3, class "c-" structures over quadrants 2 and 4.
    """

    name: str

    def __post_init__(self):
        if self.name not in ("c++", "c-+", "c+-", "c--"):
            raise ValueError(f"unknown real structure tag: {self.name!r}")

    @property
    def conjugacy_class(self) -> str:
        return "c+" if self.name[2] == "+" else "c-"

    @property
    def partner_class(self) -> str:
        return "c-" if self.conjugacy_class == "c+" else "c+"

    def __str__(self) -> str:
        return self.name


REAL_STRUCTURE_TAGS: Tuple[RealStructureTag, ...] = tuple(
    RealStructureTag(n) for n in ("c++", "c-+", "c+-", "c--")
)


def fix_topology(m: MixedArrangement, s: RealStructureTag) -> List[SurfaceTopology]:
    """Fixed-point set of a real structure, one entry per component.

    The fixed set lies over two opposite quadrants: 1 and 3 for class
    "c+", 2 and 4 for class "c-", listed in that order.  Over a quadrant
    containing n of the two pair vertices the fixed part is a connected
    non-orientable surface of Euler characteristic 1 - 2n.  Every closed
    form is cross-checked against the explicit gluing oracle: the full
    preimage of a quadrant is two homeomorphic halves, one per structure
    in the class.
    """
    nm, _ = normalize(m)
    counts = _vertex_quadrant_counts(nm)
    quads = (1, 3) if s.conjugacy_class == "c+" else (2, 4)
    out = []
    for q in quads:
        n = counts[q - 1]
        piece = SurfaceTopology(1, 1 - 2 * n, False)
        oracle = glue_oracle(
            GluedSurface(QUADRANT_SIDE_LABELS, (Label(6),) * n)
        )
        assert oracle.components == 2, "quadrant preimage must have two halves"
        assert oracle.euler_per_component == piece.euler_per_component
        assert not oracle.orientable
        out.append(piece)
    return out


@dataclass(frozen=True)
class MixedDefClass:
    """Deformation class: one of I+, I-, II, III+ and III-."""

    name: str

    def __post_init__(self):
        if self.name not in DEF_CLASS_NAMES:
            raise ValueError(f"unknown deformation class: {self.name!r}")

    @property
    def type_tag(self) -> str:
        return self.name.rstrip("+-")

    @property
    def structure_sign(self) -> Optional[str]:
        """Sign of the structure class, None for the merged type II."""
        return self.name[-1] if self.name[-1] in "+-" else None

    def __str__(self) -> str:
        return self.name


def def_class(m: MixedArrangement, s: RealStructureTag) -> MixedDefClass:
    """Deformation class of the pair (arrangement, real structure).

    Types I and III keep the sign of the structure class.  Type II merges
    both signs into one class: re-normalizing after the renumbering that
    swaps the two pairs flips one affine axis, which trades the quadrant
    pair (1,3) for (2,4) and hence the two structure classes.
    """
    t = classify_type(m)
    if t.tag == "II":
        return MixedDefClass("II")
    sign = "+" if s.conjugacy_class == "c+" else "-"
    return MixedDefClass(t.tag + sign)


def class_invariant(
    m: MixedArrangement, s: RealStructureTag
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Ordered pair of fixed-set Euler multisets, chosen structure first.

    The second entry is the fixed-set multiset of the other conjugacy
    class.  All five deformation classes produce distinct pairs, so this
    separates them completely.
    """
    own = tuple(sorted(t.euler_per_component for t in fix_topology(m, s)))
    other = RealStructureTag("c+-" if s.conjugacy_class == "c+" else "c++")
    partner = tuple(
        sorted(t.euler_per_component for t in fix_topology(m, other))
    )
    return own, partner


# How many of the two pair vertices land in each quadrant, by type, once
# the first vertex is normalized into quadrant 1.  For type II the second
# vertex may equally sit in quadrant 4; only the unordered content of the
# diagonal pairs {1,3} and {2,4} matters for fixed sets, so one
# representative per type suffices here.
_TYPE_QUADRANT_COUNTS: Dict[str, Tuple[int, int, int, int]] = {
    "I": (2, 0, 0, 0),
    "II": (1, 1, 0, 0),
    "III": (1, 0, 1, 0),
}


def class_fixed_euler(c: MixedDefClass) -> Tuple[int, ...]:
    """Euler multiset of the fixed set of any representative of a class."""
    counts = _TYPE_QUADRANT_COUNTS[c.type_tag]
    quads = (2, 4) if c.structure_sign == "-" else (1, 3)
    return tuple(sorted(1 - 2 * counts[q - 1] for q in quads))


@dataclass(frozen=True)
class DifReport:
    """Partition of deformation classes by fixed-set topology.

    groups pairs each distinct Euler multiset with the classes sharing
    it.  The two reported_* fields carry previously published claims that
    are kept for comparison only and take no part in the computation: a
    class count of four and an identification of I- with III+.
    """

    groups: Tuple[Tuple[Tuple[int, ...], Tuple[MixedDefClass, ...]], ...]
    reported_class_count: int = 4
    reported_identification: str = "I- ~ III+"

    @property
    def computed_class_count(self) -> int:
        return len(self.groups)

    def lines(self) -> List[str]:
        out = []
        for eulers, classes in self.groups:
            surf = ", ".join(f"chi={e}" for e in eulers)
            names = ", ".join(c.name for c in classes)
            out.append(f"fixed set [{surf}] (non-orientable): {names}")
        out.append(
            f"computed groups: {self.computed_class_count}; "
            f"reported class count: {self.reported_class_count}"
        )
        out.append(f"reported identification: {self.reported_identification}")
        return out


def dif_report(classes: Iterable[MixedDefClass]) -> DifReport:
    """Group deformation classes whose fixed-set topologies coincide.

    All fixed components are non-orientable, so the unordered list of
    Euler characteristics determines the fixed set up to homeomorphism.
    """
    buckets: Dict[Tuple[int, ...], List[MixedDefClass]] = {}
    seen = sorted(set(classes), key=lambda c: DEF_CLASS_NAMES.index(c.name))
    for c in seen:
        buckets.setdefault(class_fixed_euler(c), []).append(c)
    ordered = tuple(
        (key, tuple(val)) for key, val in sorted(buckets.items())
    )
    return DifReport(ordered)


def pair_quadratic(line: ComplexProjLine) -> Tuple[int, ...]:
    """Coefficients of the real quadratic form line times its conjugate.

    Returned in the order z0^2, z1^2, z2^2, z0*z1, z0*z2, z1*z2, cleared
    to a primitive integer tuple by a positive rational scale, so the
    form stays nonnegative on real points.  The product of the two
    members of a conjugate pair is the real quadric vanishing on the
    pair, which is what the covering equations use.
    """
    a = line.coeffs
    b = tuple(c.conjugate() for c in a)

    def coeff(j: int, k: int) -> Fraction:
        val = a[j] * b[j] if j == k else a[j] * b[k] + a[k] * b[j]
        assert val.im == 0, "a form times its conjugate is real"
        return val.re

    fracs = [
        coeff(0, 0),
        coeff(1, 1),
        coeff(2, 2),
        coeff(0, 1),
        coeff(0, 2),
        coeff(1, 2),
    ]
    from math import gcd

    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    assert g > 0, "a conjugate pair with distinct members gives a nonzero form"
    return tuple(x // g for x in ints)


# The label swap induced by conjugation: 100 and 010 trade places, as do
# 101 and 011, while the real labels stay put.
CONJUGATION_RENUMBERING = Renumbering((2, 4, 1))


def structure_preserving_renumberings() -> List[Renumbering]:
    """Renumberings carrying mixed arrangements to mixed arrangements.

    These are exactly the renumberings commuting with the conjugation
    swap: real labels go to real labels and pairs go to pairs.  There are
    eight of them.
    """
    sigma = CONJUGATION_RENUMBERING
    out = [
        r
        for r in all_renumberings()
        if all(
            r.apply_code(sigma.apply_code(c)) == sigma.apply_code(r.apply_code(c))
            for c in range(1, 8)
        )
    ]
    assert len(out) == 8
    return out


def apply_renumbering_mixed(m: MixedArrangement, r: Renumbering) -> MixedArrangement:
    """Relabel the lines through a structure preserving renumbering."""
    inv = r.inverse()
    by_code = {
        lab.code: line for lab, line in zip(MIXED_LABELS, m.complex_lines())
    }

    def pick(code: int) -> ComplexProjLine:
        return by_code[inv.apply_code(code)]

    reals = {}
    for code in (6, 7, 1):
        src = pick(code)
        if not src.is_real():
            raise CampedelliError(
                f"renumbering {r!r} does not preserve the mixed structure"
            )
        reals[code] = src.to_real_line()
    return MixedArrangement(
        reals[6], reals[7], reals[1], pick(4), pick(2), pick(5), pick(3)
    )
