"""Triangle reversal moves on equipped arrangements.

A move takes one side line of a triangle and replaces it with a nearby line
in the pencil spanned by that side and an auxiliary line, pushed exactly far
enough to cross the opposite corner and no other crossing point.  The whole
computation is rational, so every intermediate claim (only one triangle
reverses, signs persist, the new arrangement is simple) is checked exactly
rather than within tolerances.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import det3
from .census import class_key, def_invariant, DefInvariant
from .equipment import SignEquipment, SignTriple, propagate
from .errors import CannotPerturb, DependentSides, NotATriangle, NotSimple
from .exactgeom import ProjLine, ProjPoint, Rational
from .labeling import Label, LabeledArrangement


@dataclass(frozen=True)
class TriangleInfo:
    """A 3-gon, its side data, and the seven faces of its closed star."""

    face_id: int
    side_lines: Tuple[int, int, int]
    side_labels: Tuple[Label, Label, Label]
    dependent: bool
    star: Tuple[int, int, int, int, int, int, int]

    @property
    def vertex_neighbors(self) -> Tuple[int, int, int]:
        return (self.star[2], self.star[4], self.star[6])

    @property
    def edge_neighbors(self) -> Tuple[int, int, int]:
        return (self.star[1], self.star[3], self.star[5])


def find_triangles(arr: LabeledArrangement) -> List[TriangleInfo]:
    c = arr.complex
    if not c.is_simple:
        raise NotSimple("triangle inventory needs a simple arrangement")
    out: List[TriangleInfo] = []
    for face in c.faces:
        if face.n_sides != 3:
            continue
        labels = tuple(arr.labeling.labels[l] for l in face.side_lines)
        total = labels[0].code ^ labels[1].code ^ labels[2].code
        star: List[int] = [face.id]
        for nb, _ in c.boundary_alternation(face.id):
            star.append(nb)
        assert len(set(star)) == 7, "triangle star is not embedded"
        out.append(TriangleInfo(face.id, face.side_lines, labels,
                                total == 0, tuple(star)))
    return out


def triangle_by_face(arr: LabeledArrangement, face_id: int) -> TriangleInfo:
    for t in find_triangles(arr):
        if t.face_id == face_id:
            return t
    raise NotATriangle(f"face {face_id} is not a triangle")


def local_euler_zero(eq: SignEquipment, t: TriangleInfo) -> bool:
    """Whether contracting the triangle through a triple point keeps the
    real-part Euler characteristic at zero: no all-plus face among the
    triangle and its three corner neighbors."""
    if t.dependent:
        raise DependentSides(
            "the local Euler criterion needs independent side labels")
    return all(eq.codes[t.star[k]] != 0 for k in (0, 2, 4, 6))


def is_good_move(eq: SignEquipment, t: TriangleInfo) -> bool:
    """Moves that provably keep the diffeomorphism type: dependent sides and
    no all-plus face anywhere in the closed star."""
    if not t.dependent:
        return False
    return all(eq.codes[f] != 0 for f in t.star)


def digest(arr: LabeledArrangement, eq: SignEquipment) -> str:
    h = hashlib.sha256()
    for line, label in zip(arr.lines, arr.labeling.labels):
        h.update(repr((label.code, line.coords)).encode("ascii"))
    h.update(repr(eq.codes).encode("ascii"))
    return h.hexdigest()


@dataclass(frozen=True)
class MoveRecord:
    source_digest: str
    triangle_id: int
    moved_line: int
    pivot: Tuple[int, int, int]
    parameter: Rational
    arrangement: LabeledArrangement
    equipment: SignEquipment
    face_map: Dict[int, int]
    reversed_face: int

    @property
    def invariant(self) -> DefInvariant:
        return def_invariant(self.arrangement, self.equipment)


def _pivot_candidates():
    seen = set()
    for bound in (1, 2, 3):
        for cand in itertools.product(range(-bound, bound + 1), repeat=3):
            if cand in seen:
                continue
            seen.add(cand)
            if all(x == 0 for x in cand):
                continue
            g = 0
            for x in cand:
                g = _gcd(g, abs(x))
            if g != 1:
                continue
            first = next(x for x in cand if x != 0)
            if first < 0:
                continue
            yield cand


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _reduce(vec):
    g = 0
    for x in vec:
        g = _gcd(g, abs(x))
    return tuple(x // g for x in vec)


@dataclass(frozen=True)
class _SidePlan:
    moved_line: int
    pivot: Tuple[int, int, int]
    parameter: Fraction
    window: Optional[Fraction]  # None when unbounded past the corner

    def margin_key(self) -> Tuple:
        unbounded = self.window is None
        return (1 if unbounded else 0, self.window or Fraction(0))


def _finish_plan(line: ProjLine, mi: int, mu, v: ProjPoint,
                 others: Sequence[ProjPoint]) -> Optional[_SidePlan]:
    ell = line.coords
    if all(x == 0 for x in _cross(ell, mu)):
        return None
    mu_v = _dot(mu, v.coords)
    if mu_v == 0:
        return None
    base = ProjPoint(_cross(ell, mu))
    if any(base == w for w in others):
        return None
    t_v = Fraction(-line(v), mu_v)
    criticals = []
    for w in others:
        mu_w = _dot(mu, w.coords)
        if mu_w == 0:
            continue
        criticals.append(Fraction(-line(w), mu_w))
    if t_v > 0:
        if any(0 < tc <= t_v for tc in criticals):
            return None
        beyond = [tc for tc in criticals if tc > t_v]
        if beyond:
            u = min(beyond)
            return _SidePlan(mi, mu, (t_v + u) / 2, u - t_v)
        return _SidePlan(mi, mu, 2 * t_v, None)
    if any(t_v <= tc < 0 for tc in criticals):
        return None
    beyond = [tc for tc in criticals if tc < t_v]
    if beyond:
        u = max(beyond)
        return _SidePlan(mi, mu, (t_v + u) / 2, t_v - u)
    return _SidePlan(mi, mu, 2 * t_v, None)


def _construct_target(ell, v: ProjPoint, others: Sequence[ProjPoint]):
    """A covector separating the opposite corner from its current side while
    keeping every other crossing point on its side, or None if no line does.

    The admissible positions form an open polyhedral cone cut out by one
    strict inequality per crossing point.  The cone is pointed (the points
    are not collinear), so it is nonempty exactly when the sum of the rays of
    its closure satisfies every inequality strictly.
    """
    rows = []
    for w in others:
        s = 1 if _dot(ell, w.coords) > 0 else -1
        rows.append(tuple(s * x for x in w.coords))
    s = 1 if _dot(ell, v.coords) > 0 else -1
    rows.append(tuple(-s * x for x in v.coords))

    rays = set()
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            r = _cross(rows[i], rows[j])
            if all(x == 0 for x in r):
                continue
            for cand in (r, tuple(-x for x in r)):
                if all(_dot(row, cand) >= 0 for row in rows):
                    rays.add(_reduce(cand))
    if not rays:
        return None
    y = tuple(sum(col) for col in zip(*rays))
    if all(_dot(row, y) > 0 for row in rows):
        return _reduce(y)
    return None


def _plan_side(arr: LabeledArrangement, t: TriangleInfo, mi: int,
               vertices: Sequence[ProjPoint]) -> Optional[_SidePlan]:
    line = arr.lines[mi]
    corners = [v for v in vertices
               if all(arr.lines[l](v) == 0 for l in t.side_lines if l != mi)]
    opposite = [v for v in corners if line(v) != 0]
    assert len(opposite) == 1, "triangle corner structure broken"
    v = opposite[0]
    rest = [w for w in vertices if line(w) != 0]
    assert v in rest and len(rest) == len(vertices) - len(arr.lines) + 1
    others = [w for w in rest if w != v]

    for mu in _pivot_candidates():
        plan = _finish_plan(line, mi, mu, v, others)
        if plan is not None:
            return plan

    # no short pivot works, so aim the sweep at an explicit target position;
    # along the straight segment of covectors no other crossing changes side,
    # hence the segment itself is an admissible pencil interval
    y = _construct_target(line.coords, v, others)
    if y is None:
        return None
    mu = _reduce(tuple(a - b for a, b in zip(y, line.coords)))
    plan = _finish_plan(line, mi, mu, v, others)
    assert plan is not None, "constructed sweep must be admissible"
    return plan


def _sign_class(covectors, sample: ProjPoint) -> Tuple[int, ...]:
    sig = []
    for cov in covectors:
        val = sum(a * x for a, x in zip(cov, sample.coords))
        assert val != 0
        sig.append(1 if val > 0 else -1)
    neg = tuple(-s for s in sig)
    return min(tuple(sig), neg)


def reverse_triangle(arr: LabeledArrangement, eq: SignEquipment,
                     t: TriangleInfo) -> MoveRecord:
    """Reverse one triangle across its opposite corner.

    The moved side is the one with the widest safety window among the three,
    so follow-up moves stay numerically tame.  Every structural claim about
    the result is asserted before returning.
    """
    c = arr.complex
    if c.faces[t.face_id].n_sides != 3:
        raise NotATriangle(f"face {t.face_id} has {c.faces[t.face_id].n_sides} sides")
    vertices = [mp.point for mp in c.points]

    plans = []
    for mi in t.side_lines:
        plan = _plan_side(arr, t, mi, vertices)
        if plan is not None:
            plans.append(plan)
    if not plans:
        raise CannotPerturb("no admissible pencil for any side of the triangle")
    plans.sort(key=lambda p: (p.margin_key(), -p.moved_line), reverse=True)
    plan = plans[0]

    mi = plan.moved_line
    ell = arr.lines[mi].coords
    n, d = plan.parameter.numerator, plan.parameter.denominator
    raw = tuple(d * e + n * m for e, m in zip(ell, plan.pivot))
    new_lines = tuple(ProjLine(raw) if i == mi else line
                      for i, line in enumerate(arr.lines))
    new_arr = LabeledArrangement(new_lines, arr.labeling)
    new_c = new_arr.complex
    assert new_c.is_simple, "move produced a degenerate arrangement"

    # the multiset of orientation signs over line triples must change in the
    # one triple that forms the reversed triangle, and nowhere else
    old_cov = [line.coords for line in arr.lines]
    new_cov = [raw if i == mi else line.coords for i, line in enumerate(arr.lines)]
    flipped = [
        trip for trip in itertools.combinations(range(len(arr.lines)), 3)
        if (det3(*(old_cov[i] for i in trip)) > 0) !=
           (det3(*(new_cov[i] for i in trip)) > 0)
    ]
    assert flipped == [tuple(sorted(t.side_lines))], (
        f"chirotope changed at {flipped}, expected {sorted(t.side_lines)}")

    # face correspondence through unsigned sign vectors; the moved slot uses
    # the un-rescaled pencil combination so signs continue the original line
    old_cls = {_sign_class(old_cov, c.faces[f].interior_sample): f
               for f in range(c.n_faces)}
    new_cls = {_sign_class(new_cov, new_c.faces[f].interior_sample): f
               for f in range(new_c.n_faces)}
    assert len(old_cls) == c.n_faces and len(new_cls) == new_c.n_faces
    face_map: Dict[int, int] = {}
    old_left = []
    for cls, f in old_cls.items():
        f2 = new_cls.get(cls)
        if f2 is None:
            old_left.append(f)
        else:
            face_map[f] = f2
    new_left = [f for cls, f in new_cls.items() if cls not in old_cls]
    assert old_left == [t.face_id] and len(new_left) == 1, (
        "move changed more than the reversed triangle")
    reversed_face = new_left[0]
    assert new_c.faces[reversed_face].n_sides == 3
    assert sorted(new_c.faces[reversed_face].side_lines) == sorted(t.side_lines)
    face_map[t.face_id] = reversed_face

    # signs persist; the reversed triangle picks up the side-label sum
    shift = (t.side_labels[0].code ^ t.side_labels[1].code
             ^ t.side_labels[2].code)
    new_codes = [0] * new_c.n_faces
    for old_f, new_f in face_map.items():
        code = eq.codes[old_f]
        new_codes[new_f] = code ^ shift if old_f == t.face_id else code
    new_eq = SignEquipment(tuple(new_codes))
    anchor = face_map[next(f for f in range(c.n_faces) if f != t.face_id)]
    check = propagate(new_arr, anchor, SignTriple(new_eq.codes[anchor]))
    assert check.codes == new_eq.codes, "transported signs are inconsistent"

    return MoveRecord(
        source_digest=digest(arr, eq),
        triangle_id=t.face_id,
        moved_line=mi,
        pivot=plan.pivot,
        parameter=plan.parameter,
        arrangement=new_arr,
        equipment=new_eq,
        face_map=face_map,
        reversed_face=reversed_face,
    )


@dataclass(frozen=True)
class WitnessGroup:
    """Equipped arrangements reachable from one seed through good moves,
    bucketed by deformation invariant."""

    members: Tuple[Tuple[LabeledArrangement, SignEquipment], ...]
    buckets: Tuple[Tuple[str, Tuple[int, ...]], ...]

    @property
    def is_witness(self) -> bool:
        return len(self.buckets) > 1


def witness_search(arr: LabeledArrangement, eq: SignEquipment,
                   depth: int) -> WitnessGroup:
    """Explore good moves breadth-first and split the reachable states by
    deformation invariant.  More than one bucket certifies arrangements that
    share a diffeomorphism type but not a deformation class."""
    start_key = class_key(arr, eq)
    seen = {start_key}
    members: List[Tuple[LabeledArrangement, SignEquipment]] = [(arr, eq)]
    frontier = [(arr, eq)]
    for _ in range(depth):
        next_frontier = []
        for cur_arr, cur_eq in frontier:
            for t in find_triangles(cur_arr):
                if not is_good_move(cur_eq, t):
                    continue
                rec = reverse_triangle(cur_arr, cur_eq, t)
                key = class_key(rec.arrangement, rec.equipment)
                if key in seen:
                    continue
                seen.add(key)
                members.append((rec.arrangement, rec.equipment))
                next_frontier.append((rec.arrangement, rec.equipment))
        frontier = next_frontier
        if not frontier:
            break
    by_inv: Dict[str, List[int]] = {}
    for idx, (a, e) in enumerate(members):
        by_inv.setdefault(str(def_invariant(a, e)), []).append(idx)
    buckets = tuple(sorted((inv, tuple(idxs)) for inv, idxs in by_inv.items()))
    return WitnessGroup(tuple(members), buckets)
