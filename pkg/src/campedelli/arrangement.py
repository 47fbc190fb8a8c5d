"""Cell complexes of line arrangements in the real projective plane.

The complex is built exactly: lines are lifted to great circles on the
sphere, circle vertices are sorted by exact sign comparisons, faces are
traced through the rotation system, and the antipodal quotient produces the
projective cell complex.  Face ids are canonical: faces are sorted by the
lexicographically smallest encoding of their boundary walk, so the same
line list always yields the same numbering.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import Degenerate, DuplicateLine, NotSimple
from .exactgeom import ProjLine, ProjPoint, det3, intersect

Vec = Tuple[int, int, int]


def _neg(v: Vec) -> Vec:
    return (-v[0], -v[1], -v[2])


def _cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Vec, v: Vec) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _tangent_frame(axis: Vec) -> Tuple[Vec, Vec]:
    """Two independent vectors spanning the plane orthogonal to axis,
    forming a right-handed frame (b1, b2, axis)."""
    for k in range(3):
        unit = tuple(1 if i == k else 0 for i in range(3))
        b1 = _cross(axis, unit)
        if b1 != (0, 0, 0):
            return b1, _cross(axis, b1)
    raise AssertionError("zero axis")


def _quadrant(a: int, b: int) -> int:
    if a > 0 and b >= 0:
        return 0
    if a <= 0 and b > 0:
        return 1
    if a < 0 and b <= 0:
        return 2
    if a >= 0 and b < 0:
        return 3
    raise AssertionError("zero direction in angular sort")


def _angular_cmp(p1: Tuple[int, int], p2: Tuple[int, int]) -> int:
    q1, q2 = _quadrant(*p1), _quadrant(*p2)
    if q1 != q2:
        return -1 if q1 < q2 else 1
    cross = p1[0] * p2[1] - p1[1] * p2[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    raise AssertionError("coincident directions in angular sort")


def line_intersections(lines: Sequence[ProjLine]) -> Dict[ProjPoint, Tuple[int, ...]]:
    """All pairwise intersection points, mapped to sorted line index tuples."""
    buckets: Dict[ProjPoint, Set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i] == lines[j]:
                raise DuplicateLine(f"line {i} equals line {j}: {lines[i]!r}")
            p = intersect(lines[i], lines[j])
            buckets.setdefault(p, set()).update((i, j))
    return {p: tuple(sorted(s)) for p, s in buckets.items()}


@dataclass(frozen=True)
class MultiplePoint:
    """An intersection point together with the lines through it."""

    point: ProjPoint
    line_indices: Tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.line_indices)


@dataclass(frozen=True)
class TypeVector:
    """Face counts by side number, from triangles up to n-gons."""

    counts: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.counts) + ")"

    def __getitem__(self, n_sides: int) -> int:
        return self.counts[n_sides - 3]

    def __iter__(self):
        return iter(self.counts)


@dataclass
class Polygon:
    """One face of the projective complex.

    Sides and corners are cyclic and aligned: corner j sits between side j
    and side j+1.  The interior sample is an exact rational point strictly
    inside the face.
    """

    id: int
    side_lines: Tuple[int, ...]
    side_edges: Tuple[int, ...]
    corner_vertices: Tuple[int, ...]
    interior_sample: ProjPoint

    @property
    def n_sides(self) -> int:
        return len(self.side_lines)

    def __repr__(self) -> str:
        return f"Polygon(id={self.id}, lines={self.side_lines})"


@dataclass
class Automorphism:
    """A cell-complex automorphism recorded by its cell permutations."""

    face_perm: Tuple[int, ...]
    edge_perm: Tuple[int, ...]
    vertex_perm: Tuple[int, ...]
    line_perm: Tuple[int, ...]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.face_perm)) and all(
            i == j for i, j in enumerate(self.line_perm)
        )


class CellComplex:
    """Projective cell complex of a line arrangement.

    Built by :func:`build_complex`; not meant to be constructed directly.
    """

    def __init__(self, lines: Sequence[ProjLine]):
        self.lines: Tuple[ProjLine, ...] = tuple(lines)
        if len(self.lines) < 3:
            raise Degenerate("an arrangement needs at least three lines")
        self._build()

    # ------------------------------------------------------------------
    # construction

    def _build(self) -> None:
        lines = self.lines
        inter = line_intersections(lines)
        self.points: List[MultiplePoint] = [
            MultiplePoint(p, idxs) for p, idxs in sorted(inter.items(), key=lambda kv: kv[0].coords)
        ]
        self.is_simple: bool = all(mp.multiplicity == 2 for mp in self.points)

        on_line: Dict[int, List[ProjPoint]] = {i: [] for i in range(len(lines))}
        for mp in self.points:
            for i in mp.line_indices:
                on_line[i].append(mp.point)
        if any(len(pts) < 2 for pts in on_line.values()):
            raise Degenerate("all lines pass through a single point")

        # spherical vertices: both representatives of every projective point
        vert_coords: List[Vec] = []
        vert_index: Dict[Vec, int] = {}
        antipode: List[int] = []
        proj_of_vert: List[int] = []
        for pid, mp in enumerate(self.points):
            plus = mp.point.coords
            minus = _neg(plus)
            for rep in (plus, minus):
                vert_index[rep] = len(vert_coords)
                vert_coords.append(rep)
                proj_of_vert.append(pid)
            antipode.extend((len(vert_coords) - 1, len(vert_coords) - 2))
        self._vert_coords = vert_coords
        self._antipode = antipode
        self._proj_of_vert = proj_of_vert

        # darts: consecutive vertex pairs along each great circle
        darts: List[Tuple[int, int, int]] = []  # (line, tail, head)
        dart_index: Dict[Tuple[int, int, int], int] = {}
        for li, covector in enumerate(lines):
            cycle = self._sort_on_circle(covector.coords, on_line[li], vert_index)
            m = len(cycle)
            for t in range(m):
                a, b = cycle[t], cycle[(t + 1) % m]
                for d in ((li, a, b), (li, b, a)):
                    if d not in dart_index:
                        dart_index[d] = len(darts)
                        darts.append(d)
        self._darts = darts
        self._dart_index = dart_index
        rev = [dart_index[(li, b, a)] for (li, a, b) in darts]
        self._rev = rev

        # rotation system: outgoing darts counterclockwise around each vertex
        outgoing: Dict[int, List[int]] = {v: [] for v in range(len(vert_coords))}
        for did, (li, a, b) in enumerate(darts):
            outgoing[a].append(did)
        rot_next: List[int] = [0] * len(darts)
        rot_pos: List[int] = [0] * len(darts)
        self._rot_order: List[List[int]] = [[] for _ in range(len(vert_coords))]
        for v, dart_ids in outgoing.items():
            axis = vert_coords[v]
            b1, b2 = _tangent_frame(axis)

            def direction(did: int) -> Tuple[int, int]:
                li, a, b = darts[did]
                tangent = _cross(lines[li].coords, axis)
                side = det3(lines[li].coords, axis, vert_coords[b])
                assert side != 0, "consecutive circle vertices are antipodal"
                if side < 0:
                    tangent = _neg(tangent)
                return (_dot(tangent, b1), _dot(tangent, b2))

            order = sorted(dart_ids, key=functools.cmp_to_key(
                lambda x, y: _angular_cmp(direction(x), direction(y))))
            self._rot_order[v] = order
            for pos, did in enumerate(order):
                rot_next[did] = order[(pos + 1) % len(order)]
                rot_pos[did] = pos
        self._rot_pos = rot_pos

        # face tracing on the sphere
        next_dart = [rot_next[rev[d]] for d in range(len(darts))]
        self._next_dart = next_dart
        sface_of_dart = [-1] * len(darts)
        sfaces: List[List[int]] = []
        for d0 in range(len(darts)):
            if sface_of_dart[d0] >= 0:
                continue
            cycle = []
            d = d0
            while sface_of_dart[d] < 0:
                sface_of_dart[d] = len(sfaces)
                cycle.append(d)
                d = next_dart[d]
            assert d == d0, "face tracing did not close up"
            sfaces.append(cycle)
        v_s, e_s, f_s = len(vert_coords), len(darts) // 2, len(sfaces)
        assert v_s - e_s + f_s == 2, f"spherical Euler check failed: {v_s}-{e_s}+{f_s}"
        self._sfaces = sfaces
        self._sface_of_dart = sface_of_dart

        # antipodal pairing of spherical faces
        def iota(did: int) -> int:
            li, a, b = darts[did]
            return dart_index[(li, antipode[a], antipode[b])]

        self._iota = iota
        # the antipodal map reverses orientation, so the image region is
        # traced by the reversed image darts
        partner = [sface_of_dart[rev[iota(cycle[0])]] for cycle in sfaces]
        for sf, pf in enumerate(partner):
            assert pf != sf, "a face is antipodally self-paired"
            assert partner[pf] == sf

        # projective edges: orbit of a dart under reversal and the antipode
        edge_of_dart = [-1] * len(darts)
        edge_keys: List[Tuple] = []
        for d in range(len(darts)):
            if edge_of_dart[d] >= 0:
                continue
            orbit = (d, rev[d], iota(d), rev[iota(d)])
            key = min(
                (darts[x][0], vert_coords[darts[x][1]], vert_coords[darts[x][2]])
                for x in orbit
            )
            eid = len(edge_keys)
            edge_keys.append(key)
            for x in orbit:
                edge_of_dart[x] = eid
        edge_order = sorted(range(len(edge_keys)), key=lambda e: edge_keys[e])
        edge_rank = {old: new for new, old in enumerate(edge_order)}
        self._edge_of_dart = [edge_rank[e] for e in edge_of_dart]
        self.n_edges = len(edge_keys)
        self._line_of_edge = [0] * self.n_edges
        for d, (li, _, _) in enumerate(darts):
            self._line_of_edge[self._edge_of_dart[d]] = li

        # projective faces: canonical boundary words pick ids and representatives
        def cycle_key(cycle: List[int]) -> Tuple:
            words = []
            m = len(cycle)
            for start in range(m):
                word = tuple(
                    (darts[cycle[(start + t) % m]][0],
                     vert_coords[darts[cycle[(start + t) % m]][1]],
                     vert_coords[darts[cycle[(start + t) % m]][2]])
                    for t in range(m)
                )
                words.append(word)
            return min(words)

        skeys = [cycle_key(cycle) for cycle in sfaces]
        pairs = sorted({(sf, partner[sf]) if skeys[sf] <= skeys[partner[sf]]
                        else (partner[sf], sf) for sf in range(f_s)},
                       key=lambda pair: skeys[pair[0]])
        self.n_faces = len(pairs)
        self.n_vertices = len(self.points)
        face_of_sface = [-1] * f_s
        for fid, (rep, other) in enumerate(pairs):
            face_of_sface[rep] = fid
            face_of_sface[other] = fid
        self._face_of_sface = face_of_sface
        self._rep_sface = [rep for rep, _ in pairs]
        self._face_of_dart = [face_of_sface[sface_of_dart[d]] for d in range(len(darts))]
        assert self.n_vertices - self.n_edges + self.n_faces == 1, "projective Euler check failed"

        # polygons with canonical walks and exact interior samples
        self.faces: List[Polygon] = []
        for fid, (rep, _) in enumerate(pairs):
            cycle = self._align_cycle(sfaces[rep], skeys[rep])
            side_lines = tuple(darts[d][0] for d in cycle)
            side_edges = tuple(self._edge_of_dart[d] for d in cycle)
            corners = tuple(proj_of_vert[darts[d][2]] for d in cycle)
            total = (0, 0, 0)
            for d in cycle:
                total = tuple(x + y for x, y in zip(total, vert_coords[darts[d][1]]))
            self.faces.append(Polygon(
                id=fid,
                side_lines=side_lines,
                side_edges=side_edges,
                corner_vertices=corners,
                interior_sample=ProjPoint(*total),
            ))
        self._rep_cycles = [self._align_cycle(sfaces[rep], skeys[rep]) for rep, _ in pairs]

        # interior sign classes, for exact point location
        self._class_of_face: Dict[Tuple[int, ...], int] = {}
        for face in self.faces:
            cls = self._sign_class(face.interior_sample)
            assert cls not in self._class_of_face, "two faces share a sign class"
            self._class_of_face[cls] = face.id

        # crossing parity masks relative to face 0, used by sign propagation
        mask = [-1] * self.n_faces
        mask[0] = 0
        queue = [0]
        while queue:
            fid = queue.pop()
            for pos, li in enumerate(self.faces[fid].side_lines):
                nb = self.edge_neighbor(fid, pos)
                if mask[nb] < 0:
                    mask[nb] = mask[fid] ^ (1 << li)
                    queue.append(nb)
        assert all(m >= 0 for m in mask)
        self._mask = mask

    def _sort_on_circle(
        self, covector: Vec, pts: List[ProjPoint], vert_index: Dict[Vec, int]
    ) -> List[int]:
        """Cyclically ordered spherical vertex ids on the great circle."""
        b1, b2 = _tangent_frame(covector)
        reps: List[Vec] = []
        for p in pts:
            reps.append(p.coords)
            reps.append(_neg(p.coords))

        def direction(v: Vec) -> Tuple[int, int]:
            return (_dot(v, b1), _dot(v, b2))

        ordered = sorted(reps, key=functools.cmp_to_key(
            lambda x, y: _angular_cmp(direction(x), direction(y))))
        return [vert_index[v] for v in ordered]

    def _align_cycle(self, cycle: List[int], key: Tuple) -> List[int]:
        """Rotate a dart cycle so it starts at the canonical position."""
        darts = self._darts
        coords = self._vert_coords
        m = len(cycle)
        for start in range(m):
            word = tuple(
                (darts[cycle[(start + t) % m]][0],
                 coords[darts[cycle[(start + t) % m]][1]],
                 coords[darts[cycle[(start + t) % m]][2]])
                for t in range(m)
            )
            if word == key:
                return [cycle[(start + t) % m] for t in range(m)]
        raise AssertionError("canonical rotation not found")

    def _sign_class(self, p: ProjPoint) -> Tuple[int, ...]:
        signs = []
        for line in self.lines:
            val = line(p)
            if val == 0:
                raise Degenerate(f"point {p!r} lies on {line!r}")
            signs.append(1 if val > 0 else -1)
        tup = tuple(signs)
        neg = tuple(-s for s in signs)
        return min(tup, neg)

    # ------------------------------------------------------------------
    # queries

    @property
    def multiple_points(self) -> List[MultiplePoint]:
        return [mp for mp in self.points if mp.multiplicity >= 3]

    def euler(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def locate(self, p: ProjPoint) -> int:
        """Face id containing a point that lies on no line of the arrangement."""
        cls = self._sign_class(p)
        fid = self._class_of_face.get(cls)
        assert fid is not None, "sign class matches no face"
        return fid

    def edge_neighbor(self, face_id: int, side_pos: int) -> int:
        d = self._rep_cycles[face_id][side_pos]
        return self._face_of_dart[self._rev[d]]

    def vertex_neighbor(self, face_id: int, corner_pos: int) -> int:
        """Face diametrically across the corner vertex.

        Corner corner_pos sits between side corner_pos and the next side.
        """
        cycle = self._rep_cycles[face_id]
        d_out = cycle[(corner_pos + 1) % len(cycle)]
        v = self._darts[d_out][1]
        order = self._rot_order[v]
        pos = self._rot_pos[d_out]
        across = order[(pos + len(order) // 2) % len(order)]
        return self._face_of_dart[across]

    def boundary_alternation(self, face_id: int) -> List[Tuple[int, bool]]:
        """Boundary walk as (neighbor face id, is_vertex_neighbor) pairs.

        Entry 2j is the neighbor across side j, entry 2j+1 the neighbor
        across the corner after side j.
        """
        face = self.faces[face_id]
        out: List[Tuple[int, bool]] = []
        for j in range(face.n_sides):
            out.append((self.edge_neighbor(face_id, j), False))
            out.append((self.vertex_neighbor(face_id, j), True))
        return out

    def crossing_mask(self, face_id: int) -> int:
        """Bitmask of lines crossed on one dual path from face 0.

        Well defined up to adding the all-lines mask; differences of masks
        along a fixed path system are what sign propagation needs.
        """
        return self._mask[face_id]

    def spherical_counts(self) -> Tuple[int, int, int]:
        return (len(self._vert_coords), len(self._darts) // 2, len(self._sfaces))


def build_complex(lines: Sequence[ProjLine]) -> CellComplex:
    """Exact projective cell complex of a line arrangement."""
    return CellComplex(lines)


def type_vector(c: CellComplex) -> TypeVector:
    """Face counts (m3, m4, ..., mn) of a simple arrangement."""
    if not c.is_simple:
        raise NotSimple("type vector needs a simple arrangement")
    counts = [0] * (len(c.lines) - 2)
    for face in c.faces:
        counts[face.n_sides - 3] += 1
    return TypeVector(tuple(counts))


def interior_point(face: Polygon) -> ProjPoint:
    """An exact rational point strictly inside the face."""
    return face.interior_sample


def flag_system(c: CellComplex) -> Tuple[List[Tuple[int, int, int]], List[List[int]]]:
    """Incident (vertex, edge, face) triples with their adjacency involutions.

    Returns the flag list and three involution tables: other endpoint on the
    same edge, other edge at the same corner, other face across the edge.
    """
    flags: List[Tuple[int, int, int]] = []
    flag_index: Dict[Tuple[int, int, int], int] = {}
    for fid in range(c.n_faces):
        cycle = c._rep_cycles[fid]
        for d in cycle:
            li, a, b = c._darts[d]
            eid = c._edge_of_dart[d]
            for v in (c._proj_of_vert[a], c._proj_of_vert[b]):
                triple = (v, eid, fid)
                assert triple not in flag_index, "ambiguous flag triple"
                flag_index[triple] = len(flags)
                flags.append(triple)
    assert len(flags) == 4 * c.n_edges

    n = len(flags)
    s = [[-1] * n for _ in range(3)]
    for fid in range(c.n_faces):
        cycle = c._rep_cycles[fid]
        m = len(cycle)
        for j, d in enumerate(cycle):
            li, a, b = c._darts[d]
            eid = c._edge_of_dart[d]
            va, vb = c._proj_of_vert[a], c._proj_of_vert[b]
            fa = flag_index[(va, eid, fid)]
            fb = flag_index[(vb, eid, fid)]
            s[0][fa], s[0][fb] = fb, fa
            # corner after side j joins this side and the next one
            d2 = cycle[(j + 1) % m]
            eid2 = c._edge_of_dart[d2]
            fb2 = flag_index[(vb, eid2, fid)]
            s[1][fb], s[1][fb2] = fb2, fb
            # the face across side j
            gid = c._face_of_dart[c._rev[d]]
            s[2][fa] = flag_index[(va, eid, gid)]
            s[2][fb] = flag_index[(vb, eid, gid)]
    for i in range(3):
        assert all(x >= 0 for x in s[i])
        assert all(s[i][s[i][x]] == x for x in range(n)), "involution check failed"
    return flags, s


def combinatorial_automorphisms(c: CellComplex) -> List[Automorphism]:
    """All automorphisms of the projective cell complex.

    An automorphism is a flag permutation commuting with the three adjacency
    involutions, and is determined by the image of a single flag.  Every
    candidate image is checked by propagation, so the result is the full
    group.
    """
    flags, s = flag_system(c)
    n = len(flags)

    autos: List[Automorphism] = []
    for target in range(n):
        image = [-1] * n
        image[0] = target
        queue = [0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for i in range(3):
                x2, y2 = s[i][x], s[i][image[x]]
                if image[x2] < 0:
                    image[x2] = y2
                    queue.append(x2)
                elif image[x2] != y2:
                    ok = False
                    break
        if not ok or len(set(image)) != n:
            continue
        face_perm = [-1] * c.n_faces
        edge_perm = [-1] * c.n_edges
        vertex_perm = [-1] * c.n_vertices
        consistent = True
        for x, y in enumerate(image):
            (v1, e1, f1), (v2, e2, f2) = flags[x], flags[y]
            for perm, src, dst in ((face_perm, f1, f2), (edge_perm, e1, e2),
                                   (vertex_perm, v1, v2)):
                if perm[src] < 0:
                    perm[src] = dst
                elif perm[src] != dst:
                    consistent = False
        if not consistent:
            continue
        line_perm = [-1] * len(c.lines)
        for eid in range(c.n_edges):
            src, dst = c._line_of_edge[eid], c._line_of_edge[edge_perm[eid]]
            if line_perm[src] < 0:
                line_perm[src] = dst
            else:
                assert line_perm[src] == dst, "automorphism does not respect lines"
        autos.append(Automorphism(
            face_perm=tuple(face_perm),
            edge_perm=tuple(edge_perm),
            vertex_perm=tuple(vertex_perm),
            line_perm=tuple(line_perm),
        ))
    assert any(a.is_identity() for a in autos)
    return autos
