"""Sign equipments on the faces of a labeled arrangement.

An equipment assigns one of eight sign triples to every face so that
crossing a line labeled (a1,a2,a3) flips the k-th sign exactly when a_k=1.
Sign triples are packed like labels: code bit 4 is the first position, and
a set bit means minus.  Crossing a line is then xor with the label code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

from .arrangement import CellComplex, Polygon
from .errors import InconsistentEquipment, NotSimple
from .labeling import LabeledArrangement


class SignTriple:
    """Three signs, e.g. (+,+,-), packed into a code in 0..7."""

    __slots__ = ("code",)

    def __init__(self, code: int):
        if not 0 <= code <= 7:
            raise ValueError(f"sign code out of range: {code}")
        self.code = code

    @staticmethod
    def parse(text: str) -> "SignTriple":
        text = text.strip().strip("()")
        text = text.replace(",", "")
        if len(text) != 3 or any(ch not in "+-" for ch in text):
            raise ValueError(f"not a sign triple: {text!r}")
        code = 0
        for ch in text:
            code = (code << 1) | (1 if ch == "-" else 0)
        return SignTriple(code)

    @staticmethod
    def positive() -> "SignTriple":
        return SignTriple(0)

    @property
    def signs(self) -> Tuple[int, int, int]:
        """Signs as +1/-1 integers."""
        c = self.code
        return tuple(-1 if (c >> k) & 1 else 1 for k in (2, 1, 0))

    def is_positive(self) -> bool:
        return self.code == 0

    def flip(self, label_code: int) -> "SignTriple":
        return SignTriple(self.code ^ label_code)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignTriple) and self.code == other.code

    def __hash__(self) -> int:
        return hash(("SignTriple", self.code))

    def __str__(self) -> str:
        return "".join("-" if (self.code >> k) & 1 else "+" for k in (2, 1, 0))

    def __repr__(self) -> str:
        return f"SignTriple({self})"


@dataclass(frozen=True)
class SignEquipment:
    """Sign triples for every face, indexed by face id."""

    codes: Tuple[int, ...]

    def sign(self, face_id: int) -> SignTriple:
        return SignTriple(self.codes[face_id])

    def __len__(self) -> int:
        return len(self.codes)

    def flipped(self, eps: int) -> "SignEquipment":
        """Global flip by a code in 0..7."""
        return SignEquipment(tuple(c ^ eps for c in self.codes))


def propagate(
    arr: LabeledArrangement, anchor_face: int, anchor_sign: SignTriple
) -> SignEquipment:
    """Spread a sign triple from one face across the whole complex.

    Walks the dual graph, applying the crossing rule on every side.  Every
    non-tree adjacency is checked too, so a labeling whose crossing rules
    are contradictory raises InconsistentEquipment instead of returning a
    half-consistent assignment.
    """
    c = arr.complex
    codes = [-1] * c.n_faces
    codes[anchor_face] = anchor_sign.code
    queue = [anchor_face]
    while queue:
        fid = queue.pop()
        face = c.faces[fid]
        for pos, li in enumerate(face.side_lines):
            nb = c.edge_neighbor(fid, pos)
            expected = codes[fid] ^ arr.labeling[li].code
            if codes[nb] < 0:
                codes[nb] = expected
                queue.append(nb)
            elif codes[nb] != expected:
                raise InconsistentEquipment(
                    f"faces {fid} and {nb} disagree across line {li}"
                )
    assert all(code >= 0 for code in codes)
    return SignEquipment(tuple(codes))


def all_equipments(arr: LabeledArrangement) -> List[SignEquipment]:
    """The eight equipments of a labeled arrangement.

    They are the global sign flips of any single propagated solution, in
    flip-code order starting from the solution that makes face 0 positive.
    """
    base = propagate(arr, 0, SignTriple.positive())
    out = [base.flipped(eps) for eps in range(8)]
    assert len({eq.codes for eq in out}) == 8
    return out


def signs_from_quartics(arr: LabeledArrangement, face: Union[Polygon, int]) -> SignTriple:
    """Signs of the three basis quartic products at a face's interior point.

    The k-th quartic is the product of the four line forms whose labels
    have a 1 in position k.  Degrees are even, so the signs do not depend
    on the choice of representative for the interior point.
    """
    c = arr.complex
    poly = c.faces[face] if isinstance(face, int) else face
    sample = poly.interior_sample
    code = 0
    for k, bit in enumerate((4, 2, 1)):
        product = 1
        for li, line in enumerate(c.lines):
            if arr.labeling[li].code & bit:
                product *= line(sample)
        assert product != 0, "interior sample lies on a line"
        if product < 0:
            code |= bit
    return SignTriple(code)


def positive_faces(eq: SignEquipment) -> Tuple[int, ...]:
    """Ids of the faces carrying (+,+,+), in increasing order."""
    return tuple(fid for fid, code in enumerate(eq.codes) if code == 0)


def _reversed_walk(flat: Tuple[int, ...]) -> Tuple[int, ...]:
    """Walk the boundary the other way round.

    For (s1,t1,...,sn,tn) this is (sn,t_{n-1},s_{n-1},...,s1,tn): side
    counts stay in odd positions, corner counts in even ones.
    """
    s = flat[0::2]
    t = flat[1::2]
    rs = s[::-1]
    rt = t[::-1]
    rt = rt[1:] + rt[:1]
    out: List[int] = []
    for a, b in zip(rs, rt):
        out.extend((a, b))
    return tuple(out)


def canonical_walk(flat: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least alternating walk.

    Candidates are the rotations by even offsets of the sequence and of its
    role-preserving reversal, so side counts always stay in odd positions.
    """
    flat = tuple(flat)
    n = len(flat) // 2
    best = None
    for seq in (flat, _reversed_walk(flat)):
        for k in range(n):
            cand = seq[2 * k:] + seq[:2 * k]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class AdjacencyType:
    """Canonicalized cyclic sequence of neighbor side counts."""

    canonical: Tuple[int, ...]

    def __str__(self) -> str:
        parts = [
            f"{v}'" if i % 2 else str(v)
            for i, v in enumerate(self.canonical)
        ]
        return "(" + ",".join(parts) + ")"

    def __lt__(self, other: "AdjacencyType") -> bool:
        return self.canonical < other.canonical


def adjacency_walk(c: CellComplex, face: Union[Polygon, int]) -> Tuple[int, ...]:
    """Raw alternating neighbor side counts along the boundary walk.

    Entry 2j is the side count of the neighbor across side j, entry 2j+1
    that of the neighbor across the corner after side j.  Not canonical;
    use adjacency_type for the invariant form.
    """
    fid = face if isinstance(face, int) else face.id
    if not c.is_simple:
        raise NotSimple("adjacency walks need a simple arrangement")
    return tuple(
        c.faces[nb].n_sides for nb, _ in c.boundary_alternation(fid)
    )


def adjacency_type(c: CellComplex, face: Union[Polygon, int]) -> AdjacencyType:
    """Canonical adjacency type of one face."""
    return AdjacencyType(canonical_walk(adjacency_walk(c, face)))


@dataclass(frozen=True)
class AdjacencyProfile:
    """Adjacency types of the positive faces, as a sorted multiset."""

    types: Tuple[AdjacencyType, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(t) for t in self.types) + ")"


def adjacency_profile(arr: LabeledArrangement, eq: SignEquipment) -> AdjacencyProfile:
    c = arr.complex
    types = sorted(adjacency_type(c, fid) for fid in positive_faces(eq))
    return AdjacencyProfile(tuple(types))


def anchored_walk(c: CellComplex, face: Union[Polygon, int], first: int,
                  second: int) -> Tuple[Tuple[int, int, bool], ...]:
    """Neighbor walk of a face aligned to start at two chosen neighbors.

    Entries are (side count, neighbor face id, corner-only flag).  Among all
    rotations of the walk and of its reflection, the first one whose leading
    two neighbors are the requested faces wins; reflection keeps each entry's
    corner flag, so a face tracked through reversals reports its current
    neighbor roles.
    """
    fid = face if isinstance(face, int) else face.id
    entries = tuple(
        (c.faces[nb].n_sides, nb, is_corner)
        for nb, is_corner in c.boundary_alternation(fid)
    )
    m = len(entries)
    candidates = [entries[i:] + entries[:i] for i in range(m)]
    reflected = entries[::-1]
    candidates += [reflected[i:] + reflected[:i] for i in range(m)]
    for seq in candidates:
        if seq[0][1] == first and seq[1][1] == second:
            return seq
    raise KeyError(
        f"face {fid} has no walk alignment starting at {first},{second}")
