"""Topology of face preimages in the eightfold branched covering.

Over one face the covering is eight polygon copies indexed by (Z/2)^3,
glued along sides: the side labeled alpha identifies copy beta with copy
beta+alpha.  preimage_topology evaluates the closed forms; glue_oracle
builds the quotient cell complex slot by slot and counts, so the two can
be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .arrangement import Polygon
from .errors import MalformedGluing
from .labeling import Label, Labeling, label_sum, span


@dataclass(frozen=True)
class SurfaceTopology:
    """A closed surface with equal components: k x (chi, orientability)."""

    components: int
    euler_per_component: int
    orientable: bool

    @property
    def total_euler(self) -> int:
        return self.components * self.euler_per_component

    def __str__(self) -> str:
        kind = "orientable" if self.orientable else "non-orientable"
        body = f"(χ={self.euler_per_component}, {kind})"
        if self.components == 1:
            return body
        return f"{self.components}×{body}"


def preimage_topology(face: Union[Polygon, Sequence[Label]], lab: Optional[Labeling] = None) -> SurfaceTopology:
    """Closed-form topology of the preimage of one face.

    Accepts a Polygon plus the labeling, or a bare list of side labels.
    The preimage splits into 8/|span| components of total Euler
    characteristic 8-2n; orientable only for a sphere (independent
    triangle) or a torus (quadrangle with labels summing to zero).
    """
    if isinstance(face, Polygon):
        assert lab is not None, "a Polygon needs its labeling"
        labels = [lab[li] for li in face.side_lines]
    else:
        labels = list(face)
    n = len(labels)
    assert n >= 3, "faces of an arrangement have at least three sides"
    dim, _ = span(labels)
    components = 8 >> dim
    total = 8 - 2 * n
    assert total % components == 0
    chi = total // components
    if n == 3:
        orientable = dim == 3
    elif n == 4:
        orientable = label_sum(labels) == 0
    else:
        orientable = False
    if orientable:
        assert chi % 2 == 0
    return SurfaceTopology(components, chi, orientable)


@dataclass(frozen=True)
class GluedSurface:
    """Eight polygon copies with side gluings and optional branch slits.

    side_labels are cyclic; side j runs from corner j to corner j+1 and
    glues copy beta to copy beta + side_labels[j].  Branch point j sits in
    the interior, is slit to corner j, and has the given monodromy: its
    left slit bank in copy beta matches the right bank in beta + monodromy.
    """

    side_labels: Tuple[Label, ...]
    branch_monodromies: Tuple[Label, ...] = ()


class _Parity:
    """Union-find with an orientation parity on each edge."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.odd_cycle = [False] * n

    def find(self, x: int) -> Tuple[int, int]:
        if self.parent[x] == x:
            return x, 0
        root, par = self.find(self.parent[x])
        self.parent[x] = root
        self.parity[x] ^= par
        return root, self.parity[x]

    def union(self, a: int, b: int, rel: int) -> None:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if pa ^ pb != rel:
                self.odd_cycle[ra] = True
            return
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        self.odd_cycle[ra] = self.odd_cycle[ra] or self.odd_cycle[rb]


class _Plain:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def glue_oracle(g: GluedSurface) -> SurfaceTopology:
    """Topology of a glued surface, by explicit cell counting.

    Builds the boundary walk of each of the eight copies (with one slit
    per branch point), identifies vertex and edge slots through the
    gluings, and reads off components, Euler characteristic, and
    orientability from the quotient complex.  Independent of the closed
    forms in preimage_topology.
    """
    n = len(g.side_labels)
    b = len(g.branch_monodromies)
    if n == 0:
        raise MalformedGluing("a glued surface needs at least one side")
    if b > n:
        raise MalformedGluing("more branch points than corners to slit to")

    side = [lab.code for lab in g.side_labels]
    mono = [lab.code for lab in g.branch_monodromies]

    # vertex slots per copy: corners (two occurrences when slit) + branch points
    pre = {}   # corner occurrence entered from side j-1
    post = {}  # corner occurrence leaving into side j
    nslots = 0
    for j in range(n):
        if j < b:
            pre[j], post[j] = nslots, nslots + 1
            nslots += 2
        else:
            pre[j] = post[j] = nslots
            nslots += 1
    bslot = {}
    for j in range(b):
        bslot[j] = nslots
        nslots += 1
    per_copy = nslots

    verts = _Plain(8 * per_copy)
    # the two occurrences of a slit corner are one point of the copy
    for beta in range(8):
        base = beta * per_copy
        for j in range(b):
            verts.union(base + pre[j], base + post[j])

    # edge slots: n sides + 2b slit banks per copy
    eper = n + 2 * b
    edges = _Plain(8 * eper)
    copies = _Plain(8)
    orient = _Parity(8)

    for beta in range(8):
        base_v = beta * per_copy
        base_e = beta * eper
        for j in range(n):
            other = beta ^ side[j]
            if other == beta:
                raise MalformedGluing(f"side {j} has the zero label")
            ov, oe = other * per_copy, other * eper
            edges.union(base_e + j, oe + j)
            # side j runs post[j] -> pre[(j+1) % n] in both copies
            verts.union(base_v + post[j], ov + post[j])
            nxt = (j + 1) % n
            verts.union(base_v + pre[nxt], ov + pre[nxt])
            copies.union(beta, other)
            orient.union(beta, other, 1)
        for j in range(b):
            other = beta ^ mono[j]
            if other == beta:
                raise MalformedGluing(f"branch point {j} has zero monodromy")
            # left bank (slot n+2j) of beta matches right bank (n+2j+1) of other
            edges.union(base_e + n + 2 * j, other * eper + n + 2 * j + 1)
            verts.union(base_v + pre[j], other * per_copy + post[j])
            verts.union(base_v + bslot[j], other * per_copy + bslot[j])
            copies.union(beta, other)
            orient.union(beta, other, 0)

    comp_roots = sorted({copies.find(beta) for beta in range(8)})
    comp_index = {root: i for i, root in enumerate(comp_roots)}
    k = len(comp_roots)
    v_count = [0] * k
    e_count = [0] * k
    f_count = [0] * k
    for beta in range(8):
        f_count[comp_index[copies.find(beta)]] += 1
    seen_v = set()
    for slot in range(8 * per_copy):
        root = verts.find(slot)
        if root not in seen_v:
            seen_v.add(root)
            v_count[comp_index[copies.find(slot // per_copy)]] += 1
    seen_e = set()
    for slot in range(8 * eper):
        root = edges.find(slot)
        if root not in seen_e:
            seen_e.add(root)
            e_count[comp_index[copies.find(slot // eper)]] += 1

    chis = [v_count[i] - e_count[i] + f_count[i] for i in range(k)]
    assert len(set(chis)) == 1, f"components differ in Euler characteristic: {chis}"
    orientables = []
    for root in comp_roots:
        r, _ = orient.find(root)
        orientables.append(not orient.odd_cycle[r])
    assert len(set(orientables)) == 1, "components differ in orientability"
    return SurfaceTopology(k, chis[0], orientables[0])


def real_part(arr, eq) -> List[Tuple[int, SurfaceTopology]]:
    """Preimage topology of every positive face, by face id."""
    from .equipment import positive_faces

    out = []
    for fid in positive_faces(eq):
        face = arr.complex.faces[fid]
        out.append((fid, preimage_topology(face, arr.labeling)))
    return out


@dataclass(frozen=True)
class BettiSummary:
    """Total Betti numbers of a disjoint union of closed surfaces."""

    z2_total: int
    q_total: int


def betti(parts: Sequence[SurfaceTopology]) -> BettiSummary:
    """Sum of Betti totals: 4-chi per component over Z/2; over Q the same
    for orientable components and 2-chi otherwise."""
    z2 = 0
    q = 0
    for part in parts:
        per_z2 = 4 - part.euler_per_component
        per_q = per_z2 if part.orientable else 2 - part.euler_per_component
        z2 += part.components * per_z2
        q += part.components * per_q
    return BettiSummary(z2, q)


@dataclass(frozen=True)
class SmithThomReport:
    """Betti totals of a real part against the fixed covering-surface bounds."""

    z2_total: int
    z2_bound: int
    z2_within: bool
    q_total: int
    q_complex: int
    q_exceeds: bool


def smith_thom_report(b: BettiSummary) -> SmithThomReport:
    """Compare Betti totals with the covering surface's constants.

    The Z/2 total of a real part can be at most 22; a Q total above 10
    shows the real part is homologically richer than the complex surface.
    """
    return SmithThomReport(
        z2_total=b.z2_total,
        z2_bound=22,
        z2_within=b.z2_total <= 22,
        q_total=b.q_total,
        q_complex=10,
        q_exceeds=b.q_total > 10,
    )
