"""Equivalence, canonical keys and orbit counts for equipped arrangements.

Two equipped arrangements count as the same when a symmetry of the face
complex combined with a relabeling of the (Z/2Z)^3 group carries one to the
other.  The canonical key hashes a normal form taken over all such symmetry
pairs; the orbit counter enumerates whole orbits of (labeling, sign) states
under the same group.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .arrangement import (CellComplex, TypeVector, combinatorial_automorphisms,
                          flag_system, type_vector)
from .equipment import AdjacencyProfile, SignEquipment, adjacency_profile
from .errors import NotSimple
from .labeling import LabeledArrangement, all_renumberings

KEY_VERSION = "ck1"

_BASIS_CODES = (4, 2, 1)
_NONZERO_CODES = (1, 2, 3, 4, 5, 6, 7)


@dataclass(frozen=True)
class DefInvariant:
    """The data preserved by continuous deformation of an equipped arrangement."""

    purely_real: bool
    types: TypeVector
    profile: AdjacencyProfile

    def sort_key(self) -> Tuple:
        return (self.purely_real, self.types.counts,
                tuple(t.canonical for t in self.profile.types))

    def __str__(self) -> str:
        kind = "real" if self.purely_real else "mixed"
        return f"{kind} type={self.types} profile={self.profile}"


def def_invariant(arr: LabeledArrangement, eq: SignEquipment) -> DefInvariant:
    return DefInvariant(True, type_vector(arr.complex), adjacency_profile(arr, eq))


def _linear_table(basis: Sequence[int]) -> Tuple[int, ...]:
    """Table of the linear map sending the given basis to 100, 010, 001."""
    assert len(basis) == 3
    table = [0] * 8
    for x in range(8):
        src = 0
        dst = 0
        for k in range(3):
            if x >> (2 - k) & 1:
                src ^= basis[k]
                dst ^= _BASIS_CODES[k]
        assert table[src] == 0 or src == 0
        table[src] = dst
    assert sorted(table) == list(range(8)), "label images are not a basis"
    return tuple(table)


def _span_closure(codes: Iterable[int]) -> frozenset:
    acc = {0}
    for c in codes:
        acc |= {c ^ x for x in acc}
    return frozenset(acc)


def _encode_from(start: int, s: Sequence[Sequence[int]],
                 label_of_flag: Sequence[int],
                 sign_of_flag: Sequence[int]) -> Tuple:
    """Breadth-first normal form of the flag graph with its marking data.

    Flags are numbered in discovery order from the start flag; the encoding
    lists, per flag, the numbers of its three involution images plus the
    line label and face sign renormalized so the first three independent
    labels met become 100, 010, 001.
    """
    n = len(label_of_flag)
    number = [-1] * n
    order: List[int] = [start]
    number[start] = 0
    head = 0
    while head < len(order):
        f = order[head]
        head += 1
        for i in range(3):
            g = s[i][f]
            if number[g] < 0:
                number[g] = len(order)
                order.append(g)
    assert len(order) == n, "flag graph is not connected"

    basis: List[int] = []
    spanned = {0}
    for f in order:
        code = label_of_flag[f]
        if code not in spanned:
            basis.append(code)
            spanned |= {code ^ x for x in spanned}
            if len(basis) == 3:
                break
    table = _linear_table(basis)

    rows = []
    for f in order:
        rows.append((number[s[0][f]], number[s[1][f]], number[s[2][f]],
                     table[label_of_flag[f]], table[sign_of_flag[f]]))
    return tuple(rows)


@dataclass(frozen=True)
class EquippedClassKey:
    digest: str
    version: str = KEY_VERSION

    def __str__(self) -> str:
        return f"{self.version}:{self.digest}"


def class_key(arr: LabeledArrangement, eq: SignEquipment) -> EquippedClassKey:
    """Canonical key, equal exactly for equivalent equipped arrangements.

    Minimizing the flag normal form over every start flag covers all
    complex symmetries (reflections included), and renormalizing labels per
    traversal covers all 168 relabelings of the covering group.
    """
    c = arr.complex
    flags, s = flag_system(c)
    label_of_flag = [arr.labeling.labels[c._line_of_edge[e]].code
                     for (_, e, _) in flags]
    sign_of_flag = [eq.codes[f] for (_, _, f) in flags]
    best = None
    for start in range(len(flags)):
        enc = _encode_from(start, s, label_of_flag, sign_of_flag)
        if best is None or enc < best:
            best = enc
    payload = repr((KEY_VERSION, best)).encode("ascii")
    return EquippedClassKey(hashlib.sha256(payload).hexdigest())


def equivalent(arr1: LabeledArrangement, eq1: SignEquipment,
               arr2: LabeledArrangement, eq2: SignEquipment) -> bool:
    return class_key(arr1, eq1) == class_key(arr2, eq2)


def _group_data(c: CellComplex) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Per complex symmetry: inverse line permutation and the bit list of
    lines separating the base face from the symmetry's preimage of it."""
    data = []
    for h in combinatorial_automorphisms(c):
        nlines = len(c.lines)
        hinv = [0] * nlines
        for src, dst in enumerate(h.line_perm):
            hinv[dst] = src
        f0_pre = h.face_perm.index(0)
        mask = c.crossing_mask(f0_pre)
        bits = tuple(l for l in range(nlines) if mask >> l & 1)
        data.append((tuple(hinv), bits))
    return data


def _renumbering_tables() -> List[Tuple[int, ...]]:
    return [tuple(r.apply_code(x) for x in range(8)) for r in all_renumberings()]


def _state_images(phi: Tuple[int, ...], s0: int,
                  group: Sequence[Tuple[Tuple[int, ...], Tuple[int, ...]]],
                  tables: Sequence[Tuple[int, ...]]):
    """All images of one (labeling, base sign) state under the full group."""
    for hinv, bits in group:
        pre = s0
        for l in bits:
            pre ^= phi[l]
        pulled = tuple(phi[hinv[l]] for l in range(len(hinv)))
        for table in tables:
            yield tuple(table[x] for x in pulled), table[pre]


def count_classes(c: CellComplex) -> int:
    """Number of orbits of the 7!*8 (labeling, sign) states, enumerated."""
    if not c.is_simple:
        raise NotSimple("orbit counting needs a simple arrangement")
    assert len(c.lines) == 7, "orbit counting is specific to 7 lines"
    group = _group_data(c)
    tables = _renumbering_tables()
    seen = set()
    orbits = 0
    states = 0
    for phi in itertools.permutations(_NONZERO_CODES):
        for s0 in range(8):
            states += 1
            if (phi, s0) in seen:
                continue
            orbits += 1
            for image in _state_images(phi, s0, group, tables):
                seen.add(image)
    assert states == 40320 and len(seen) == states
    return orbits


def count_classes_by_fixed_states(c: CellComplex) -> int:
    """Independent orbit count: average number of states fixed per symmetry.

    Slower than enumeration; kept as a cross-check with different logic.
    """
    if not c.is_simple:
        raise NotSimple("orbit counting needs a simple arrangement")
    assert len(c.lines) == 7
    group = _group_data(c)
    tables = _renumbering_tables()
    nlines = 7
    all_phi = list(itertools.permutations(_NONZERO_CODES))
    total = 0
    for hinv, bits in group:
        hline = [0] * nlines
        for dst, src in enumerate(hinv):
            hline[src] = dst
        for table in tables:
            for phi in all_phi:
                if any(phi[hline[l]] != table[phi[l]] for l in range(nlines)):
                    continue
                pre = 0
                for l in bits:
                    pre ^= phi[l]
                total += sum(1 for s0 in range(8)
                             if s0 == table[s0 ^ pre])
    order = len(group) * len(tables)
    assert total % order == 0, "orbit total is not divisible by group order"
    return total // order
