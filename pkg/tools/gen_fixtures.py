"""Generate the packaged .camp fixtures and the chain journal.

Writes into src/campedelli/data/.  The premax labeling is found by a
search over all labelings of the heptagon tangent arrangement, looking
for an equipment whose positive set is the central 7-gon plus one
Klein-bottle quadrangle and one torus quadrangle.
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from campedelli.arrangement import interior_point, type_vector
from campedelli.covering import betti, preimage_topology, real_part, smith_thom_report
from campedelli.equipment import (SignTriple, adjacency_profile,
                                  all_equipments, positive_faces, propagate)
from campedelli.exactgeom import ProjLine, ProjPoint, rational
from campedelli.fileio import parse_arrangement, print_arrangement
from campedelli.labeling import Label, LabeledArrangement, Labeling, is_campedelli
from campedelli.moves import is_good_move, reverse_triangle, triangle_by_face

DATA = Path(__file__).resolve().parent.parent / "src" / "campedelli" / "data"

FIG5_COVECTORS = {
    "100": (-350, 0, 1),
    "010": (2140, -40, 29),
    "110": (-2210, -6, 11),
    "101": (3560, -14, -3),
    "001": (22060, -210, 31),
    "111": (-5680, 21, 11),
    "011": (-14700, 31, 32),
}
FIG5_ORDER = ["100", "010", "110", "101", "001", "111", "011"]
FIG5_FACE_POINTS = {
    "P1": (91, 353), "P2": (177, 289), "P3": (163, 353), "P4": (296, 353),
    "P5": (133, 265), "P6": (194, 183), "P7": (30, 385), "P8": (253, 123),
    "P9": (123, 385), "P10": (170, 67), "P11": (243, 385), "P12": (88, 170),
    "P13": (50, 315), "P14": (120, 315), "P15": (133, 333), "P16": (162, 325),
    "P17": (195, 333), "P18": (248, 315), "P19": (150, 295), "P20": (173, 243),
    "P21": (208, 238), "P22": (146, 187),
}
FIG5_WALK_ANCHORS = {
    "P1": ("P7", "P8"), "P2": ("P16", "P17"), "P3": ("P9", "P10"),
    "P4": ("P11", "P12"), "P5": ("P12", "P13"), "P6": ("P20", "P21"),
}
CHAIN = ["P3", "P4", "P3", "P5", "P4", "P3", "P6"]

# slopes of rational tangent directions around the circle, in cyclic order
HEPTAGON_PARAMS = ["0", "12/25", "5/4", "22/5", "-22/5", "-5/4", "-12/25"]


def tangent_lines():
    out = []
    for s in HEPTAGON_PARAMS:
        u = rational(s)
        out.append(ProjLine(-(1 + u * u), 1 - u * u, 2 * u))
    return tuple(out)


def fmt_point(p):
    return " ".join(str(c) for c in p.coords)


def write(name, text):
    DATA.mkdir(parents=True, exist_ok=True)
    if name.endswith(".camp"):
        text = print_arrangement(parse_arrangement(text))
        assert print_arrangement(parse_arrangement(text)) == text, name
    path = DATA / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def gen_fig5():
    rows = ["campedelli/1 purely_real"]
    for lab in FIG5_ORDER:
        c = FIG5_COVECTORS[lab]
        rows.append(f"line {lab} {c[0]} {c[1]} {c[2]}")
    x, y = FIG5_FACE_POINTS["P1"]
    rows.append(f"anchor 1 {x} {y} +++")
    for name, (x, y) in FIG5_FACE_POINTS.items():
        rows.append(f"facemap {name} 1 {x} {y}")
    for face, (a, b) in FIG5_WALK_ANCHORS.items():
        rows.append(f"walkanchor {face} {a} {b}")
    text = "\n".join(rows) + "\n"
    af = parse_arrangement(text)
    assert str(type_vector(af.labeled.complex)) == "(11,5,5,1,0)"
    write("fig5.camp", text)
    return af


def gen_chain_journal(af):
    arr = af.labeled
    c = arr.complex
    names = {n: c.locate(p) for n, p in af.face_names.items()}
    eq = propagate(arr, c.locate(af.anchor.point), af.anchor.signs)
    rows = ["campedelli/1 journal"]
    for ref in CHAIN:
        t = triangle_by_face(arr, names[ref])
        assert is_good_move(eq, t), ref
        rec = reverse_triangle(arr, eq, t)
        rows.append(f"move {ref} {rec.moved_line} {rec.parameter}")
        arr, eq = rec.arrangement, rec.equipment
        names = {n: rec.face_map[f] for n, f in names.items()}
    assert str(type_vector(arr.complex)) == "(8,10,4,0,0)"
    write("fig5_chain.journal", "\n".join(rows) + "\n")


def heptagon_arrangement(codes):
    lines = tangent_lines()
    return LabeledArrangement(lines, Labeling(tuple(Label(c) for c in codes)))


def gen_heptagon():
    # three consecutive tangents get the labels whose sum is zero, so the
    # outer triangle across the middle one is a dependent triangle
    arr = heptagon_arrangement((4, 6, 2, 5, 1, 7, 3))
    c = arr.complex
    assert str(type_vector(c)) == "(7,14,0,0,1)"
    assert bool(is_campedelli(arr))
    hub = next(f.id for f in c.faces if f.n_sides == 7)
    p0 = next(f.id for f in c.faces if set(f.side_lines) == {0, 1, 2})
    assert c.faces[p0].n_sides == 3
    p0_pt = interior_point(c.faces[p0])
    hub_pt = interior_point(c.faces[hub])

    eq = propagate(arr, p0, SignTriple.parse("---"))
    t = triangle_by_face(arr, p0)
    assert t.dependent
    assert is_good_move(eq, t)
    before = adjacency_profile(arr, eq)
    rec = reverse_triangle(arr, eq, t)
    after_type = type_vector(rec.arrangement.complex)
    assert str(after_type) == "(7,13,1,1,0)", str(after_type)
    assert adjacency_profile(rec.arrangement, rec.equipment) != before

    rows = ["campedelli/1 purely_real"]
    for lab, line in zip(arr.labeling, arr.lines):
        coeffs = " ".join(str(v) for v in line.coords)
        rows.append(f"line {lab} {coeffs}")
    rows.append(f"anchor {fmt_point(p0_pt)} ---")
    rows.append(f"facemap P0 {fmt_point(p0_pt)}")
    rows.append(f"facemap HUB {fmt_point(hub_pt)}")
    write("heptagon.camp", "\n".join(rows) + "\n")


KLEIN_LABELS = frozenset((Label(6), Label(3), Label(1), Label(7)))
TORUS_LABELS = frozenset((Label(2), Label(4), Label(3), Label(5)))


def find_premax():
    base = heptagon_arrangement((4, 2, 1, 6, 5, 3, 7))
    c = base.complex
    hub = next(f.id for f in c.faces if f.n_sides == 7)
    for perm in itertools.permutations(range(1, 8)):
        arr = base.with_labeling(Labeling(tuple(Label(x) for x in perm)))
        quads_ok = False
        label_sets = []
        for f in c.faces:
            if f.n_sides == 4:
                label_sets.append(
                    frozenset(arr.labeling[i] for i in f.side_lines))
        if any(s == KLEIN_LABELS for s in label_sets) and any(
                s == TORUS_LABELS for s in label_sets):
            quads_ok = True
        if not quads_ok:
            continue
        for eq in all_equipments(arr):
            pos = positive_faces(eq)
            if len(pos) != 3 or hub not in pos:
                continue
            sets = [
                frozenset(arr.labeling[i] for i in c.faces[f].side_lines)
                for f in pos if f != hub
            ]
            if set(sets) == {KLEIN_LABELS, TORUS_LABELS}:
                return arr, eq, hub, pos
    raise AssertionError("no premax labeling found")


def gen_premax():
    arr, eq, hub, pos = find_premax()
    c = arr.complex
    parts = [t for _, t in real_part(arr, eq)]
    b = betti(parts)
    st = smith_thom_report(b)
    assert b.z2_total == 18 and st.z2_within
    assert b.q_total == 14 and st.q_exceeds
    kinds = sorted((t.components, t.euler_per_component, t.orientable)
                   for t in parts)
    assert kinds == [(1, -6, False), (1, 0, False), (1, 0, True)], kinds

    names = {}
    for f in pos:
        if f == hub:
            names["HUB"] = f
        elif frozenset(arr.labeling[i]
                       for i in c.faces[f].side_lines) == KLEIN_LABELS:
            names["KLEIN"] = f
        else:
            names["TORUS"] = f
    rows = ["campedelli/1 purely_real"]
    for lab, line in zip(arr.labeling, arr.lines):
        coeffs = " ".join(str(v) for v in line.coords)
        rows.append(f"line {lab} {coeffs}")
    anchor_pt = interior_point(c.faces[hub])
    rows.append(f"anchor {fmt_point(anchor_pt)} {eq.sign(hub)}")
    for name in ("HUB", "KLEIN", "TORUS"):
        pt = interior_point(c.faces[names[name]])
        rows.append(f"facemap {name} {fmt_point(pt)}")
    write("premax.camp", "\n".join(rows) + "\n")


def gen_mixed_ii():
    raw = "\n".join([
        "campedelli/1 mixed_real",
        "rline 110 1 0 0",
        "rline 111 0 1 0",
        "rline 001 0 0 1",
        "cline 100 -1 -1 1 0 0 1",
        "cline 101 -1 1 1 0 0 1",
    ]) + "\n"
    af = parse_arrangement(raw)
    write("mixed_ii.camp", print_arrangement(af))


def main():
    af = gen_fig5()
    gen_chain_journal(af)
    gen_heptagon()
    gen_premax()
    gen_mixed_ii()


if __name__ == "__main__":
    main()
