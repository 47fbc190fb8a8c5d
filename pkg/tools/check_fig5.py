"""Sanity gate: realize the six-triangle arrangement from stored covectors,
locate the 22 labeled sample points, and compare the generated tables with
the expected table data.  Run before freezing any fixture."""

import sys

sys.path.insert(0, "/root/pkg/src")

from campedelli.arrangement import build_complex, type_vector
from campedelli.exactgeom import ProjPoint, ProjLine
from campedelli.labeling import Label, Labeling, LabeledArrangement, is_campedelli
from campedelli.equipment import (
    SignTriple, propagate, signs_from_quartics, positive_faces,
    adjacency_walk, adjacency_type, canonical_walk,
)

# covectors act on (1, x, y); label -> covector
COVECTORS = {
    "100": (-350, 0, 1),
    "010": (2140, -40, 29),
    "110": (-2210, -6, 11),
    "101": (3560, -14, -3),
    "001": (22060, -210, 31),
    "111": (-5680, 21, 11),
    "011": (-14700, 31, 32),
}
# face-name sample points (x, y)
FACE_POINTS = {
    "P1": (91, 353), "P2": (177, 289), "P3": (163, 353), "P4": (296, 353),
    "P5": (133, 265), "P6": (194, 183), "P7": (30, 385), "P8": (253, 123),
    "P9": (123, 385), "P10": (170, 67), "P11": (243, 385), "P12": (88, 170),
    "P13": (50, 315), "P14": (120, 315), "P15": (133, 333), "P16": (162, 325),
    "P17": (195, 333), "P18": (248, 315), "P19": (150, 295), "P20": (173, 243),
    "P21": (208, 238), "P22": (146, 187),
}

ORDER = ["100", "010", "110", "101", "001", "111", "011"]

# expected side counts per name
EXPECT_SIDES = {
    "P1": 3, "P2": 3, "P3": 3, "P4": 3, "P5": 3, "P6": 3,
    "P7": 4, "P8": 4, "P9": 5, "P10": 4, "P11": 5, "P12": 4, "P13": 4, "P14": 5,
    "P15": 3, "P16": 5, "P17": 3, "P18": 5, "P19": 3, "P20": 6, "P21": 3, "P22": 3,
}


def build():
    lines = tuple(ProjLine(*COVECTORS[lab]) for lab in ORDER)
    labeling = Labeling(tuple(Label.parse(lab) for lab in ORDER))
    return LabeledArrangement(lines, labeling)


def locate_names(c):
    name_to_face = {}
    for name, (x, y) in FACE_POINTS.items():
        name_to_face[name] = c.locate(ProjPoint(1, x, y))
    return name_to_face


def main():
    arr = build()
    c = arr.complex
    print("V,E,F =", c.n_vertices, c.n_edges, c.n_faces)
    print("type  =", type_vector(c))
    print("campedelli:", bool(is_campedelli(arr)))

    name_to_face = {}
    face_to_name = {}
    ok = True
    for name, (x, y) in FACE_POINTS.items():
        try:
            fid = c.locate(ProjPoint(1, x, y))
        except Exception as e:
            print(f"{name}: LOCATE FAILED {e}")
            ok = False
            continue
        if fid in face_to_name:
            print(f"{name}: clashes with {face_to_name[fid]} (both in face {fid})")
            ok = False
        name_to_face[name] = fid
        face_to_name[fid] = name
    print("faces located:", len(name_to_face), "distinct:", len(face_to_name), "ok:", ok)

    for name, fid in sorted(name_to_face.items(), key=lambda kv: int(kv[0][1:])):
        got = c.faces[fid].n_sides
        want = EXPECT_SIDES[name]
        mark = "" if got == want else "  <-- MISMATCH"
        if got != want:
            ok = False
        print(f"{name}: face {fid}, sides {got} (want {want}){mark}")

    # equipment anchored at P1 = (+,+,+)
    eq = propagate(arr, name_to_face["P1"], SignTriple.parse("+++"))
    pos = positive_faces(eq)
    print("positives:", [face_to_name.get(f, f"id{f}") for f in pos])

    # quartic cross-check
    base = signs_from_quartics(arr, name_to_face["P1"])
    shift = base.code  # propagated says +++ there
    mismatch = sum(
        1 for fid in range(c.n_faces)
        if signs_from_quartics(arr, fid).code != eq.codes[fid] ^ shift
    )
    print("quartic mismatches (after global shift):", mismatch)

    # walks for P1..P6
    for name in ["P1", "P2", "P3", "P4", "P5", "P6"]:
        fid = name_to_face[name]
        walk = c.boundary_alternation(fid)
        toks = []
        for nb, is_v in walk:
            nm = face_to_name.get(nb, f"?{nb}")
            prime = "'" if is_v else ""
            toks.append(f"{c.faces[nb].n_sides}_{nm[1:]}{prime}")
        print(f"{name}: ({','.join(toks)})")
        print(f"   canonical: {canonical_walk(adjacency_walk(c, fid))}")


if __name__ == "__main__":
    main()
