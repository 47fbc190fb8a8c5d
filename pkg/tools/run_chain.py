"""Drive the seven-move reversal chain and compare every generated table
against the expected fixture data, byte for byte."""

import sys

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/tools")

from check_fig5 import build, locate_names
from campedelli.arrangement import type_vector
from campedelli.equipment import (SignTriple, anchored_walk, positive_faces,
                                  propagate)
from campedelli.moves import is_good_move, reverse_triangle, triangle_by_face

MOVES = ["P3", "P4", "P3", "P5", "P4", "P3", "P6"]
ANCHORS = {
    "P1": ("P7", "P8"), "P2": ("P16", "P17"), "P3": ("P9", "P10"),
    "P4": ("P11", "P12"), "P5": ("P12", "P13"), "P6": ("P20", "P21"),
}

EXPECT = [
    ("(11,5,5,1,0)", [4, 4, 5, 4, 5, 4, 4, 5, 3, 5, 3, 5, 3, 6, 3, 3], {
        "P1": "(4_7,4_8',5_9,3_15',5_14,4_13')",
        "P2": "(5_16,3_17',5_18,3_21',6_20,3_19')",
        "P3": "(5_9,4_10',5_11,3_17',5_16,3_15')",
        "P4": "(5_11,4_12',4_13,4_7',5_18,3_17')",
        "P5": "(4_12,4_13',5_14,3_19',6_20,3_22')",
        "P6": "(6_20,3_21',4_8,5_9',4_10,3_22')",
    }, "((4,4',5,3',5,4'),(5,3',5,3',6,3'))"),
    ("(9,9,3,1,0)", [4, 4, 4, 5, 4, 4, 4, 5, 4, 4, 4, 5, 3, 6, 3, 3], {
        "P1": "(4_7,4_8',4_9,4_15',5_14,4_13')",
        "P2": "(4_16,4_17',5_18,3_21',6_20,3_19')",
        "P3": "(4_9',5_10,4_11',4_17,4_16',4_15)",
        "P4": "(4_11,4_12',4_13,4_7',5_18,4_17')",
        "P5": "(4_12,4_13',5_14,3_19',6_20,3_22')",
        "P6": "(6_20,3_21',4_8,4_9',5_10,3_22')",
    }, "((4,4',4,4',5,4'),(4,4',5,3',6,3'))"),
    ("(11,5,5,1,0)", [5, 4, 4, 5, 3, 5, 3, 5, 4, 4, 5, 4, 3, 6, 3, 3], {
        "P1": "(5_7,4_8',4_9,4_15',5_14,3_13')",
        "P2": "(4_16,5_17',4_18,3_21',6_20,3_19')",
        "P3": "(4_9',5_10,3_11',5_17,4_16',4_15)",
        "P4": "(3_11',5_12,3_13',5_7,4_18',5_17)",
        "P5": "(5_12,3_13',5_14,3_19',6_20,3_22')",
        "P6": "(6_20,3_21',4_8,4_9',5_10,3_22')",
    }, "((5,4',4,4',5,3'),(4,5',4,3',6,3'))"),
    ("(11,5,5,1,0)", [5, 4, 5, 4, 4, 5, 3, 5, 3, 5, 4, 4, 3, 6, 3, 3], {
        "P1": "(5_7,4_8',5_9,3_15',5_14,3_13')",
        "P2": "(5_16,4_17',4_18,3_21',6_20,3_19')",
        "P3": "(5_9,4_10',4_11,4_17',5_16,3_15')",
        "P4": "(4_11',5_12,3_13',5_7,4_18',4_17)",
        "P5": "(5_12,3_13',5_14,3_19',6_20,3_22')",
        "P6": "(6_20,3_21',4_8,5_9',4_10,3_22')",
    }, "((5,4',5,3',5,3'),(5,4',4,3',6,3'))"),
    ("(8,10,4,0,0)", [5, 4, 5, 4, 4, 4, 4, 4, 3, 5, 4, 4, 4, 5, 3, 4], {
        "P1": "(5_7,4_8',5_9,3_15',4_14,4_13')",
        "P2": "(5_16,4_17',4_18,3_21',5_20,4_19')",
        "P3": "(5_9,4_10',4_11,4_17',5_16,3_15')",
        "P4": "(4_11',4_12,4_13',5_7,4_18',4_17)",
        "P5": "(4_12',4_13,4_14',4_19,5_20',4_22)",
        "P6": "(5_20,3_21',4_8,5_9',4_10,4_22')",
    }, "((5,4',5,3',4,4'),(5,4',4,3',5,4'))"),
    ("(10,6,6,0,0)", [4, 4, 5, 4, 5, 3, 5, 4, 3, 5, 3, 5, 4, 5, 3, 4], {
        "P1": "(4_7,4_8',5_9,3_15',4_14,5_13')",
        "P2": "(5_16,3_17',5_18,3_21',5_20,4_19')",
        "P3": "(5_9,4_10',5_11,3_17',5_16,3_15')",
        "P4": "(5_11,3_12',5_13,4_7',5_18,3_17')",
        "P5": "(3_12',5_13,4_14',4_19,5_20',4_22)",
        "P6": "(5_20,3_21',4_8,5_9',4_10,4_22')",
    }, "((4,4',5,3',4,5'),(5,3',5,3',5,4'))"),
    ("(8,10,4,0,0)", [4, 4, 4, 5, 4, 3, 5, 4, 4, 4, 4, 5, 4, 5, 3, 4], {
        "P1": "(4_7,4_8',4_9,4_15',4_14,5_13')",
        "P2": "(4_16,4_17',5_18,3_21',5_20,4_19')",
        "P3": "(4_9',5_10,4_11',4_17,4_16',4_15)",
        "P4": "(4_11,3_12',5_13,4_7',5_18,4_17')",
        "P5": "(3_12',5_13,4_14',4_19,5_20',4_22)",
        "P6": "(5_20,3_21',4_8,4_9',5_10,4_22')",
    }, "((4,4',4,4',4,5'),(4,4',5,3',5,4'))"),
    ("(8,10,4,0,0)", [4, 3, 5, 4, 4, 3, 5, 4, 4, 4, 4, 5, 4, 4, 4, 5], {
        "P1": "(4_7,3_8',5_9,4_15',4_14,5_13')",
        "P2": "(4_16,4_17',5_18,4_21',4_20,4_19')",
        "P3": "(5_9',4_10,4_11',4_17,4_16',4_15)",
        "P4": "(4_11,3_12',5_13,4_7',5_18,4_17')",
        "P5": "(3_12',5_13,4_14',4_19,4_20',5_22)",
        "P6": "(4_20',4_21,3_8',5_9,4_10',5_22)",
    }, "((4,3',5,4',4,5'),(4,4',5,4',4,4'))"),
]


def render_walk(c, fid, first_fid, second_fid, names):
    toks = []
    for count, nb, is_corner in anchored_walk(c, fid, first_fid, second_fid):
        nm = names.get(nb, f"F{nb}")
        sub = nm[1:] if nm.startswith("P") else nm
        toks.append(f"{count}_{sub}" + ("'" if is_corner else ""))
    return "(" + ",".join(toks) + ")"


def render_a_string(c, name_to_face, names):
    parts = []
    for pname in ("P1", "P2"):
        a, b = ANCHORS[pname]
        toks = []
        for count, nb, is_corner in anchored_walk(
                c, name_to_face[pname], name_to_face[a], name_to_face[b]):
            toks.append(str(count) + ("'" if is_corner else ""))
        parts.append("(" + ",".join(toks) + ")")
    return "(" + ",".join(parts) + ")"


def main():
    arr = build()
    c = arr.complex
    name_to_face = locate_names(c)
    eq = propagate(arr, name_to_face["P1"], SignTriple.parse("+++"))

    failures = 0
    invariants = []
    state = 0
    while True:
        c = arr.complex
        face_to_name = {v: k for k, v in name_to_face.items()}
        exp_type, exp_t1, exp_t2, exp_a = EXPECT[state]

        got_type = str(type_vector(c))
        ok = got_type == exp_type
        failures += not ok
        print(f"state {state}: type {got_type} {'OK' if ok else 'WANT ' + exp_type}")

        t1 = [c.faces[name_to_face[f'P{i}']].n_sides for i in range(7, 23)]
        ok = t1 == exp_t1
        failures += not ok
        print(f"  t1 {'OK' if ok else f'{t1} WANT {exp_t1}'}")

        pos = sorted(face_to_name[f] for f in positive_faces(eq))
        ok = pos == ["P1", "P2"]
        failures += not ok
        print(f"  positives {pos} {'OK' if ok else 'WANT [P1, P2]'}")

        for pname in ("P1", "P2", "P3", "P4", "P5", "P6"):
            a, b = ANCHORS[pname]
            got = render_walk(c, name_to_face[pname], name_to_face[a],
                              name_to_face[b], face_to_name)
            want = exp_t2[pname]
            ok = got == want
            failures += not ok
            print(f"  {pname} {got} {'OK' if ok else 'WANT ' + want}")

        got_a = render_a_string(c, name_to_face, face_to_name)
        ok = got_a == exp_a
        failures += not ok
        print(f"  A {got_a} {'OK' if ok else 'WANT ' + exp_a}")

        from campedelli.census import def_invariant
        invariants.append(str(def_invariant(arr, eq)))

        if state == len(MOVES):
            break
        mname = MOVES[state]
        t = triangle_by_face(arr, name_to_face[mname])
        good = is_good_move(eq, t)
        print(f"  move: reverse {mname} (good={good})")
        failures += not good
        rec = reverse_triangle(arr, eq, t)
        name_to_face = {nm: rec.face_map[f] for nm, f in name_to_face.items()}
        arr, eq = rec.arrangement, rec.equipment
        state += 1

    distinct = len(set(invariants))
    print(f"distinct invariants: {distinct}/8 {'OK' if distinct == 8 else 'FAIL'}")
    failures += distinct != 8
    print("FAILURES:", failures)
    return failures


if __name__ == "__main__":
    sys.exit(1 if main() else 0)
