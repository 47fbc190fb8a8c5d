"""Command line interface.

Subcommands cover validation, cell statistics, table reports, sign
equipments, covering topology, triangle moves with journal replay,
witness search, mixed-pair classification, orbit counting, covering
equation emission and the gluing-oracle cross check.

Exit codes: 0 success, 2 validation failure, 3 parse error, 4 rejected
degenerate input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .arrangement import (combinatorial_automorphisms, interior_point,
                          type_vector)
from .census import count_classes, def_invariant
from .covering import GluedSurface, glue_oracle, preimage_topology
from .equipment import SignEquipment, SignTriple, positive_faces, propagate
from .errors import (CampedelliError, CannotPerturb, Concurrent, Degenerate,
                     DependentSides, DuplicateLine, IdenticalLines,
                     InconsistentEquipment, InvalidMultiplicity,
                     MalformedGluing, NotATriangle, NotSimple, ParseError)
from .exactgeom import ComplexProjLine, GaussRational, format_rational
from .fileio import (KIND_MIXED, KIND_PURE, AnchorSpec, ArrangementFile,
                     MoveDirective, parse_arrangement, print_arrangement,
                     print_journal, resolve_face_names)
from .labeling import Label, LabeledArrangement, is_campedelli
from .mixedreal import (QUADRANT_SIDE_LABELS, REAL_STRUCTURE_TAGS,
                        MixedArrangement, class_invariant, classify_type,
                        def_class, dif_report, fix_topology, pair_quadratic)
from .moves import is_good_move, reverse_triangle, triangle_by_face
from .report import _name_key, build_report, face_name
from .singularities import classify_arrangement

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_DEGENERATE = 4

_DEGENERATE_ERRORS = (Degenerate, Concurrent, NotSimple, DuplicateLine,
                      IdenticalLines, InvalidMultiplicity)


class CommandError(Exception):
    """A request the input cannot satisfy; maps to exit code 2."""


@dataclass
class State:
    """A file brought up to date: journal applied, names transported."""

    af: ArrangementFile
    arr: Optional[LabeledArrangement] = None
    eq: Optional[SignEquipment] = None
    anchor_face: Optional[int] = None
    name_to_face: Optional[Dict[str, int]] = None
    mixed: Optional[MixedArrangement] = None

    def require_pure(self) -> LabeledArrangement:
        if self.arr is None:
            raise CommandError("this command needs a purely real file")
        return self.arr

    def require_mixed(self) -> MixedArrangement:
        if self.mixed is None:
            raise CommandError("this command needs a mixed_real file")
        return self.mixed

    def require_equipment(self) -> SignEquipment:
        if self.eq is None:
            raise CommandError(
                "this command needs a sign equipment; add an anchor line "
                "to the file or pass --anchor FACE:SIGNS")
        return self.eq


def _face_ref_to_id(ref: str, name_to_face: Dict[str, int], n_faces: int) -> int:
    if ref in name_to_face:
        return name_to_face[ref]
    digits = ref[1:] if ref.startswith("F") else ref
    if digits.isdigit():
        fid = int(digits)
        if fid < n_faces:
            return fid
        raise CommandError(f"face id {fid} out of range (0..{n_faces - 1})")
    raise CommandError(f"unknown face reference {ref!r}")


def _parse_anchor_flag(spec: str) -> Tuple[str, SignTriple]:
    ref, sep, signs = spec.rpartition(":")
    if not sep or not ref:
        raise CommandError(
            f"--anchor wants FACE:SIGNS, for example P1:+++, got {spec!r}")
    try:
        triple = SignTriple.parse(signs)
    except ValueError as e:
        raise CommandError(str(e))
    return ref, triple


def realize(af: ArrangementFile, anchor_flag: Optional[str]) -> State:
    """Apply the journal and resolve names; verify replay determinism.

    Each journal entry must match the move recomputed at its face, so a
    journal either replays bit for bit or is rejected.
    """
    if af.kind == KIND_MIXED:
        return State(af=af, mixed=af.mixed)

    arr = af.labeled
    assert arr is not None
    c = arr.complex
    name_to_face = resolve_face_names(af, c)

    eq = None
    anchor_face = None
    if anchor_flag is not None:
        ref, triple = _parse_anchor_flag(anchor_flag)
        anchor_face = _face_ref_to_id(ref, name_to_face, c.n_faces)
        eq = propagate(arr, anchor_face, triple)
    elif af.anchor is not None:
        anchor_face = c.locate(af.anchor.point)
        eq = propagate(arr, anchor_face, af.anchor.signs)

    work_eq = eq if eq is not None else propagate(arr, 0, SignTriple(0))
    for mv in af.journal:
        fid = _face_ref_to_id(mv.face_ref, name_to_face, arr.complex.n_faces)
        t = triangle_by_face(arr, fid)
        rec = reverse_triangle(arr, work_eq, t)
        if rec.moved_line != mv.line_index or rec.parameter != mv.parameter:
            raise CommandError(
                f"journal replay mismatch at {mv.face_ref}: recomputed "
                f"line {rec.moved_line} with parameter "
                f"{format_rational(rec.parameter)}, file says line "
                f"{mv.line_index} with {format_rational(mv.parameter)}")
        arr = rec.arrangement
        work_eq = rec.equipment
        name_to_face = {n: rec.face_map[f] for n, f in name_to_face.items()}
        if anchor_face is not None:
            anchor_face = rec.face_map[anchor_face]
    if eq is not None:
        eq = work_eq
    return State(af=af, arr=arr, eq=eq, anchor_face=anchor_face,
                 name_to_face=name_to_face)


def _read_state(args) -> State:
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    af = parse_arrangement(text)
    return realize(af, getattr(args, "anchor", None))


def _display(state: State) -> Dict[int, str]:
    names: Dict[int, str] = {}
    for name, fid in (state.name_to_face or {}).items():
        names[fid] = name
    return names


def _emit(args, lines: List[str], obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for ln in lines:
            print(ln)


def _sorted_faces(state: State) -> List[Tuple[int, str]]:
    c = state.require_pure().complex
    names = _display(state)
    pairs = [(fid, face_name(fid, names)) for fid in range(c.n_faces)]
    pairs.sort(key=lambda p: _name_key(p[1]))
    return pairs


def cmd_validate(args) -> int:
    state = _read_state(args)
    if state.af.kind == KIND_MIXED:
        m = state.require_mixed()
        t = classify_type(m)
        lines = [f"kind: {KIND_MIXED}", f"type: {t}", "valid: yes"]
        obj = {"kind": KIND_MIXED, "type": str(t), "valid": True}
        _emit(args, lines, obj)
        return EXIT_OK

    arr = state.require_pure()
    report = is_campedelli(arr)
    sing = classify_arrangement(arr)
    simple = arr.complex.is_simple
    lines = [f"kind: {KIND_PURE}", f"simple: {'yes' if simple else 'no'}",
             f"campedelli: {'yes' if report.ok else 'no'}"]
    violations = []
    for v in report.violations:
        coords = ", ".join(str(c) for c in v.point.coords)
        idx = ",".join(str(i) for i in v.line_indices)
        labs = ",".join(str(l) for l in v.labels)
        lines.append(
            f"violation: {v.kind} at ({coords}) lines {idx} labels {labs}")
        violations.append({"kind": v.kind, "point": list(v.point.coords),
                           "lines": list(v.line_indices),
                           "labels": [str(l) for l in v.labels]})
    crossings = []
    for mp, verdict in sing.verdicts:
        coords = ", ".join(str(c) for c in mp.point.coords)
        labs = ",".join(str(arr.labeling.labels[i]) for i in mp.line_indices)
        lines.append(
            f"crossing ({coords}) labels {labs}: {verdict.kind} "
            f"({verdict.preimage_count} upstairs)")
        crossings.append({"point": list(mp.point.coords),
                          "labels": labs.split(","),
                          "kind": verdict.kind,
                          "canonical": verdict.canonical})
    if sing.verdicts:
        lines.append(f"all canonical: {'yes' if sing.all_canonical else 'no'}")
    obj = {"kind": KIND_PURE, "simple": simple, "campedelli": report.ok,
           "violations": violations, "crossings": crossings,
           "all_canonical": sing.all_canonical}
    _emit(args, lines, obj)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_cells(args) -> int:
    state = _read_state(args)
    arr = state.require_pure()
    c = arr.complex
    lines = [f"vertices: {c.n_vertices}", f"edges: {c.n_edges}",
             f"faces: {c.n_faces}"]
    sides = {}
    if c.is_simple:
        lines.append(f"type: {type_vector(c)}")
    for fid, name in _sorted_faces(state):
        lines.append(f"face {name}: {c.faces[fid].n_sides} sides")
        sides[name] = c.faces[fid].n_sides
    obj = {"vertices": c.n_vertices, "edges": c.n_edges, "faces": c.n_faces,
           "type_vector": list(type_vector(c).counts) if c.is_simple else None,
           "sides": sides}
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_report(args) -> int:
    state = _read_state(args)
    arr = state.require_pure()
    eq = state.require_equipment()
    rep = build_report(arr, eq, state.name_to_face, state.af.walk_anchors)
    _emit(args, rep.lines(), rep.to_json())
    return EXIT_OK


def cmd_signs(args) -> int:
    state = _read_state(args)
    state.require_pure()
    eq = state.require_equipment()
    names = _display(state)
    lines = []
    table = {}
    for fid, name in _sorted_faces(state):
        lines.append(f"face {name}: {eq.sign(fid)}")
        table[name] = str(eq.sign(fid))
    pos = sorted((face_name(f, names) for f in positive_faces(eq)),
                 key=_name_key)
    lines.append("positive: " + " ".join(pos))
    _emit(args, lines, {"signs": table, "positive": pos})
    return EXIT_OK


def _topology_json(t) -> dict:
    return {"components": t.components,
            "euler_per_component": t.euler_per_component,
            "orientable": t.orientable}


def cmd_topology(args) -> int:
    state = _read_state(args)
    if state.af.kind == KIND_MIXED:
        m = state.require_mixed()
        t = classify_type(m)
        lines = [f"type: {t}"]
        obj = {"type": str(t), "structures": {}}
        for s in REAL_STRUCTURE_TAGS:
            parts = fix_topology(m, s)
            rendered = " + ".join(str(p) for p in parts)
            lines.append(f"fix {s} [class {s.conjugacy_class}]: {rendered}")
            obj["structures"][s.name] = [_topology_json(p) for p in parts]
        _emit(args, lines, obj)
        return EXIT_OK

    arr = state.require_pure()
    c = arr.complex
    lines = []
    faces = {}
    for fid, name in _sorted_faces(state):
        topo = preimage_topology(c.faces[fid], arr.labeling)
        lines.append(f"face {name} ({c.faces[fid].n_sides} sides): {topo}")
        faces[name] = _topology_json(topo)
    obj = {"faces": faces}
    if state.eq is not None:
        rep = build_report(arr, state.eq, state.name_to_face,
                           state.af.walk_anchors)
        for name, topo in rep.real_topology:
            lines.append(f"real part {name}: {topo}")
        lines.append(rep.lines()[-1])
        obj["real_part"] = rep.to_json()["real_part"]
        obj["betti"] = rep.to_json()["betti"]
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_move(args) -> int:
    state = _read_state(args)
    arr = state.require_pure()
    eq = state.require_equipment()
    assert state.name_to_face is not None
    fid = _face_ref_to_id(args.triangle, state.name_to_face,
                          arr.complex.n_faces)
    t = triangle_by_face(arr, fid)
    good = is_good_move(eq, t)
    if not good:
        print("warning: move is not certified good; performing anyway",
              file=sys.stderr)
    rec = reverse_triangle(arr, eq, t)

    af = state.af
    journal = af.journal + (
        MoveDirective(args.triangle, rec.moved_line, rec.parameter),)
    anchor = af.anchor
    if anchor is None and args.anchor is not None:
        ref, triple = _parse_anchor_flag(args.anchor)
        base_c = af.labeled.complex
        base_names = resolve_face_names(af, base_c)
        base_fid = _face_ref_to_id(ref, base_names, base_c.n_faces)
        anchor = AnchorSpec(interior_point(base_c.faces[base_fid]), triple)
    out = ArrangementFile(kind=af.kind, labeled=af.labeled, anchor=anchor,
                          face_names=af.face_names,
                          walk_anchors=af.walk_anchors, journal=journal)
    text = print_arrangement(out)
    inv = rec.invariant
    info = [
        f"reversed {args.triangle}: moved line {rec.moved_line} "
        f"with parameter {format_rational(rec.parameter)}",
        f"good move: {'yes' if good else 'no'}",
        f"invariant: {inv.types} {inv.profile}",
    ]
    for ln in info:
        print(ln, file=sys.stderr)
    if args.journal:
        with open(args.journal, "w", encoding="utf-8") as fh:
            fh.write(print_journal(journal))
    if args.format == "json":
        print(json.dumps({
            "file": text, "triangle": args.triangle,
            "moved_line": rec.moved_line,
            "parameter": format_rational(rec.parameter),
            "good": good, "invariant": f"{inv.types} {inv.profile}",
        }, indent=2))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    from .moves import witness_search

    state = _read_state(args)
    arr = state.require_pure()
    eq = state.require_equipment()
    wg = witness_search(arr, eq, args.depth)
    lines = [f"members: {len(wg.members)}", f"classes: {len(wg.buckets)}"]
    buckets = []
    for i, (inv, idxs) in enumerate(wg.buckets, start=1):
        a, e = wg.members[idxs[0]]
        d = def_invariant(a, e)
        word = "member" if len(idxs) == 1 else "members"
        lines.append(
            f"class {i} ({len(idxs)} {word}): {d.types} {d.profile}")
        buckets.append({"members": len(idxs),
                        "invariant": f"{d.types} {d.profile}"})
    lines.append(f"witness: {'yes' if wg.is_witness else 'no'}")
    _emit(args, lines, {"members": len(wg.members),
                        "classes": len(wg.buckets),
                        "witness": wg.is_witness, "buckets": buckets})
    return EXIT_OK


def cmd_classify_mixed(args) -> int:
    state = _read_state(args)
    m = state.require_mixed()
    t = classify_type(m)
    lines = [f"type: {t}"]
    obj = {"type": str(t), "structures": {}}
    classes = []
    for s in REAL_STRUCTURE_TAGS:
        c = def_class(m, s)
        classes.append(c)
        parts = fix_topology(m, s)
        own, partner = class_invariant(m, s)
        rendered = " + ".join(str(p) for p in parts)
        lines.append(f"structure {s} [class {s.conjugacy_class}]: {c}")
        lines.append(f"  fix: {rendered}")
        lines.append(f"  invariant: own {own} partner {partner}")
        obj["structures"][s.name] = {
            "conjugacy_class": s.conjugacy_class,
            "def_class": c.name,
            "fix": [_topology_json(p) for p in parts],
            "invariant": {"own": list(own), "partner": list(partner)},
        }
    rep = dif_report(classes)
    lines.extend(rep.lines())
    obj["dif_groups"] = [
        {"eulers": list(k), "classes": [c.name for c in cs]}
        for k, cs in rep.groups
    ]
    obj["computed_groups"] = rep.computed_class_count
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_count_classes(args) -> int:
    state = _read_state(args)
    arr = state.require_pure()
    c = arr.complex
    n = count_classes(c)
    auts = len(combinatorial_automorphisms(c))
    lines = [f"classes: {n}", f"automorphisms: {auts}"]
    _emit(args, lines, {"classes": n, "automorphisms": auts})
    return EXIT_OK


_VARS = ("z0", "z1", "z2")


def _term(coeff_str: str, monomial: str, first: bool) -> str:
    sign = "-" if coeff_str.startswith("-") else "+"
    mag = coeff_str.lstrip("-")
    body = monomial if mag == "1" else f"{mag}*{monomial}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def _linear_form(coords) -> str:
    parts = []
    for c, v in zip(coords, _VARS):
        if c == 0:
            continue
        parts.append(_term(format_rational(c), v, not parts))
    return "".join(parts) if parts else "0"


def _gauss_str(g: GaussRational) -> Tuple[str, bool]:
    """Render a Gaussian rational; the flag says it needs parentheses."""
    if g.im == 0:
        return format_rational(g.re), False
    if g.im == 1:
        im = "i"
    elif g.im == -1:
        im = "-i"
    else:
        im = f"{format_rational(g.im)}*i"
    if g.re == 0:
        return im, False
    sign = "+" if not im.startswith("-") else "-"
    return f"{format_rational(g.re)} {sign} {im.lstrip('-')}", True


def _complex_form(line: ComplexProjLine) -> str:
    parts = []
    for g, v in zip(line.coeffs, _VARS):
        if g.re == 0 and g.im == 0:
            continue
        body, wrap = _gauss_str(g)
        if wrap:
            parts.append(("+", f"({body})*{v}"))
        elif body == "1":
            parts.append(("+", v))
        elif body == "-1":
            parts.append(("-", v))
        elif body.startswith("-"):
            parts.append(("-", f"{body.lstrip('-')}*{v}"))
        else:
            parts.append(("+", f"{body}*{v}"))
    if not parts:
        return "0"
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_QUAD_MONOMIALS = ("z0^2", "z1^2", "z2^2", "z0*z1", "z0*z2", "z1*z2")


def _quadratic_form(coeffs) -> str:
    parts = []
    for c, mono in zip(coeffs, _QUAD_MONOMIALS):
        if c == 0:
            continue
        parts.append(_term(str(c), mono, not parts))
    return "".join(parts) if parts else "0"


_PAIRING_ORDER = ("100", "010", "001", "110", "101", "011", "111")


def cmd_emit_equations(args) -> int:
    state = _read_state(args)
    lines: List[str] = []
    if state.af.kind == KIND_PURE:
        arr = state.require_pure()
        forms = {}
        for lab, line in zip(arr.labeling, arr.lines):
            forms[str(lab)] = _linear_form(line.coords)
        equations = []
        for alpha in _PAIRING_ORDER:
            a = int(alpha, 2)
            factors = [
                f"({forms[beta]})" for beta in sorted(forms)
                if bin(a & int(beta, 2)).count("1") % 2 == 1
            ]
            equations.append(f"u_{alpha}^2 = " + "*".join(factors))
        relations = [
            "u_110 = u_100*u_010 / "
            f"(({forms['110']})*({forms['111']}))",
            "u_101 = u_100*u_001 / "
            f"(({forms['101']})*({forms['111']}))",
            "u_011 = u_010*u_001 / "
            f"(({forms['011']})*({forms['111']}))",
            "u_111 = u_100*u_010*u_001 / "
            f"(({forms['110']})*({forms['101']})*({forms['011']})"
            f"*({forms['111']}))",
        ]
        lines.extend(equations)
        lines.extend(relations)
        _emit(args, lines, {"equations": equations, "relations": relations})
        return EXIT_OK

    m = state.require_mixed()
    q1 = _quadratic_form(pair_quadratic(m.cpx_100))
    q2 = _quadratic_form(pair_quadratic(m.cpx_101))
    cpx = {
        "100": _complex_form(m.cpx_100), "010": _complex_form(m.cpx_010),
        "101": _complex_form(m.cpx_101), "011": _complex_form(m.cpx_011),
    }
    real = {
        "110": _linear_form(m.real_110.coords),
        "111": _linear_form(m.real_111.coords),
        "001": _linear_form(m.real_001.coords),
    }
    equations = [
        f"u_100^2 = ({cpx['100']})*({cpx['101']})*({real['110']})*({real['111']})",
        f"u_010^2 = ({cpx['010']})*({cpx['011']})*({real['110']})*({real['111']})",
        f"u_001^2 = q2*({real['111']})*({real['001']})",
        "u_110^2 = q1*q2",
        f"u_101^2 = ({cpx['100']})*({cpx['011']})*({real['110']})*({real['001']})",
        f"u_011^2 = ({cpx['010']})*({cpx['101']})*({real['110']})*({real['001']})",
        f"u_111^2 = q1*({real['111']})*({real['001']})",
    ]
    lines.append(f"q1 = {q1}")
    lines.append(f"q2 = {q2}")
    lines.extend(equations)
    _emit(args, lines, {"q1": q1, "q2": q2, "equations": equations})
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    state = _read_state(args)
    lines: List[str] = []
    rows = []
    mismatches = 0
    if state.af.kind == KIND_PURE:
        arr = state.require_pure()
        c = arr.complex
        for fid, name in _sorted_faces(state):
            face = c.faces[fid]
            labels = tuple(arr.labeling.labels[i] for i in face.side_lines)
            closed = preimage_topology(face, arr.labeling)
            oracle = glue_oracle(GluedSurface(labels))
            match = closed == oracle
            if not match:
                mismatches += 1
            lines.append(
                f"face {name}: closed {closed} | oracle {oracle} | "
                f"{'match' if match else 'MISMATCH'}")
            rows.append({"face": name, "closed": _topology_json(closed),
                         "oracle": _topology_json(oracle), "match": match})
    else:
        m = state.require_mixed()
        one_per_class = [s for s in REAL_STRUCTURE_TAGS
                         if s.name.startswith("c+")]
        for s in one_per_class:
            quads = (1, 3) if s.conjugacy_class == "c+" else (2, 4)
            for quad, piece in zip(quads, fix_topology(m, s)):
                n = (1 - piece.euler_per_component) // 2
                oracle = glue_oracle(
                    GluedSurface(QUADRANT_SIDE_LABELS, (Label(6),) * n))
                match = (oracle.components == 2
                         and oracle.euler_per_component
                         == piece.euler_per_component
                         and not oracle.orientable)
                if not match:
                    mismatches += 1
                word = "vertex" if n == 1 else "vertices"
                lines.append(
                    f"quadrant {quad} ({n} pair {word}): closed {piece} "
                    f"| oracle {oracle} | {'match' if match else 'MISMATCH'}")
                rows.append({"quadrant": quad, "pair_vertices": n,
                             "closed": _topology_json(piece),
                             "oracle": _topology_json(oracle),
                             "match": match})
    lines.append(f"mismatches: {mismatches}")
    _emit(args, lines, {"rows": rows, "mismatches": mismatches})
    return EXIT_OK if mismatches == 0 else EXIT_INVALID


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="campedelli",
        description="Exact combinatorics of labeled line arrangements "
                    "and their branched covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, anchor=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="arrangement file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if anchor:
            p.add_argument("--anchor", metavar="FACE:SIGNS", default=None,
                           help="equipment seed, overrides the file anchor")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check arrangement validity")
    add("cells", cmd_cells, "cell complex statistics")
    add("report", cmd_report, "full table report", anchor=True)
    add("signs", cmd_signs, "per-face sign table", anchor=True)
    add("topology", cmd_topology, "covering topology per face", anchor=True)
    p_move = add("move", cmd_move, "reverse one triangle", anchor=True)
    p_move.add_argument("triangle", help="face name or id to reverse")
    p_move.add_argument("--journal", metavar="PATH", default=None,
                        help="also write the accumulated journal here")
    p_search = add("search", cmd_search, "breadth-first witness search",
                   anchor=True)
    p_search.add_argument("--depth", type=int, default=3)
    add("classify-mixed", cmd_classify_mixed,
        "deformation classes of a mixed arrangement")
    add("count-classes", cmd_count_classes,
        "orbit count of labeled sign states")
    add("emit-equations", cmd_emit_equations,
        "covering equations with concrete forms")
    add("oracle-check", cmd_oracle_check,
        "closed forms against the gluing oracle")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except _DEGENERATE_ERRORS as e:
        print(f"degenerate input: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except CommandError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (NotATriangle, InconsistentEquipment, CannotPerturb,
            MalformedGluing, DependentSides) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except CampedelliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
