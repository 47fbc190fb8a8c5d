"""Reading and writing arrangement files.

The format is line oriented text with an explicit version header.  The
first line is "campedelli/1 purely_real" or "campedelli/1 mixed_real";
every following non-blank line starts with a directive word.  Blank lines
and full-line comments starting with "#" are accepted on input and never
produced on output, so a canonical file (one produced by print_arrangement)
parses back to an equal value.

Directives in purely real files:

    line <label> <c0> <c1> <c2>     one of seven lines, rational covector
    anchor <x0> <x1> <x2> <signs>   equipment seed: sample point, sign triple
    facemap <name> <x0> <x1> <x2>   names a face by an interior sample point
    walkanchor <face> <nb1> <nb2>   neighbor pair fixing a walk direction
    move <face> <line> <t>          journal entry (kept in file order)

Mixed files replace the seven line directives by three real carriers and
one stored member per conjugate pair (the other member is its conjugate):

    rline <label> <c0> <c1> <c2>                 labels 110, 111, 001
    cline <label> <re0> <im0> <re1> <im1> <re2> <im2>   labels 100, 101

A journal can also live in its own file with header "campedelli/1 journal"
holding only move directives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .equipment import SignTriple
from .errors import DuplicateLine, ParseError
from .exactgeom import (
    ComplexProjLine,
    GaussRational,
    ProjLine,
    ProjPoint,
    format_rational,
    rational,
)
from .labeling import Label, LabeledArrangement, Labeling
from .mixedreal import MixedArrangement

HEADER = "campedelli/1"

KIND_PURE = "purely_real"
KIND_MIXED = "mixed_real"

REAL_LINE_LABELS = ("110", "111", "001")
PAIR_LINE_LABELS = ("100", "101")


@dataclass(frozen=True)
class AnchorSpec:
    """Equipment seed: a point interior to some face plus its sign triple."""

    point: ProjPoint
    signs: SignTriple


@dataclass(frozen=True)
class MoveDirective:
    """One journal entry: which face was reversed, which line moved, and
    the exact pencil parameter that was used."""

    face_ref: str
    line_index: int
    parameter: Fraction


@dataclass
class ArrangementFile:
    """Everything a file carries: the arrangement itself plus the optional
    anchor, face naming, walk anchors, and move journal."""

    kind: str
    labeled: Optional[LabeledArrangement] = None
    mixed: Optional[MixedArrangement] = None
    anchor: Optional[AnchorSpec] = None
    face_names: Dict[str, ProjPoint] = field(default_factory=dict)
    walk_anchors: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    journal: Tuple[MoveDirective, ...] = ()

    @property
    def lines(self) -> Tuple[ProjLine, ...]:
        assert self.labeled is not None, "only purely real files carry lines"
        return self.labeled.lines


class _Cursor:
    """Token access with line and column tracking for error messages."""

    def __init__(self, lineno: int, raw: str):
        self.lineno = lineno
        self.raw = raw
        self.tokens: List[Tuple[str, int]] = []
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col)
            self.tokens.append((tok, col + 1))
            col += len(tok)
        self.pos = 0

    def fail(self, message: str, column: Optional[int] = None) -> ParseError:
        where = f"line {self.lineno}"
        if column is not None:
            where += f", column {column}"
        return ParseError(f"{where}: {message}")

    def take(self, what: str) -> Tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise self.fail(f"missing {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def done(self) -> None:
        if self.pos != len(self.tokens):
            tok, col = self.tokens[self.pos]
            raise self.fail(f"unexpected trailing token {tok!r}", col)

    def rational(self, what: str) -> Fraction:
        tok, col = self.take(what)
        try:
            return rational(tok)
        except (ValueError, ZeroDivisionError):
            raise self.fail(f"bad rational {tok!r} for {what}", col) from None

    def integer(self, what: str) -> int:
        tok, col = self.take(what)
        try:
            return int(tok)
        except ValueError:
            raise self.fail(f"bad integer {tok!r} for {what}", col) from None

    def label(self) -> Tuple[Label, int]:
        tok, col = self.take("label")
        try:
            return Label.parse(tok), col
        except ValueError:
            raise self.fail(f"bad label {tok!r}", col) from None

    def point(self, what: str) -> ProjPoint:
        coords = [self.rational(f"{what} coordinate") for _ in range(3)]
        try:
            return ProjPoint(*coords)
        except ValueError:
            raise self.fail(f"{what} is the zero triple") from None


def _physical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield _Cursor(lineno, raw)


def parse_arrangement(text: str) -> ArrangementFile:
    """Parse a full arrangement file.

    Syntax problems raise ParseError with the line (and usually column).
    Geometric invalidity that the file format cannot express, such as two
    coinciding lines, raises the matching semantic error instead.
    """
    rows = list(_physical_lines(text))
    if not rows:
        raise ParseError("line 1: empty file, expected a header")
    head = rows[0]
    word, col = head.take("header")
    if word != HEADER:
        raise head.fail(f"expected header {HEADER!r}, got {word!r}", col)
    kind, col = head.take("file kind")
    if kind not in (KIND_PURE, KIND_MIXED):
        raise head.fail(f"unknown file kind {kind!r}", col)
    head.done()

    plain: List[Tuple[Label, ProjLine]] = []
    reals: Dict[str, ProjLine] = {}
    halves: Dict[str, ComplexProjLine] = {}
    anchor: Optional[AnchorSpec] = None
    anchor_row: Optional[_Cursor] = None
    face_names: Dict[str, ProjPoint] = {}
    face_rows: Dict[str, _Cursor] = {}
    walk_anchors: Dict[str, Tuple[str, str]] = {}
    walk_rows: List[Tuple[_Cursor, str, str, str]] = []
    journal: List[MoveDirective] = []

    for row in rows[1:]:
        word, col = row.take("directive")
        if word == "line":
            if kind != KIND_PURE:
                raise row.fail("'line' is only valid in purely_real files", col)
            lab, _ = row.label()
            coords = [row.rational("coefficient") for _ in range(3)]
            row.done()
            try:
                plain.append((lab, ProjLine(*coords)))
            except ValueError:
                raise row.fail("zero covector does not define a line") from None
        elif word == "rline":
            if kind != KIND_MIXED:
                raise row.fail("'rline' is only valid in mixed_real files", col)
            lab, lcol = row.label()
            if str(lab) not in REAL_LINE_LABELS:
                raise row.fail(
                    f"real carriers are labeled {', '.join(REAL_LINE_LABELS)}", lcol
                )
            if str(lab) in reals:
                raise row.fail(f"duplicate rline for label {lab}", lcol)
            coords = [row.rational("coefficient") for _ in range(3)]
            row.done()
            try:
                reals[str(lab)] = ProjLine(*coords)
            except ValueError:
                raise row.fail("zero covector does not define a line") from None
        elif word == "cline":
            if kind != KIND_MIXED:
                raise row.fail("'cline' is only valid in mixed_real files", col)
            lab, lcol = row.label()
            if str(lab) not in PAIR_LINE_LABELS:
                raise row.fail(
                    "store one member per pair, labeled "
                    f"{' or '.join(PAIR_LINE_LABELS)}; the conjugate is derived",
                    lcol,
                )
            if str(lab) in halves:
                raise row.fail(f"duplicate cline for label {lab}", lcol)
            parts = [row.rational("re/im part") for _ in range(6)]
            row.done()
            coeffs = [
                GaussRational(parts[0], parts[1]),
                GaussRational(parts[2], parts[3]),
                GaussRational(parts[4], parts[5]),
            ]
            try:
                halves[str(lab)] = ComplexProjLine(*coeffs)
            except ValueError:
                raise row.fail("zero covector does not define a line") from None
        elif word == "anchor":
            if kind != KIND_PURE:
                raise row.fail("'anchor' is only valid in purely_real files", col)
            if anchor is not None:
                raise row.fail("a file carries at most one anchor", col)
            point = row.point("anchor point")
            tok, scol = row.take("sign triple")
            row.done()
            try:
                signs = SignTriple.parse(tok)
            except ValueError:
                raise row.fail(f"bad sign triple {tok!r}", scol) from None
            anchor = AnchorSpec(point, signs)
            anchor_row = row
        elif word == "facemap":
            if kind != KIND_PURE:
                raise row.fail("'facemap' is only valid in purely_real files", col)
            name, ncol = row.take("face name")
            if name.lstrip("-").isdigit():
                raise row.fail("face names must not look like integers", ncol)
            if name in face_names:
                raise row.fail(f"duplicate face name {name!r}", ncol)
            face_names[name] = row.point("face sample point")
            face_rows[name] = row
            row.done()
        elif word == "walkanchor":
            if kind != KIND_PURE:
                raise row.fail("'walkanchor' is only valid in purely_real files", col)
            face, _ = row.take("face name")
            nb1, _ = row.take("first neighbor name")
            nb2, _ = row.take("second neighbor name")
            row.done()
            if face in walk_anchors:
                raise row.fail(f"duplicate walkanchor for {face!r}")
            walk_anchors[face] = (nb1, nb2)
            walk_rows.append((row, face, nb1, nb2))
        elif word == "move":
            if kind != KIND_PURE:
                raise row.fail("'move' is only valid in purely_real files", col)
            face_ref, _ = row.take("face reference")
            line_index = row.integer("line index")
            parameter = row.rational("parameter")
            row.done()
            journal.append(MoveDirective(face_ref, line_index, parameter))
        else:
            raise row.fail(f"unknown directive {word!r}", col)

    if kind == KIND_PURE:
        if len(plain) != 7:
            raise ParseError(
                f"line {rows[-1].lineno}: expected 7 'line' directives, got {len(plain)}"
            )
        lines = tuple(line for _, line in plain)
        for i in range(7):
            for j in range(i + 1, 7):
                if lines[i] == lines[j]:
                    raise DuplicateLine(f"lines {i} and {j} coincide")
        labeled = LabeledArrangement(lines, Labeling([lab for lab, _ in plain]))
        mixed = None
        if anchor is not None:
            offending = _on_some_line(anchor.point, lines)
            if offending is not None:
                raise anchor_row.fail(
                    f"anchor point lies on line {offending}"
                )
        for name, pt in face_names.items():
            offending = _on_some_line(pt, lines)
            if offending is not None:
                raise face_rows[name].fail(
                    f"sample point of {name!r} lies on line {offending}"
                )
        for row, face, nb1, nb2 in walk_rows:
            for ref in (face, nb1, nb2):
                if ref not in face_names:
                    raise row.fail(f"walkanchor references unknown face {ref!r}")
    else:
        missing = [lab for lab in REAL_LINE_LABELS if lab not in reals]
        if missing:
            raise ParseError(
                f"line {rows[-1].lineno}: missing rline for {', '.join(missing)}"
            )
        missing = [lab for lab in PAIR_LINE_LABELS if lab not in halves]
        if missing:
            raise ParseError(
                f"line {rows[-1].lineno}: missing cline for {', '.join(missing)}"
            )
        labeled = None
        mixed = MixedArrangement.from_half(
            reals["110"], reals["111"], reals["001"], halves["100"], halves["101"]
        )

    return ArrangementFile(
        kind=kind,
        labeled=labeled,
        mixed=mixed,
        anchor=anchor,
        face_names=face_names,
        walk_anchors=walk_anchors,
        journal=tuple(journal),
    )


def _on_some_line(p: ProjPoint, lines: Tuple[ProjLine, ...]) -> Optional[int]:
    for i, line in enumerate(lines):
        if line(p) == 0:
            return i
    return None


def _fmt_point(p: ProjPoint) -> str:
    return " ".join(str(c) for c in p.coords)


def print_arrangement(af: ArrangementFile) -> str:
    """Serialize to canonical text; parse_arrangement inverts this."""
    out: List[str] = [f"{HEADER} {af.kind}"]
    if af.kind == KIND_PURE:
        assert af.labeled is not None
        for lab, line in zip(af.labeled.labeling, af.labeled.lines):
            coeffs = " ".join(str(c) for c in line.coords)
            out.append(f"line {lab} {coeffs}")
    else:
        assert af.mixed is not None
        m = af.mixed
        for lab, line in (("110", m.real_110), ("111", m.real_111), ("001", m.real_001)):
            coeffs = " ".join(str(c) for c in line.coords)
            out.append(f"rline {lab} {coeffs}")
        for lab, cline in (("100", m.cpx_100), ("101", m.cpx_101)):
            parts = " ".join(
                f"{format_rational(c.re)} {format_rational(c.im)}" for c in cline.coeffs
            )
            out.append(f"cline {lab} {parts}")
    if af.anchor is not None:
        out.append(f"anchor {_fmt_point(af.anchor.point)} {af.anchor.signs}")
    for name, pt in af.face_names.items():
        out.append(f"facemap {name} {_fmt_point(pt)}")
    for face, (nb1, nb2) in af.walk_anchors.items():
        out.append(f"walkanchor {face} {nb1} {nb2}")
    for mv in af.journal:
        out.append(f"move {mv.face_ref} {mv.line_index} {format_rational(mv.parameter)}")
    return "\n".join(out) + "\n"


def parse_journal(text: str) -> Tuple[MoveDirective, ...]:
    """Parse a standalone journal file (header "campedelli/1 journal")."""
    rows = list(_physical_lines(text))
    if not rows:
        raise ParseError("line 1: empty file, expected a header")
    head = rows[0]
    word, col = head.take("header")
    if word != HEADER:
        raise head.fail(f"expected header {HEADER!r}, got {word!r}", col)
    kind, col = head.take("file kind")
    if kind != "journal":
        raise head.fail(f"expected kind 'journal', got {kind!r}", col)
    head.done()
    moves: List[MoveDirective] = []
    for row in rows[1:]:
        word, col = row.take("directive")
        if word != "move":
            raise row.fail(f"journal files hold only 'move' directives, got {word!r}", col)
        face_ref, _ = row.take("face reference")
        line_index = row.integer("line index")
        parameter = row.rational("parameter")
        row.done()
        moves.append(MoveDirective(face_ref, line_index, parameter))
    return tuple(moves)


def print_journal(moves: Tuple[MoveDirective, ...]) -> str:
    out = [f"{HEADER} journal"]
    for mv in moves:
        out.append(f"move {mv.face_ref} {mv.line_index} {format_rational(mv.parameter)}")
    return "\n".join(out) + "\n"


def resolve_face_names(af: ArrangementFile, complex_) -> Dict[str, int]:
    """Face ids for every named face, by locating the sample points.

    Two names landing on the same face mean the naming no longer matches
    the arrangement, which is reported as a ParseError since the file as
    a whole is inconsistent.
    """
    ids: Dict[str, int] = {}
    seen: Dict[int, str] = {}
    for name, pt in af.face_names.items():
        fid = complex_.locate(pt)
        other = seen.get(fid)
        if other is not None:
            raise ParseError(
                f"face names {other!r} and {name!r} sample the same face {fid}"
            )
        seen[fid] = name
        ids[name] = fid
    return ids
