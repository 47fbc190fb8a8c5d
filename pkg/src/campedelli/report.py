"""Structured reports for an equipped arrangement.

Collects the classification tables in one record: global type vector,
per-face side counts, anchored neighbor walks, the positive-polygon
profile, and the topology and Betti totals of the real part.  The text
renderers are byte-stable so golden fixtures can compare literally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import CellComplex, type_vector
from .covering import (BettiSummary, SmithThomReport, SurfaceTopology, betti,
                       real_part, smith_thom_report)
from .equipment import (SignEquipment, adjacency_profile, anchored_walk,
                        positive_faces)
from .labeling import LabeledArrangement

_NAME_RE = re.compile(r"^(\D*)(\d+)$")


def _name_key(name: str):
    m = _NAME_RE.match(name)
    if m:
        return (0, m.group(1), int(m.group(2)))
    return (1, name, 0)


def display_names(n_faces: int, name_to_face: Optional[Dict[str, int]]) -> Dict[int, str]:
    """Invert a face-name map; unnamed faces render as F<id>."""
    names: Dict[int, str] = {}
    if name_to_face:
        for name, fid in name_to_face.items():
            names[fid] = name
    return names


def face_name(fid: int, names: Dict[int, str]) -> str:
    return names.get(fid, f"F{fid}")


def render_walk(c: CellComplex, fid: int, first: int, second: int,
                names: Dict[int, str]) -> str:
    """Anchored neighbor walk as count_name tokens, primes mark corners."""
    toks = []
    for count, nb, is_corner in anchored_walk(c, fid, first, second):
        nm = names.get(nb, f"F{nb}")
        sub = nm[1:] if nm.startswith("P") else nm
        toks.append(f"{count}_{sub}" + ("'" if is_corner else ""))
    return "(" + ",".join(toks) + ")"


def render_anchored_profile(c: CellComplex,
                            anchors: Sequence[Tuple[int, int, int]]) -> str:
    """Counts-and-primes walks of chosen faces, concatenated as one tuple."""
    parts = []
    for fid, first, second in anchors:
        toks = [
            str(count) + ("'" if is_corner else "")
            for count, _, is_corner in anchored_walk(c, fid, first, second)
        ]
        parts.append("(" + ",".join(toks) + ")")
    return "(" + ",".join(parts) + ")"


def side_count_row(counts: Sequence[int]) -> str:
    """Space-separated side counts, split into groups of eight by slashes."""
    chunks = [counts[i:i + 8] for i in range(0, len(counts), 8)]
    return " / ".join(" ".join(str(v) for v in c) for c in chunks)


@dataclass(frozen=True)
class Report:
    """One arrangement's tables, ready for text or JSON rendering."""

    type_vector: Tuple[int, int, int, int, int]
    side_counts: Tuple[Tuple[str, int], ...]
    row_names: Tuple[str, ...]
    walks: Tuple[Tuple[str, str], ...]
    positive: Tuple[str, ...]
    profile: str
    real_topology: Tuple[Tuple[str, SurfaceTopology], ...]
    betti_totals: BettiSummary
    smith_thom: SmithThomReport

    def row(self) -> str:
        by_name = dict(self.side_counts)
        return side_count_row([by_name[n] for n in self.row_names])

    def lines(self) -> List[str]:
        out = [f"type {_format_type(self.type_vector)}"]
        out.append("positive: " + " ".join(self.positive))
        if self.row_names:
            out.append(
                f"sides {self.row_names[0]}..{self.row_names[-1]}: "
                + self.row())
        for name, walk in self.walks:
            out.append(f"walk {name}: {walk}")
        out.append(f"profile: {self.profile}")
        for name, topo in self.real_topology:
            out.append(f"real part {name}: {topo}")
        st = self.smith_thom
        z2cmp = "<=" if st.z2_within else ">"
        qcmp = ">" if st.q_exceeds else "<="
        out.append(
            f"betti: Z/2 {st.z2_total} {z2cmp} {st.z2_bound}; "
            f"Q {st.q_total} {qcmp} {st.q_complex}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def to_json(self) -> dict:
        return {
            "type_vector": list(self.type_vector),
            "side_counts": {n: v for n, v in self.side_counts},
            "row_names": list(self.row_names),
            "row": self.row() if self.row_names else "",
            "walks": {n: w for n, w in self.walks},
            "positive": list(self.positive),
            "profile": self.profile,
            "real_part": {
                n: {
                    "components": t.components,
                    "euler_per_component": t.euler_per_component,
                    "orientable": t.orientable,
                }
                for n, t in self.real_topology
            },
            "betti": {
                "z2_total": self.betti_totals.z2_total,
                "q_total": self.betti_totals.q_total,
                "z2_bound": self.smith_thom.z2_bound,
                "z2_within": self.smith_thom.z2_within,
                "q_complex": self.smith_thom.q_complex,
                "q_exceeds": self.smith_thom.q_exceeds,
            },
        }


def _format_type(tv: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in tv) + ")"


def build_report(arr: LabeledArrangement, eq: SignEquipment,
                 name_to_face: Optional[Dict[str, int]] = None,
                 walk_anchors: Optional[Dict[str, Tuple[str, str]]] = None) -> Report:
    """Assemble the full report.

    name_to_face maps display names to face ids; walk_anchors picks, per
    named face, the two neighbor names its walk starts from.  Faces with a
    walk anchor get a walk line and stay out of the side-count row.  The
    profile uses the anchored walks of P1 and P2 when both are anchored,
    matching the published table layout, and falls back to the canonical
    sorted profile otherwise.
    """
    c = arr.complex
    name_to_face = dict(name_to_face or {})
    walk_anchors = dict(walk_anchors or {})
    names = display_names(c.n_faces, name_to_face)

    ordered = sorted(range(c.n_faces), key=lambda f: _name_key(face_name(f, names)))
    side_counts = tuple(
        (face_name(f, names), c.faces[f].n_sides) for f in ordered)
    row_names = tuple(
        face_name(f, names) for f in ordered
        if face_name(f, names) not in walk_anchors)

    walks = []
    for name in sorted(walk_anchors, key=_name_key):
        fid = name_to_face[name]
        a, b = walk_anchors[name]
        walks.append(
            (name, render_walk(c, fid, name_to_face[a], name_to_face[b], names)))

    pos = tuple(sorted(
        (face_name(f, names) for f in positive_faces(eq)), key=_name_key))

    if "P1" in walk_anchors and "P2" in walk_anchors:
        anchors = []
        for name in ("P1", "P2"):
            a, b = walk_anchors[name]
            anchors.append(
                (name_to_face[name], name_to_face[a], name_to_face[b]))
        profile = render_anchored_profile(c, anchors)
    else:
        profile = str(adjacency_profile(arr, eq))

    topo = tuple(
        (face_name(fid, names), t) for fid, t in real_part(arr, eq))
    b = betti([t for _, t in topo])

    return Report(
        type_vector=type_vector(c),
        side_counts=side_counts,
        row_names=row_names,
        walks=tuple(walks),
        positive=pos,
        profile=profile,
        real_topology=topo,
        betti_totals=b,
        smith_thom=smith_thom_report(b),
    )
