"""Labels on arrangement lines and the renumbering group.

A label is a nonzero vector of (Z/2)^3, written as a bit string like "101".
Internally a label is a code in 1..7 where the top bit is the first
character, so "100" is 4, "010" is 2, "001" is 1.  The sum of two labels is
the xor of their codes.  A renumbering is an invertible linear map of
(Z/2)^3, stored by the images of the three basis labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import CampedelliError
from .exactgeom import ProjLine, ProjPoint


class Label:
    """Nonzero element of (Z/2)^3."""

    __slots__ = ("code",)

    def __init__(self, code: int):
        if not 1 <= code <= 7:
            raise ValueError(f"label code out of range: {code}")
        self.code = code

    @staticmethod
    def parse(text: str) -> "Label":
        text = text.strip()
        if len(text) != 3 or any(ch not in "01" for ch in text):
            raise ValueError(f"not a label bit string: {text!r}")
        code = int(text, 2)
        if code == 0:
            raise ValueError("the zero vector is not a label")
        return Label(code)

    @property
    def bits(self) -> Tuple[int, int, int]:
        c = self.code
        return ((c >> 2) & 1, (c >> 1) & 1, c & 1)

    def __xor__(self, other: "Label") -> int:
        """Xor of codes; may be 0, so the result is a bare int code."""
        return self.code ^ other.code

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Label) and self.code == other.code

    def __lt__(self, other: "Label") -> bool:
        return self.code < other.code

    def __hash__(self) -> int:
        return hash(("Label", self.code))

    def __str__(self) -> str:
        return format(self.code, "03b")

    def __repr__(self) -> str:
        return f"Label({self})"


ALL_LABELS: Tuple[Label, ...] = tuple(Label(c) for c in range(1, 8))


def label_sum(labels: Iterable[Label]) -> int:
    """Xor of the codes; 0 means the labels sum to zero in (Z/2)^3."""
    total = 0
    for lab in labels:
        total ^= lab.code
    return total


def span(labels: Iterable[Label]) -> Tuple[int, FrozenSet[int]]:
    """Linear span of a set of labels.

    Returns (dimension, codes of all span elements including 0).
    """
    members = {0}
    for lab in labels:
        if lab.code not in members:
            members |= {m ^ lab.code for m in members}
    size = len(members)
    dim = size.bit_length() - 1
    assert 1 << dim == size
    return dim, frozenset(members)


class Renumbering:
    """Invertible linear map of (Z/2)^3 acting on labels."""

    __slots__ = ("basis_images", "_table")

    def __init__(self, basis_images: Tuple[int, int, int]):
        table = _perm_table(basis_images)
        if table is None:
            raise ValueError(f"not an invertible map: {basis_images}")
        self.basis_images = basis_images
        self._table = table

    def __call__(self, label: Label) -> Label:
        return Label(self._table[label.code])

    def apply_code(self, code: int) -> int:
        """Apply to a bare code in 0..7 (0 maps to 0)."""
        return self._table[code]

    def compose(self, other: "Renumbering") -> "Renumbering":
        """self after other."""
        return Renumbering(tuple(self._table[i] for i in other.basis_images))  # type: ignore[arg-type]

    def inverse(self) -> "Renumbering":
        inv = [0] * 8
        for src in range(8):
            inv[self._table[src]] = src
        return Renumbering((inv[4], inv[2], inv[1]))

    def is_identity(self) -> bool:
        return self.basis_images == (4, 2, 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Renumbering) and self.basis_images == other.basis_images

    def __hash__(self) -> int:
        return hash(("Renumbering", self.basis_images))

    def __repr__(self) -> str:
        imgs = ",".join(format(i, "03b") for i in self.basis_images)
        return f"Renumbering({imgs})"


def _perm_table(basis_images: Tuple[int, int, int]) -> Optional[List[int]]:
    """Table of images for codes 0..7, or None when not invertible."""
    table = [0] * 8
    for code in range(1, 8):
        img = 0
        if code & 4:
            img ^= basis_images[0]
        if code & 2:
            img ^= basis_images[1]
        if code & 1:
            img ^= basis_images[2]
        table[code] = img
    if len(set(table)) != 8:
        return None
    return table


IDENTITY_RENUMBERING = Renumbering((4, 2, 1))


def all_renumberings() -> List[Renumbering]:
    """The 168 invertible linear maps of (Z/2)^3."""
    out = []
    for a in range(1, 8):
        for b in range(1, 8):
            if b == a:
                continue
            for c in range(1, 8):
                if c in (a, b, a ^ b):
                    continue
                out.append(Renumbering((a, b, c)))
    assert len(out) == 168
    return out


@dataclass
class CampedelliViolation:
    """One offending point of a labeled arrangement."""

    point: ProjPoint
    kind: str  # "multiplicity" or "zero-sum-triple"
    line_indices: Tuple[int, ...]
    labels: Tuple[Label, ...]

    def __str__(self) -> str:
        labels = ",".join(str(lab) for lab in self.labels)
        coords = ":".join(str(c) for c in self.point.coords)
        return f"{self.kind} at ({coords}) lines {self.line_indices} labels {labels}"


@dataclass
class CampedelliReport:
    ok: bool
    violations: List[CampedelliViolation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


class Labeling:
    """Assignment of labels to the lines of an arrangement, by line index."""

    __slots__ = ("labels",)

    def __init__(self, labels: Sequence[Label]):
        self.labels = tuple(labels)

    def __getitem__(self, line_index: int) -> Label:
        return self.labels[line_index]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Labeling) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(("Labeling", self.labels))

    def is_bijective(self) -> bool:
        return len(self.labels) == 7 and {lab.code for lab in self.labels} == set(range(1, 8))

    def codes(self) -> Tuple[int, ...]:
        return tuple(lab.code for lab in self.labels)

    def __repr__(self) -> str:
        return "Labeling(" + ",".join(str(lab) for lab in self.labels) + ")"


def apply_renumbering(labeling: Labeling, r: Renumbering) -> Labeling:
    """Relabel every line through the renumbering."""
    return Labeling([r(lab) for lab in labeling])


@dataclass
class LabeledArrangement:
    """Lines together with their labels.

    The cell complex is built on demand by the arrangement module and cached
    here; import happens inside the property to keep module layering simple.
    """

    lines: Tuple[ProjLine, ...]
    labeling: Labeling
    _complex: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.lines = tuple(self.lines)
        if len(self.lines) != len(self.labeling):
            raise CampedelliError(
                f"{len(self.lines)} lines but {len(self.labeling)} labels"
            )

    @property
    def complex(self):
        if self._complex is None:
            from .arrangement import build_complex

            self._complex = build_complex(self.lines)
        return self._complex

    def label_of(self, line_index: int) -> Label:
        return self.labeling[line_index]

    def with_labeling(self, labeling: Labeling) -> "LabeledArrangement":
        return LabeledArrangement(self.lines, labeling, self._complex)


def is_campedelli(arr: LabeledArrangement) -> CampedelliReport:
    """Check the two point conditions of a Campedelli arrangement.

    A labeled arrangement passes when no point lies on four or more lines
    and no triple point has side labels summing to zero.  The report lists
    every offending point with its projective coordinates.
    """
    from .arrangement import line_intersections

    violations: List[CampedelliViolation] = []
    for point, idxs in line_intersections(arr.lines).items():
        if len(idxs) < 3:
            continue
        labels = tuple(arr.labeling[i] for i in idxs)
        if len(idxs) >= 4:
            violations.append(
                CampedelliViolation(point, "multiplicity", tuple(idxs), labels)
            )
        elif label_sum(labels) == 0:
            violations.append(
                CampedelliViolation(point, "zero-sum-triple", tuple(idxs), labels)
            )
    violations.sort(key=lambda v: v.point.coords)
    return CampedelliReport(not violations, violations)
