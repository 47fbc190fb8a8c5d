"""Classification of covering-space singularities over crossing points.

Above a point where several branch lines meet, the eightfold cover has one
point for each coset of the subgroup spanned by the incident labels.  The
local analytic type of those points depends only on the multiset of labels,
which is what gets classified here.  Repeated labels are allowed so the
classification also covers non-injective line markings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .arrangement import MultiplePoint, line_intersections
from .errors import InvalidMultiplicity
from .labeling import Label, LabeledArrangement, span

SMOOTH = "smooth"
FOUR_A1 = "4xA1"
ONE_A1 = "A1"
TWO_A3 = "2xA3"
FOUR_D4 = "4xD4"
NON_CANONICAL = "non-canonical"

_CANONICAL_KINDS = frozenset({SMOOTH, FOUR_A1, ONE_A1, TWO_A3, FOUR_D4})


@dataclass(frozen=True)
class PointLabelData:
    """The multiset of labels of the lines through one point."""

    labels: Tuple[Label, ...]

    def __post_init__(self) -> None:
        if len(self.labels) < 2:
            raise InvalidMultiplicity(
                f"need at least 2 lines through a point, got {len(self.labels)}"
            )
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @property
    def r(self) -> int:
        return len(self.labels)

    @property
    def total(self) -> int:
        """Code of the xor of all labels (0 when they cancel)."""
        t = 0
        for lab in self.labels:
            t ^= lab.code
        return t

    @property
    def s(self) -> int:
        """How many of the labels equal the total sum."""
        t = self.total
        return sum(1 for lab in self.labels if lab.code == t)

    @property
    def span_dim(self) -> int:
        return span(self.labels)[0]

    @property
    def is_branch(self) -> bool:
        """Whether the local deck action is nontrivial on the fibre glueing."""
        return self.total != 0


@dataclass(frozen=True)
class SingularityVerdict:
    kind: str
    preimage_count: int

    @property
    def canonical(self) -> bool:
        return self.kind in _CANONICAL_KINDS

    def __str__(self) -> str:
        return self.kind


LabelsLike = Union[PointLabelData, Iterable[Label]]


def _coerce(d: LabelsLike) -> PointLabelData:
    if isinstance(d, PointLabelData):
        return d
    return PointLabelData(tuple(d))


def zero_sum_triple(labels: LabelsLike) -> bool:
    """True for exactly three labels cancelling to zero.

    Contracting a triangle whose sides carry such labels produces the one
    degenerate crossing whose cover acquires non-canonical germs, so move
    planning needs this predicate on its own.
    """
    d = _coerce(labels)
    return d.r == 3 and d.total == 0


def classify_point(d: LabelsLike) -> SingularityVerdict:
    d = _coerce(d)
    upstairs = 8 >> d.span_dim
    if d.r == 2:
        a, b = d.labels
        if a == b:
            return SingularityVerdict(FOUR_A1, upstairs)
        return SingularityVerdict(SMOOTH, upstairs)
    if d.r == 3:
        if d.total == 0:
            return SingularityVerdict(NON_CANONICAL, upstairs)
        if d.s == 0:
            return SingularityVerdict(ONE_A1, upstairs)
        if d.s == 1:
            return SingularityVerdict(TWO_A3, upstairs)
        assert d.s == 3, f"impossible label pattern {d.labels}"
        return SingularityVerdict(FOUR_D4, upstairs)
    return SingularityVerdict(NON_CANONICAL, upstairs)


@dataclass(frozen=True)
class ArrangementSingularities:
    verdicts: Tuple[Tuple[MultiplePoint, SingularityVerdict], ...]
    all_canonical: bool

    def as_dict(self) -> Dict[MultiplePoint, SingularityVerdict]:
        return dict(self.verdicts)


def classify_arrangement(arr: LabeledArrangement) -> ArrangementSingularities:
    """Classify every crossing whose cover is not smooth.

    Smooth crossings (two lines with distinct labels) are omitted, so a
    simple arrangement with a bijective labeling reports nothing.
    """
    entries: List[Tuple[MultiplePoint, SingularityVerdict]] = []
    ok = True
    for point, incident in sorted(line_intersections(arr.lines).items(),
                                  key=lambda kv: kv[0].coords):
        data = PointLabelData(tuple(arr.labeling.labels[i] for i in incident))
        verdict = classify_point(data)
        if verdict.kind == SMOOTH:
            continue
        entries.append((MultiplePoint(point, incident), verdict))
        ok = ok and verdict.canonical
    return ArrangementSingularities(tuple(entries), ok)
