"""Shared fixtures: packaged arrangement files and seeded random generators."""

import random
from pathlib import Path

import pytest

import campedelli
from campedelli.arrangement import line_intersections
from campedelli.equipment import propagate
from campedelli.errors import CampedelliError
from campedelli.exactgeom import ComplexProjLine, GaussRational, ProjLine
from campedelli.fileio import parse_arrangement, resolve_face_names
from campedelli.labeling import Label, LabeledArrangement, Labeling
from campedelli.mixedreal import MixedArrangement, classify_type

DATA = Path(campedelli.__file__).parent / "data"


def data_text(name):
    return (DATA / name).read_text(encoding="utf-8")


def load(name):
    return parse_arrangement(data_text(name))


@pytest.fixture(scope="session")
def fig5_file():
    return load("fig5.camp")


@pytest.fixture(scope="session")
def fig5(fig5_file):
    """(arrangement, equipment, name_to_face) for the seeded reference state."""
    arr = fig5_file.labeled
    c = arr.complex
    names = resolve_face_names(fig5_file, c)
    eq = propagate(arr, c.locate(fig5_file.anchor.point), fig5_file.anchor.signs)
    return arr, eq, names


@pytest.fixture(scope="session")
def heptagon_file():
    return load("heptagon.camp")


@pytest.fixture(scope="session")
def premax_file():
    return load("premax.camp")


@pytest.fixture(scope="session")
def mixed_ii():
    return load("mixed_ii.camp").mixed


def random_lines(rng, count=7, bound=30):
    lines = []
    while len(lines) < count:
        coords = tuple(rng.randint(-bound, bound) for _ in range(3))
        if all(v == 0 for v in coords):
            continue
        line = ProjLine(*coords)
        if line in lines:
            continue
        lines.append(line)
    return tuple(lines)


def random_simple_arrangement(rng):
    """Seven random lines in general position with a random bijective labeling."""
    while True:
        lines = random_lines(rng)
        pts = line_intersections(lines)
        if len(pts) == 21 and all(len(v) == 2 for v in pts.values()):
            codes = list(range(1, 8))
            rng.shuffle(codes)
            return LabeledArrangement(
                lines, Labeling(tuple(Label(c) for c in codes)))


def random_mixed_arrangement(rng, bound=6):
    """A random mixed arrangement that classifies without degeneracies."""
    while True:
        reals = random_lines(rng, count=3, bound=bound)
        halves = []
        for _ in range(2):
            coeffs = tuple(
                GaussRational.of(rng.randint(-bound, bound),
                                 rng.randint(-bound, bound))
                for _ in range(3))
            if all(c.is_zero() for c in coeffs):
                break
            halves.append(ComplexProjLine(coeffs))
        if len(halves) != 2:
            continue
        try:
            m = MixedArrangement.from_half(*reals, halves[0], halves[1])
            classify_type(m)
        except CampedelliError:
            continue
        return m
