"""Exception types shared across the package.

Every error raised on purpose by this package derives from CampedelliError,
so callers can catch one base class at API boundaries.
"""


class CampedelliError(Exception):
    """Base class for all errors raised by this package."""


class IdenticalLines(CampedelliError):
    """Two projective lines expected to be distinct are equal."""


class DuplicateLine(CampedelliError):
    """An arrangement was given the same line twice."""


class NotSimple(CampedelliError):
    """An operation that requires a simple arrangement met a multiple point."""


class InconsistentEquipment(CampedelliError):
    """Sign propagation produced two different signs for the same face."""


class MalformedGluing(CampedelliError):
    """A gluing description does not define a closed surface."""


class CannotPerturb(CampedelliError):
    """No admissible perturbation parameter was found for a triangle move."""


class DependentSides(CampedelliError):
    """The triangle has linearly dependent side labels where independence
    was required, or vice versa."""


class Concurrent(CampedelliError):
    """Three lines expected to be in general position pass through one point."""


class Degenerate(CampedelliError):
    """A configuration sits on a wall of the classification and has no type."""


class InvalidMultiplicity(CampedelliError):
    """A point record carries fewer than two lines."""


class ParseError(CampedelliError):
    """An input file does not conform to the arrangement file format."""


class NotATriangle(CampedelliError):
    """A move was requested on a face that is not a triangle."""
