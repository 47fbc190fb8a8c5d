"""Exact combinatorics of labeled real line arrangements and their
(Z/2)^3 branched covers: cell complexes, sign equipments, triangle
moves, covering topology and deformation-class bookkeeping."""

__version__ = "0.1.0"
