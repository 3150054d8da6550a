"""Constraint extensions shared by the model builder and the exact solvers.

Coordinates are 1-based; ``side`` is one of "n", "w", "s", "e".
"""

from __future__ import annotations

from dataclasses import dataclass

SIDES = ("n", "w", "s", "e")


@dataclass(frozen=True)
class ForceTile:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class ForbidTile:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class SameTile:
    i: int
    j: int
    p: int
    q: int


@dataclass(frozen=True)
class DifferentTile:
    i: int
    j: int
    p: int
    q: int


@dataclass(frozen=True)
class ForceEdgeColor:
    i: int
    j: int
    side: str
    color: int


@dataclass(frozen=True)
class ForbidEdgeColor:
    i: int
    j: int
    side: str
    color: int


@dataclass(frozen=True)
class EqualEdgeColors:
    i: int
    j: int
    side: str
    p: int
    q: int
    side2: str


@dataclass(frozen=True)
class DifferentEdgeColors:
    i: int
    j: int
    side: str
    p: int
    q: int
    side2: str


@dataclass(frozen=True)
class PeriodicFixed:
    """Equal coloring of the opposite boundaries of the fixed-size domain."""


@dataclass(frozen=True)
class PeriodicVariable:
    """Wrap-around color matching for the variable-size tiled rectangle."""


@dataclass(frozen=True)
class SmallestObjective:
    """Minimize the number of placed tiles instead of maximizing it."""


@dataclass(frozen=True)
class Packing:
    """Place every tile of the set exactly once."""


#: Extensions that constrain a single cell; the frontier solver accepts these.
LOCAL_EXTENSIONS = (ForceTile, ForbidTile, ForceEdgeColor, ForbidEdgeColor)
