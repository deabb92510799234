"""Axis-parallel rectangle model: exact coordinates, general-position
normalization, and pairwise intersection classification.

Coordinates and weights are ``fractions.Fraction`` throughout, and every
predicate is decided by exact rational comparisons.  That keeps boundary
crossing points (the joints the arrangement graph is built from) free of
rounding artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .errors import InvalidInputError


def to_fraction(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts Fraction, int, strings such as ``"3/4"`` or ``"0.75"``, and
    floats.  Floats are read through their shortest decimal repr, so the
    literal ``0.1`` means exactly 1/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot parse {value!r} as a rational") from exc
    if isinstance(value, float):
        return Fraction(str(value))
    raise InvalidInputError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] on one axis; must be non-degenerate."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", to_fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", to_fraction(self.hi))
        if not self.lo < self.hi:
            raise InvalidInputError(f"degenerate interval [{self.lo}, {self.hi}]")

    def disjoint_from(self, other: "Interval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def strictly_contains(self, other: "Interval") -> bool:
        return self.lo < other.lo and other.hi < self.hi

    def interior_contains(self, value: Fraction) -> bool:
        return self.lo < value < self.hi

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi


@dataclass(frozen=True)
class Rect:
    """An axis-parallel rectangle: an id, two closed intervals, and a weight."""

    id: object
    x: Interval
    y: Interval
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.weight, Fraction):
            object.__setattr__(self, "weight", to_fraction(self.weight))
        if self.weight < 0:
            raise InvalidInputError(f"rectangle {self.id!r} has negative weight {self.weight}")

    @property
    def corners(self) -> tuple:
        x, y = self.x, self.y
        return ((x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi))

    def contains_point(self, px, py) -> bool:
        return self.x.contains(px) and self.y.contains(py)

    def contains_point_strict(self, px, py) -> bool:
        return self.x.interior_contains(px) and self.y.interior_contains(py)

    def strictly_contains(self, other: "Rect") -> bool:
        return self.x.strictly_contains(other.x) and self.y.strictly_contains(other.y)


def rect(rid, x, y, weight=1) -> Rect:
    """Convenience constructor from ``(lo, hi)`` pairs."""
    return Rect(
        rid,
        Interval(to_fraction(x[0]), to_fraction(x[1])),
        Interval(to_fraction(y[0]), to_fraction(y[1])),
        to_fraction(weight),
    )


@dataclass(frozen=True)
class RectFamily:
    """An ordered collection of rectangles with distinct ids.

    ``normalized`` marks families whose 4n interval endpoints are pairwise
    distinct (the general-position form produced by
    :func:`normalize_general_position`).
    """

    rects: tuple
    normalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rects", tuple(self.rects))
        seen = set()
        for r in self.rects:
            if r.id in seen:
                raise InvalidInputError(f"duplicate rectangle id {r.id!r}")
            seen.add(r.id)

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self) -> Iterator[Rect]:
        return iter(self.rects)

    def ids(self) -> tuple:
        return tuple(r.id for r in self.rects)

    def by_id(self, rid) -> Rect:
        for r in self.rects:
            if r.id == rid:
                return r
        raise KeyError(rid)

    def is_unit_weight(self) -> bool:
        return all(r.weight == 1 for r in self.rects)

    def subfamily(self, ids: Iterable, weights: Optional[Mapping] = None) -> "RectFamily":
        """Sub-family restricted to ``ids``, optionally with replaced weights."""
        idset = set(ids)
        unknown = idset - {r.id for r in self.rects}
        if unknown:
            raise InvalidInputError(f"unknown rectangle ids {sorted(unknown)!r}")
        kept = []
        for r in self.rects:
            if r.id not in idset:
                continue
            if weights is not None and r.id in weights:
                r = replace(r, weight=to_fraction(weights[r.id]))
            kept.append(r)
        return RectFamily(tuple(kept), normalized=self.normalized)


class Kind(Enum):
    DISJOINT = "disjoint"
    CONTAINMENT = "containment"
    CORNER = "corner"
    CROSSING = "crossing"


@dataclass(frozen=True)
class IntersectionKind:
    """How an (unordered) pair of rectangles relates.

    Containment records which id contains which; a corner intersection
    records whether one rectangle holds one or two corners of the other.
    """

    kind: Kind
    container_id: object = None
    contained_id: object = None
    corner_count: int = 0

    @classmethod
    def disjoint(cls):
        return cls(Kind.DISJOINT)

    @classmethod
    def containment(cls, container_id, contained_id):
        return cls(Kind.CONTAINMENT, container_id=container_id, contained_id=contained_id)

    @classmethod
    def corner(cls, count):
        return cls(Kind.CORNER, corner_count=count)

    @classmethod
    def crossing(cls):
        return cls(Kind.CROSSING)

    @property
    def intersecting(self) -> bool:
        return self.kind is not Kind.DISJOINT


def normalize_general_position(family: RectFamily) -> RectFamily:
    """Map a family onto an even integer grid with pairwise-distinct endpoints.

    Every endpoint occurrence is ranked lexicographically by
    ``(coordinate value, rectangle id, side)`` and replaced by twice its
    rank.  Order between originally-distinct values is preserved, so the
    intersection structure of strictly overlapping pairs is unchanged;
    originally-touching pairs are resolved deterministically by the id
    tie-break.  The result is idempotent under re-normalization.
    """
    occurrences = []
    for r in family.rects:
        occurrences.append((r.x.lo, r.id, 0))
        occurrences.append((r.x.hi, r.id, 1))
        occurrences.append((r.y.lo, r.id, 2))
        occurrences.append((r.y.hi, r.id, 3))
    occurrences.sort(key=lambda t: (t[0], t[1], t[2]))
    new_value = {}
    for rank, (_, rid, side) in enumerate(occurrences):
        new_value[(rid, side)] = Fraction(2 * rank)
    rects = tuple(
        Rect(
            r.id,
            Interval(new_value[(r.id, 0)], new_value[(r.id, 1)]),
            Interval(new_value[(r.id, 2)], new_value[(r.id, 3)]),
            r.weight,
        )
        for r in family.rects
    )
    return RectFamily(rects, normalized=True)


def classify_pair(a: Rect, b: Rect) -> IntersectionKind:
    """Classify how two rectangles in general position intersect.

    Disjoint when either axis projection misses; containment when both
    intervals nest the same way; crossing when the x intervals nest one way
    and the y intervals the other (boundaries meet four times); otherwise a
    corner intersection (boundaries meet twice).
    """
    if a.x.disjoint_from(b.x) or a.y.disjoint_from(b.y):
        return IntersectionKind.disjoint()
    if a.x.strictly_contains(b.x) and a.y.strictly_contains(b.y):
        return IntersectionKind.containment(a.id, b.id)
    if b.x.strictly_contains(a.x) and b.y.strictly_contains(a.y):
        return IntersectionKind.containment(b.id, a.id)
    if (a.x.strictly_contains(b.x) and b.y.strictly_contains(a.y)) or (
        b.x.strictly_contains(a.x) and a.y.strictly_contains(b.y)
    ):
        return IntersectionKind.crossing()
    corners_of_b_in_a = sum(1 for c in b.corners if a.contains_point_strict(*c))
    corners_of_a_in_b = sum(1 for c in a.corners if b.contains_point_strict(*c))
    count = max(corners_of_b_in_a, corners_of_a_in_b)
    if count not in (1, 2):
        raise InvalidInputError(
            f"pair ({a.id!r}, {b.id!r}) is not in general position; normalize the family first"
        )
    return IntersectionKind.corner(count)


@dataclass(frozen=True)
class BoundaryPoint:
    """A point where two rectangle boundaries cross, tagged with the pair."""

    x: Fraction
    y: Fraction
    pair: tuple


def boundary_intersection_points(a: Rect, b: Rect) -> list:
    """Exact crossing points of the two boundary curves.

    For a general-position pair the count is 0 (disjoint or containment),
    2 (corner), or 4 (crossing).  Points are sorted by (x, y) and tagged
    with ``(a.id, b.id)``.
    """
    points = []
    for vert, horiz in ((a, b), (b, a)):
        for vx in (vert.x.lo, vert.x.hi):
            for hy in (horiz.y.lo, horiz.y.hi):
                if horiz.x.interior_contains(vx) and vert.y.interior_contains(hy):
                    points.append(BoundaryPoint(vx, hy, (a.id, b.id)))
    points.sort(key=lambda p: (p.x, p.y))
    return points
