"""The arrangement graph of a corner-intersecting rectangle family.

Vertices ("joints") are the points where two rectangle boundaries cross;
edges are the boundary fragments between consecutive joints along each
rectangle's boundary.  In general position every joint lies on exactly two
boundaries and carries two fragments per boundary, so the multigraph is
4-regular, and the straight-line embedding along the rectangle boundaries
is planar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidInputError
from .geometry import Kind, RectFamily, boundary_intersection_points, classify_pair
from .graphs import Graph


@dataclass(frozen=True)
class Joint:
    index: int
    x: Fraction
    y: Fraction
    rects: tuple  # the two incident rectangle ids, sorted


@dataclass(frozen=True)
class Fragment:
    """A boundary piece between two cyclically-consecutive joints."""

    u: int
    v: int
    rect: object
    path: tuple  # polyline from u to v, including passed corners


class ArrangementGraph:
    def __init__(self, joints, fragments, rect_ids):
        self.joints = tuple(joints)
        self.fragments = tuple(fragments)
        self.rect_ids = tuple(rect_ids)
        self._rects_of = {j.index: j.rects for j in self.joints}

    @property
    def num_joints(self) -> int:
        return len(self.joints)

    @property
    def num_fragments(self) -> int:
        return len(self.fragments)

    def degree(self, joint_index: int) -> int:
        return sum(1 for f in self.fragments for end in (f.u, f.v) if end == joint_index)

    def is_four_regular(self) -> bool:
        counts = {j.index: 0 for j in self.joints}
        for f in self.fragments:
            counts[f.u] += 1
            counts[f.v] += 1
        return all(c == 4 for c in counts.values())

    def simple_graph(self) -> Graph:
        """Joint graph with parallel fragments collapsed to single edges."""
        edges = {(f.u, f.v) if f.u < f.v else (f.v, f.u) for f in self.fragments}
        return Graph((j.index for j in self.joints), edges)

    def induced_rects(self, joint_indices: Iterable) -> frozenset:
        """Rectangles carrying at least one of the given joints."""
        out = set()
        for i in joint_indices:
            out.update(self._rects_of[i])
        return frozenset(out)

    def _segments(self):
        for fi, frag in enumerate(self.fragments):
            for p, q in zip(frag.path, frag.path[1:]):
                yield fi, p, q

    def proper_crossings(self) -> list:
        """Pairs of fragment segments that cross through interiors.

        The geometric embedding should yield none; the scan is the
        planarity witness used by the validation suite.
        """
        segs = list(self._segments())
        out = []
        for i in range(len(segs)):
            fi, p1, q1 = segs[i]
            for j in range(i + 1, len(segs)):
                fj, p2, q2 = segs[j]
                if fi == fj:
                    continue
                if _segments_properly_cross(p1, q1, p2, q2):
                    out.append((self.fragments[fi], self.fragments[fj]))
        return out

    def to_debug_json(self) -> dict:
        """Planar straight-line export (coordinates exact integers or 'p/q')."""

        def num(value: Fraction):
            return int(value) if value.denominator == 1 else str(value)

        return {
            "schema": "rectcover-arrangement/1",
            "joints": [
                {"index": j.index, "x": num(j.x), "y": num(j.y), "rects": list(j.rects)}
                for j in self.joints
            ],
            "fragments": [
                {
                    "u": f.u,
                    "v": f.v,
                    "rect": f.rect,
                    "path": [[num(px), num(py)] for px, py in f.path],
                }
                for f in self.fragments
            ],
        }


def _segments_properly_cross(p1, q1, p2, q2) -> bool:
    """Interior-to-interior crossing or collinear interior overlap of two
    axis-parallel segments."""

    def span(a, b):
        return (a, b) if a <= b else (b, a)

    v1 = p1[0] == q1[0]
    v2 = p2[0] == q2[0]
    if v1 != v2:
        (vx, vy_lo, vy_hi) = (p1[0], *span(p1[1], q1[1])) if v1 else (p2[0], *span(p2[1], q2[1]))
        hp, hq = (p2, q2) if v1 else (p1, q1)
        hy = hp[1]
        hx_lo, hx_hi = span(hp[0], hq[0])
        return hx_lo < vx < hx_hi and vy_lo < hy < vy_hi
    if v1:
        if p1[0] != p2[0]:
            return False
        lo1, hi1 = span(p1[1], q1[1])
        lo2, hi2 = span(p2[1], q2[1])
        return max(lo1, lo2) < min(hi1, hi2)
    if p1[1] != p2[1]:
        return False
    lo1, hi1 = span(p1[0], q1[0])
    lo2, hi2 = span(p2[0], q2[0])
    return max(lo1, lo2) < min(hi1, hi2)


def build_arrangement(family: RectFamily) -> ArrangementGraph:
    """Construct the arrangement graph of a cleaned family.

    The family must be normalized and contain corner intersections only;
    rectangles without any intersection are dropped (they never enter a
    cover and carry no joints).
    """
    if not family.normalized:
        raise InvalidInputError("family must be normalized")
    rects = list(family.rects)
    points = {}
    intersecting = set()
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            a, b = rects[i], rects[j]
            kind = classify_pair(a, b)
            if kind.kind is Kind.DISJOINT:
                continue
            if kind.kind is not Kind.CORNER:
                raise InvalidInputError(
                    f"family must be cleaned first: {kind.kind.value} pair ({a.id!r}, {b.id!r})"
                )
            pair = (a.id, b.id) if a.id < b.id else (b.id, a.id)
            for p in boundary_intersection_points(a, b):
                key = (p.x, p.y)
                if key in points and points[key] != pair:
                    raise InvalidInputError(
                        f"joint {key!r} shared by pairs {points[key]!r} and {pair!r}; not in general position"
                    )
                points[key] = pair
            intersecting.add(a.id)
            intersecting.add(b.id)

    joints = [
        Joint(idx, x, y, points[(x, y)])
        for idx, (x, y) in enumerate(sorted(points))
    ]
    kept_ids = sorted(intersecting)
    by_rect = {rid: [] for rid in kept_ids}
    for j in joints:
        for rid in j.rects:
            by_rect[rid].append(j)

    fragments = []
    for rid in kept_ids:
        r = family.by_id(rid)
        cycle = _boundary_cycle(r, by_rect[rid])
        mine = [entry for entry in cycle if entry[1] == "joint"]
        m = len(mine)
        for idx in range(m):
            start = mine[idx]
            end = mine[(idx + 1) % m]
            path = _walk(cycle, start, end)
            fragments.append(Fragment(start[2].index, end[2].index, rid, tuple(path)))
    return ArrangementGraph(joints, fragments, kept_ids)


def _boundary_cycle(r, joints):
    """Boundary points of ``r`` in clockwise order from the top-left corner.

    Entries are ``(param_key, kind, payload)`` where kind is "corner" or
    "joint".  Keys: top edge left-to-right, right edge top-to-bottom,
    bottom edge right-to-left, left edge bottom-to-top.
    """
    entries = [
        ((0, r.x.lo), "corner", (r.x.lo, r.y.hi)),
        ((1, -r.y.hi), "corner", (r.x.hi, r.y.hi)),
        ((2, -r.x.hi), "corner", (r.x.hi, r.y.lo)),
        ((3, r.y.lo), "corner", (r.x.lo, r.y.lo)),
    ]
    for j in joints:
        if j.y == r.y.hi:
            key = (0, j.x)
        elif j.x == r.x.hi:
            key = (1, -j.y)
        elif j.y == r.y.lo:
            key = (2, -j.x)
        elif j.x == r.x.lo:
            key = (3, j.y)
        else:
            raise AssertionError(f"joint {j!r} not on boundary of {r.id!r}")
        entries.append((key, "joint", j))
    entries.sort(key=lambda e: e[0])
    return entries


def _walk(cycle, start, end):
    """Polyline from the start joint to the end joint, clockwise through
    any corners in between."""
    n = len(cycle)
    i = cycle.index(start)
    path = [(start[2].x, start[2].y)]
    pos = (i + 1) % n
    while True:
        key, kind, payload = cycle[pos]
        if kind == "joint":
            if payload.index != end[2].index:
                raise AssertionError("joints out of cyclic order")
            path.append((payload.x, payload.y))
            return path
        path.append(payload)
        pos = (pos + 1) % n
