"""Intersection graphs of rectangle families, plus the point-clique and
triangle queries the cleaning steps rely on."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import InvalidInputError
from .geometry import (
    Kind,
    RectFamily,
    boundary_intersection_points,
    classify_pair,
    to_fraction,
)


class Graph:
    """Immutable undirected vertex-weighted graph.

    Vertices, edges, and adjacency lists are kept sorted so every
    traversal in the package is deterministic.  Vertex ids must be
    mutually comparable.  ``kinds`` optionally maps each edge to the
    geometric intersection kind when the graph came from a rectangle
    family.
    """

    def __init__(self, vertices: Iterable, edges: Iterable = (), weights: Optional[Mapping] = None, kinds: Optional[Mapping] = None):
        self.vertices = tuple(sorted(set(vertices)))
        vset = set(self.vertices)
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise InvalidInputError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            normalized.add((u, v) if u < v else (v, u))
        self.edges = tuple(sorted(normalized))
        self._edge_set = frozenset(self.edges)
        self.weights = {v: Fraction(1) for v in self.vertices}
        if weights:
            for v, w in weights.items():
                if v in vset:
                    self.weights[v] = to_fraction(w)
        self.kinds = dict(kinds) if kinds else {}
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v) -> tuple:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def kind_of(self, u, v):
        return self.kinds.get((u, v) if u < v else (v, u))

    def total_weight(self, vs: Iterable) -> Fraction:
        return sum((self.weights[v] for v in vs), Fraction(0))

    def subgraph(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return Graph(
            (v for v in self.vertices if v in keep),
            edges,
            {v: w for v, w in self.weights.items() if v in keep},
            {e: k for e, k in self.kinds.items() if e[0] in keep and e[1] in keep},
        )

    def without(self, drop: Iterable) -> "Graph":
        drop = set(drop)
        return self.subgraph(v for v in self.vertices if v not in drop)

    def with_weights(self, weights: Mapping) -> "Graph":
        return Graph(self.vertices, self.edges, weights, self.kinds)

    def is_vertex_cover(self, cover: Iterable):
        """Return ``(True, None)`` or ``(False, witness_edge)``."""
        cset = set(cover)
        for u, v in self.edges:
            if u not in cset and v not in cset:
                return False, (u, v)
        return True, None


def build_graph(family: RectFamily) -> Graph:
    """Intersection graph of a normalized family, edges tagged by kind."""
    if not family.normalized:
        raise InvalidInputError("family must be normalized before building its graph")
    rects = family.rects
    edges = []
    kinds = {}
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            kind = classify_pair(rects[i], rects[j])
            if not kind.intersecting:
                continue
            u, v = rects[i].id, rects[j].id
            key = (u, v) if u < v else (v, u)
            edges.append(key)
            kinds[key] = kind
    weights = {r.id: r.weight for r in rects}
    return Graph((r.id for r in rects), edges, weights, kinds)


def _axis_epsilons(family: RectFamily):
    """Half the smallest gap between distinct coordinate values, per axis."""
    xs = sorted({v for r in family.rects for v in (r.x.lo, r.x.hi)})
    ys = sorted({v for r in family.rects for v in (r.y.lo, r.y.hi)})

    def half_gap(values):
        gaps = [b - a for a, b in zip(values, values[1:]) if b > a]
        return min(gaps) / 2 if gaps else Fraction(1)

    return half_gap(xs), half_gap(ys)


def point_stabbed_sets(family: RectFamily) -> list:
    """Candidate stab points with the rectangles whose closed area holds each.

    Candidates are every rectangle corner and every boundary crossing
    point, pushed slightly into each of the four adjacent open quadrants
    (the push is half the smallest coordinate gap, so no endpoint is
    crossed).  Any set of rectangles with a common point is realized at
    one of these candidates: the lower-left corner of the common region
    is either a rectangle corner or a boundary crossing.  Returned in
    lexicographic point order.
    """
    rects = family.rects
    if not rects:
        return []
    eps_x, eps_y = _axis_epsilons(family)
    base = set()
    for r in rects:
        base.update(r.corners)
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            for p in boundary_intersection_points(rects[i], rects[j]):
                base.add((p.x, p.y))
    out = []
    for px, py in sorted(base):
        for dx in (-eps_x, eps_x):
            for dy in (-eps_y, eps_y):
                qx, qy = px + dx, py + dy
                stab = frozenset(r.id for r in rects if r.contains_point(qx, qy))
                out.append(((qx, qy), stab))
    out.sort(key=lambda item: item[0])
    return out


def enumerate_point_cliques(family: RectFamily, q: int) -> list:
    """Distinct point-stabbed rectangle sets of size at least ``q + 1``.

    Every clique of ``q + 1`` pairwise-intersecting rectangles shares a
    common point (axis-parallel boxes have Helly number two), so this
    enumeration sees all of them.
    """
    if q < 1:
        raise InvalidInputError("q must be a positive integer")
    if not family.normalized:
        raise InvalidInputError("family must be normalized")
    seen = set()
    out = []
    for _point, stab in point_stabbed_sets(family):
        if len(stab) >= q + 1 and stab not in seen:
            seen.add(stab)
            out.append(stab)
    return out


def find_triangle(g: Graph, alive: Optional[Iterable] = None):
    """First triple of pairwise-adjacent vertices in sorted order, or None."""
    if alive is None:
        verts = g.vertices
        keep = None
    else:
        keep = set(alive)
        verts = tuple(sorted(keep))
    for u in verts:
        above_u = [x for x in g.neighbors(u) if x > u and (keep is None or x in keep)]
        for idx, v in enumerate(above_u):
            for w in above_u[idx + 1:]:
                if g.has_edge(v, w):
                    return (u, v, w)
    return None
