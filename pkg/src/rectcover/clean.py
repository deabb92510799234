"""Cleaning steps that buy structure for a bounded loss in the ratio.

For unit weights: remove every rectangle that contains another one (any
cover can be rewritten to use the container instead of the contained
rectangle) and greedily pack disjoint (q+1)-point-cliques, committing all
their members (any cover must take at least q of each).  Solving the
residual within a factor alpha then yields max(alpha, 1 + 1/q) overall.

For arbitrary weights: repeatedly subtract the minimum weight across some
triangle from all three of its rectangles, forcing vertices that reach
zero.  Each round charges at most 3*delta against an optimum of at least
2*delta, so the forced part costs a factor 1.5.

Finally, a triangle-free family splits into two internally non-crossing
classes, because the crossing relation is a partial order with no
3-chains once triangles are gone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossingChainError, InvalidInputError
from .geometry import Rect, RectFamily
from .graphs import Graph, build_graph, find_triangle, point_stabbed_sets


@dataclass(frozen=True)
class CleanResult:
    """Outcome of the unweighted cleaning step.

    ``forced`` holds containers plus all members of the packed cliques;
    ``credit`` is the lower bound on what any cover must pay inside the
    packed cliques (q times the minimum clique weight, per clique).
    """

    forced: frozenset
    residual: RectFamily
    q: int
    credit: Fraction
    containers: frozenset
    packed_cliques: tuple


def clean_family(family: RectFamily, q: int) -> CleanResult:
    """Remove containments and pack disjoint (q+1)-point-cliques greedily."""
    if q < 1:
        raise InvalidInputError("q must be a positive integer")
    if not family.normalized:
        raise InvalidInputError("family must be normalized")
    if not family.is_unit_weight():
        raise InvalidInputError("weighted input: use local_ratio_triangle_free instead")

    active = list(family.rects)
    containers = set()
    while True:
        found = set()
        for a in active:
            for b in active:
                if a.id != b.id and a.strictly_contains(b):
                    found.add(a.id)
                    break
        if not found:
            break
        containers |= found
        active = [r for r in active if r.id not in found]

    residual_ids = [r.id for r in active]
    sub = family.subfamily(residual_ids)

    packed = []
    used = set()
    for _point, stab in point_stabbed_sets(sub):
        avail = sorted(stab - used)
        while len(avail) >= q + 1:
            clique = frozenset(avail[: q + 1])
            packed.append(clique)
            used |= clique
            avail = avail[q + 1:]

    if q == 2:
        # Triangles not caught by a stab point cannot exist for boxes, but
        # the graph-level sweep keeps the q=2 path safe on any input.
        g = build_graph(family.subfamily([i for i in residual_ids if i not in used]))
        while True:
            triple = find_triangle(g)
            if triple is None:
                break
            packed.append(frozenset(triple))
            used |= set(triple)
            g = g.without(triple)

    forced = frozenset(containers | used)
    residual = family.subfamily([i for i in residual_ids if i not in used])
    credit = Fraction(q * len(packed))
    return CleanResult(forced, residual, q, credit, frozenset(containers), tuple(packed))


def local_ratio_triangle_free(g: Graph):
    """Weighted triangle elimination by minimum-weight subtraction.

    Returns ``(forced, residual)`` where ``residual`` carries the reduced
    weights and has no triangle among its (positive-weight) vertices.  For
    any cover of the residual that is beta-approximate under the reduced
    weights, ``forced`` united with it is max(beta, 1.5)-approximate under
    the original weights.
    """
    weights = dict(g.weights)
    forced = {v for v in g.vertices if weights[v] == 0}
    alive = [v for v in g.vertices if weights[v] > 0]
    while True:
        triple = find_triangle(g, alive)
        if triple is None:
            break
        delta = min(weights[v] for v in triple)
        for v in triple:
            weights[v] -= delta
            if weights[v] == 0:
                forced.add(v)
        alive = [v for v in alive if weights[v] > 0]
    residual = g.subgraph(alive).with_weights({v: weights[v] for v in alive})
    return frozenset(forced), residual


def crossing_precedes(a: Rect, b: Rect) -> bool:
    """The crossing order: a comes first when its x-span nests inside b's
    and b's y-span nests inside a's."""
    return b.x.strictly_contains(a.x) and a.y.strictly_contains(b.y)


def dilworth_partition(family: RectFamily):
    """Split a triangle-free family into two non-crossing classes.

    The crossing relation is a strict partial order; without triangles it
    has no 3-chains, so the minimal elements and the rest are both
    antichains.  A pairwise-crossing triple is rejected with the witness
    chain.
    """
    rects = family.rects
    preds = {r.id: [] for r in rects}
    succs = {r.id: [] for r in rects}
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            a, b = rects[i], rects[j]
            if crossing_precedes(a, b):
                preds[b.id].append(a.id)
                succs[a.id].append(b.id)
            elif crossing_precedes(b, a):
                preds[a.id].append(b.id)
                succs[b.id].append(a.id)
    for mid in sorted(preds):
        if preds[mid] and succs[mid]:
            raise CrossingChainError((sorted(preds[mid])[0], mid, sorted(succs[mid])[0]))
    class_a = [r.id for r in rects if not preds[r.id]]
    class_b = [r.id for r in rects if preds[r.id]]
    return family.subfamily(class_a), family.subfamily(class_b)
