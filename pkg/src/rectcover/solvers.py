"""Top-level pipelines.

``eptas_noncrossing`` drives the (1 + epsilon) scheme for non-crossing
unit-weight families: clean, kernelize, build the arrangement graph,
delete one BFS layer class of joints at a time, solve the rest exactly by
tree-decomposition DP, and keep the best candidate.

``solve_general_unweighted`` and ``solve_general_weighted`` reach
(1.5 + epsilon) on arbitrary families: eliminate triangles (greedy clique
packing or local-ratio weight subtraction), kernelize, split the
triangle-free kernel into two non-crossing classes, solve each class, and
take the better of the two crossed unions.

``exact_vc`` is the desk-scale branch-and-bound oracle used to measure
empirical ratios, and ``lp_lower_bound`` exposes the fractional optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import build_arrangement
from .clean import clean_family, dilworth_partition, local_ratio_triangle_free
from .decompose import (
    DEFAULT_WIDTH_CEILING,
    bfs_layer_classes,
    heuristic_tree_decomposition,
    transfer_td,
    vc_dp,
)
from .errors import CrossingPairError, InvalidInputError, SizeLimitError
from .geometry import Kind, RectFamily, to_fraction
from .graphs import Graph, build_graph, find_triangle
from .kernelize import _lp_partition, graph_lp_value, nt_lift, nt_reduce

DEFAULT_EXACT_LIMIT = 24


@dataclass(frozen=True)
class Params:
    """Accuracy parameters: clique bound q and layer count k.

    q = ceil(1/epsilon) and k = ceil(8q/epsilon); c1 = 8q bounds the total
    size of the deleted rectangle sets across layers (each joint lies on
    two rectangles and there are at most 4q joints per rectangle).
    """

    epsilon: Fraction
    q: int
    k: int
    c1: int

    @classmethod
    def from_epsilon(cls, epsilon, k_override: Optional[int] = None) -> "Params":
        eps = to_fraction(epsilon)
        if eps <= 0:
            raise InvalidInputError("epsilon must be positive")
        q = math.ceil(Fraction(1) / eps)
        if k_override is not None:
            k = int(k_override)
            if k < 1:
                raise InvalidInputError("k override must be a positive integer")
        else:
            k = math.ceil(Fraction(8 * q) / eps)
        return cls(eps, q, k, 8 * q)


@dataclass(frozen=True)
class CoverResult:
    """A vertex cover plus the guarantee of the algorithm that built it."""

    cover: frozenset
    weight: Fraction
    algorithm: str
    certified_ratio: Fraction
    lower_bound: Optional[Fraction]
    diagnostics: dict = field(compare=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.cover)


def _check_cover(g: Graph, cover: frozenset):
    ok, witness = g.is_vertex_cover(cover)
    if not ok:
        raise AssertionError(f"produced set misses edge {witness!r}")


def _crossing_witness(g: Graph):
    for edge, kind in sorted(g.kinds.items()):
        if kind.kind is Kind.CROSSING:
            return edge
    return None


def _require_normalized(family: RectFamily):
    if not family.normalized:
        raise InvalidInputError("family must be normalized first")


def _require_unit_weights(family: RectFamily):
    if not family.is_unit_weight():
        raise InvalidInputError("this algorithm handles unit weights only")


def eptas_noncrossing(family: RectFamily, epsilon, *, k_override: Optional[int] = None,
                      width_ceiling: int = DEFAULT_WIDTH_CEILING) -> CoverResult:
    """(1 + epsilon)-approximate cover of a non-crossing unit-weight family."""
    params = Params.from_epsilon(epsilon, k_override)
    _require_normalized(family)
    _require_unit_weights(family)
    g_full = build_graph(family)
    witness = _crossing_witness(g_full)
    if witness is not None:
        raise CrossingPairError(witness)

    cleaned = clean_family(family, params.q)
    g_res = build_graph(cleaned.residual)
    reduction = nt_reduce(g_res)
    g_kernel = g_res.subgraph(reduction.v_half)

    diag = {
        "epsilon": str(params.epsilon),
        "q": params.q,
        "k": params.k,
        "c1": params.c1,
        "n_input": len(family),
        "containers": len(cleaned.containers),
        "packed_cliques": len(cleaned.packed_cliques),
        "forced_clean": len(cleaned.forced),
        "v_one": len(reduction.v_one),
        "v_zero": len(reduction.v_zero),
        "kernel_size": len(reduction.v_half),
        "kernel_ids": sorted(reduction.v_half),
        "lp_kernel": str(reduction.lp_value),
    }

    if g_kernel.m == 0:
        best_kernel_cover = frozenset()
        diag.update({"num_joints": 0, "num_fragments": 0, "sum_u": 0,
                     "class_sizes": [], "u_sizes": [], "candidate_sizes": [],
                     "realized_widths": [], "min_candidate": 0})
    else:
        kernel = cleaned.residual.subfamily(sorted(reduction.v_half))
        arrangement = build_arrangement(kernel)
        active = frozenset(arrangement.rect_ids)
        simple = arrangement.simple_graph()
        layers = bfs_layer_classes(simple, params.k)
        u_sets = [arrangement.induced_rects(cls) for cls in layers.classes]

        cache = {}
        candidates = []
        widths = []
        for cls, u in zip(layers.classes, u_sets):
            if cls in cache:
                cand, width = cache[cls]
            else:
                sub = simple.without(cls)
                td_joints = heuristic_tree_decomposition(sub)
                target = active - u
                td_rects = transfer_td(td_joints, arrangement, restrict_to=target)
                h = g_kernel.subgraph(target)
                cover_star, _ = vc_dp(h, td_rects, width_ceiling)
                cand = frozenset(u | cover_star)
                width = td_rects.width
                cache[cls] = (cand, width)
            candidates.append(cand)
            widths.append(width)
        best_kernel_cover = min(candidates, key=lambda c: (len(c), tuple(sorted(c))))
        diag.update({
            "num_joints": arrangement.num_joints,
            "num_fragments": arrangement.num_fragments,
            "sum_u": sum(len(u) for u in u_sets),
            "class_sizes": [len(c) for c in layers.classes],
            "u_sizes": [len(u) for u in u_sets],
            "candidate_sizes": [len(c) for c in candidates],
            "realized_widths": widths,
            "min_candidate": len(best_kernel_cover),
        })

    cover = nt_lift(reduction, best_kernel_cover) | cleaned.forced
    _check_cover(g_full, cover)
    return CoverResult(
        cover=frozenset(cover),
        weight=g_full.total_weight(cover),
        algorithm="eptas",
        certified_ratio=Fraction(1) + params.epsilon,
        lower_bound=graph_lp_value(g_full),
        diagnostics=diag,
    )


def _baker_planar(g: Graph, params: Params, width_ceiling: int):
    """(1 + epsilon) cover of a planar graph, weights allowed.

    Kernelize, partition the kernel's vertices by BFS level mod k, delete
    one class at a time, solve the remainder exactly over a heuristic
    decomposition, and lift the best candidate.  Here the deleted sets are
    the classes themselves, so their sizes sum to the kernel size (c1=1).
    """
    diag = {"c1": 1, "k": params.k}
    if g.m == 0:
        diag.update({"kernel_size": 0, "sum_u": 0, "class_sizes": [],
                     "candidate_weights": [], "realized_widths": []})
        return frozenset(), diag
    reduction = nt_reduce(g)
    kern = g.subgraph(reduction.v_half)
    diag["kernel_size"] = kern.n
    if kern.m == 0:
        best = frozenset()
        diag.update({"sum_u": 0, "class_sizes": [], "candidate_weights": [],
                     "realized_widths": []})
    else:
        layers = bfs_layer_classes(kern, params.k)
        cache = {}
        candidates = []
        widths = []
        for cls in layers.classes:
            if cls in cache:
                cand, width = cache[cls]
            else:
                h = kern.without(cls)
                td = heuristic_tree_decomposition(h)
                cover_star, _ = vc_dp(h, td, width_ceiling)
                cand = frozenset(cls | cover_star)
                width = td.width
                cache[cls] = (cand, width)
            candidates.append(cand)
            widths.append(width)
        best = min(candidates, key=lambda c: (kern.total_weight(c), tuple(sorted(c))))
        diag.update({
            "sum_u": sum(len(c) for c in layers.classes),
            "class_sizes": [len(c) for c in layers.classes],
            "candidate_weights": [str(kern.total_weight(c)) for c in candidates],
            "realized_widths": widths,
        })
    return nt_lift(reduction, best), diag


def solve_general_unweighted(family: RectFamily, epsilon, *, planar_route: bool = False,
                             k_override: Optional[int] = None,
                             width_ceiling: int = DEFAULT_WIDTH_CEILING) -> CoverResult:
    """(1.5 + epsilon)-approximate cover of an arbitrary unit-weight family."""
    params = Params.from_epsilon(epsilon, k_override)
    _require_normalized(family)
    _require_unit_weights(family)
    g_full = build_graph(family)

    cleaned = clean_family(family, 2)
    g_res = build_graph(cleaned.residual)
    if find_triangle(g_res) is not None:
        raise AssertionError("cleaning left a triangle behind")
    reduction = nt_reduce(g_res)
    kernel = cleaned.residual.subfamily(sorted(reduction.v_half))
    fam_a, fam_b = dilworth_partition(kernel)

    if planar_route:
        cover_a, diag_a = _baker_planar(build_graph(fam_a), params, width_ceiling)
        cover_b, diag_b = _baker_planar(build_graph(fam_b), params, width_ceiling)
    else:
        res_a = eptas_noncrossing(fam_a, params.epsilon, k_override=k_override,
                                  width_ceiling=width_ceiling)
        res_b = eptas_noncrossing(fam_b, params.epsilon, k_override=k_override,
                                  width_ceiling=width_ceiling)
        cover_a, diag_a = res_a.cover, res_a.diagnostics
        cover_b, diag_b = res_b.cover, res_b.diagnostics

    ids_a = frozenset(fam_a.ids())
    ids_b = frozenset(fam_b.ids())
    cand_one = ids_a | cover_b
    cand_two = ids_b | cover_a
    best = min((cand_one, cand_two), key=lambda c: (len(c), tuple(sorted(c))))
    cover = nt_lift(reduction, best) | cleaned.forced
    _check_cover(g_full, cover)

    diag = {
        "epsilon": str(params.epsilon),
        "route": "planar" if planar_route else "eptas",
        "containers": len(cleaned.containers),
        "packed_cliques": len(cleaned.packed_cliques),
        "forced_clean": len(cleaned.forced),
        "kernel_size": len(reduction.v_half),
        "class_a": len(fam_a),
        "class_b": len(fam_b),
        "candidate_sizes": [len(cand_one), len(cand_two)],
        "class_a_diag": diag_a,
        "class_b_diag": diag_b,
    }
    return CoverResult(
        cover=frozenset(cover),
        weight=g_full.total_weight(cover),
        algorithm="general",
        certified_ratio=Fraction(3, 2) + params.epsilon,
        lower_bound=graph_lp_value(g_full),
        diagnostics=diag,
    )


def solve_general_weighted(family: RectFamily, epsilon, *, k_override: Optional[int] = None,
                           width_ceiling: int = DEFAULT_WIDTH_CEILING) -> CoverResult:
    """(1.5 + epsilon)-approximate cover of an arbitrary weighted family."""
    params = Params.from_epsilon(epsilon, k_override)
    _require_normalized(family)
    g_full = build_graph(family)

    forced_zero, g_reduced = local_ratio_triangle_free(g_full)
    reduction = nt_reduce(g_reduced)
    kernel_family = family.subfamily(sorted(reduction.v_half), weights=g_reduced.weights)
    fam_a, fam_b = dilworth_partition(kernel_family)

    cover_a, diag_a = _baker_planar(build_graph(fam_a), params, width_ceiling)
    cover_b, diag_b = _baker_planar(build_graph(fam_b), params, width_ceiling)

    ids_a = frozenset(fam_a.ids())
    ids_b = frozenset(fam_b.ids())
    cand_one = ids_a | cover_b
    cand_two = ids_b | cover_a
    best = min(
        (cand_one, cand_two),
        key=lambda c: (g_reduced.total_weight(c), tuple(sorted(c))),
    )
    cover = nt_lift(reduction, best) | forced_zero
    _check_cover(g_full, cover)

    diag = {
        "epsilon": str(params.epsilon),
        "forced_local_ratio": len(forced_zero),
        "kernel_size": len(reduction.v_half),
        "class_a": len(fam_a),
        "class_b": len(fam_b),
        "candidate_weights": [str(g_reduced.total_weight(cand_one)),
                              str(g_reduced.total_weight(cand_two))],
        "class_a_diag": diag_a,
        "class_b_diag": diag_b,
    }
    return CoverResult(
        cover=frozenset(cover),
        weight=g_full.total_weight(cover),
        algorithm="general-weighted",
        certified_ratio=Fraction(3, 2) + params.epsilon,
        lower_bound=graph_lp_value(g_full),
        diagnostics=diag,
    )


def lp_lower_bound(g: Graph) -> Fraction:
    """Fractional vertex cover optimum; a certified lower bound on opt."""
    return graph_lp_value(g)


def exact_vc(g: Graph, *, limit: int = DEFAULT_EXACT_LIMIT) -> CoverResult:
    """Exact minimum-weight cover by branch and bound.

    Branches on the highest-degree vertex (in or out; out forces the whole
    neighborhood in) and prunes with the fractional LP bound of the
    remaining graph.  Deterministic, intended for desk-scale oracles.
    """
    if g.n > limit:
        raise SizeLimitError(f"instance has {g.n} vertices; exact solver limit is {limit}")
    for v in g.vertices:
        if g.weights[v] < 0:
            raise InvalidInputError(f"negative weight on {v!r}")

    adjacency = {v: frozenset(g.neighbors(v)) for v in g.vertices}
    weights = g.weights
    best_cover = frozenset(g.vertices)
    best_weight = g.total_weight(best_cover)

    def lp_bound(active):
        edges = [(u, v) for u, v in g.edges if u in active and v in active]
        return _lp_partition(active, edges, weights)[0]

    def recurse(alive, chosen, cost):
        nonlocal best_cover, best_weight
        degrees = {}
        for v in alive:
            d = len(adjacency[v] & alive)
            if d > 0:
                degrees[v] = d
        if not degrees:
            if cost < best_weight:
                best_weight = cost
                best_cover = frozenset(chosen)
            return
        if cost >= best_weight:
            return
        if cost + lp_bound(frozenset(degrees)) >= best_weight:
            return
        v = min(degrees, key=lambda u: (-degrees[u], u))
        recurse(alive - {v}, chosen | {v}, cost + weights[v])
        neighborhood = adjacency[v] & alive
        recurse(alive - {v} - neighborhood, chosen | neighborhood,
                cost + g.total_weight(neighborhood))

    recurse(frozenset(g.vertices), frozenset(), Fraction(0))
    _check_cover(g, best_cover)
    return CoverResult(
        cover=best_cover,
        weight=best_weight,
        algorithm="exact",
        certified_ratio=Fraction(1),
        lower_bound=graph_lp_value(g),
        diagnostics={"n": g.n, "m": g.m},
    )
