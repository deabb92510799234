from fractions import Fraction

import pytest

from rectcover import (
    Graph,
    Kind,
    build_graph,
    classify_pair,
    clean_family,
    crossing_precedes,
    dilworth_partition,
    enumerate_point_cliques,
    find_triangle,
    generate_family,
    local_ratio_triangle_free,
    rect,
)
from rectcover.errors import CrossingChainError, InvalidInputError

from conftest import make_family
from oracles import exhaustive_min_cover


def chain_family():
    """Three pairwise-crossing rectangles: nested x-spans, reverse-nested
    y-spans."""
    return make_family([
        (1, (10, 11), (0, 30)),
        (2, (9, 12), (1, 29)),
        (3, (8, 13), (2, 28)),
    ])


class TestCleanFamily:
    def test_nested_pair_forces_container(self):
        family = make_family([(1, (2, 5), (2, 5)), (2, (0, 10), (0, 10))])
        result = clean_family(family, 2)
        assert result.forced == frozenset({2})
        assert result.residual.ids() == (1,)
        assert result.containers == frozenset({2})

    def test_containment_chain_fully_removed(self):
        family = make_family([(1, (4, 5), (4, 5)), (2, (2, 7), (2, 7)), (3, (0, 9), (0, 9))])
        result = clean_family(family, 2)
        assert result.containers == frozenset({2, 3})
        assert result.residual.ids() == (1,)

    def test_three_rects_with_common_point_packed(self):
        family = make_family([(1, (0, 10), (0, 3)), (2, (1, 5), (1, 9)), (3, (2, 7), (2, 8))])
        result = clean_family(family, 2)
        assert result.forced == frozenset({1, 2, 3})
        assert len(result.residual) == 0
        assert result.packed_cliques == (frozenset({1, 2, 3}),)
        assert result.credit == 2

    def test_two_disjoint_corner_pairs_untouched(self):
        family = make_family([
            (1, (0, 3), (0, 3)), (2, (2, 5), (2, 5)),
            (3, (10, 13), (10, 13)), (4, (12, 15), (12, 15)),
        ])
        result = clean_family(family, 2)
        assert result.forced == frozenset()
        assert len(result.residual) == 4

    def test_residual_clean_of_containment_and_cliques(self):
        for seed in range(40):
            family = generate_family(12, seed=100 + seed, max_side=600)
            for q in (2, 3):
                result = clean_family(family, q)
                residual = result.residual
                kinds = [
                    classify_pair(residual.rects[i], residual.rects[j]).kind
                    for i in range(len(residual))
                    for j in range(i + 1, len(residual))
                ]
                assert Kind.CONTAINMENT not in kinds
                assert enumerate_point_cliques(residual, q) == []

    def test_packed_cliques_pairwise_disjoint(self):
        for seed in range(30):
            family = generate_family(14, seed=500 + seed, max_side=700)
            result = clean_family(family, 2)
            seen = set()
            for clique in result.packed_cliques:
                assert len(clique) == 3
                assert not clique & seen
                seen |= clique

    def test_deterministic(self):
        family = generate_family(15, seed=321, max_side=600)
        first = clean_family(family, 2)
        second = clean_family(family, 2)
        assert first.forced == second.forced
        assert first.packed_cliques == second.packed_cliques

    def test_weighted_input_rejected(self):
        family = make_family([(1, (0, 3), (0, 3), 2)])
        with pytest.raises(InvalidInputError):
            clean_family(family, 2)


class TestLocalRatio:
    def test_triangle_1_2_3(self):
        g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")],
                  weights={"a": 1, "b": 2, "c": 3})
        forced, residual = local_ratio_triangle_free(g)
        assert forced == frozenset({"a"})
        assert residual.edges == (("b", "c"),)
        assert residual.weights == {"b": Fraction(1), "c": Fraction(2)}

    def test_triangle_free_graph_unchanged(self):
        g = Graph([1, 2, 3, 4], [(1, 2), (3, 4)], weights={1: 5, 2: 1, 3: 2, 4: 2})
        forced, residual = local_ratio_triangle_free(g)
        assert forced == frozenset()
        assert residual.edges == g.edges
        assert residual.weights == g.weights

    def test_k4_composes_within_ratio(self):
        g = Graph(range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)])
        forced, residual = local_ratio_triangle_free(g)
        assert len(forced) >= 2
        assert find_triangle(residual) is None
        res_cover, _ = exhaustive_min_cover(residual.vertices, residual.edges, residual.weights)
        final = forced | res_cover
        ok, _ = g.is_vertex_cover(final)
        assert ok
        _, opt = exhaustive_min_cover(g.vertices, g.edges, g.weights)
        assert g.total_weight(final) <= Fraction(3, 2) * opt

    def test_zero_weight_vertices_forced_upfront(self):
        g = Graph([1, 2], [(1, 2)], weights={1: 0, 2: 4})
        forced, residual = local_ratio_triangle_free(g)
        assert 1 in forced
        assert residual.vertices == (2,)

    def test_composed_ratio_on_random_instances(self, rng):
        from oracles import random_graph

        for _ in range(200):
            g = random_graph(rng, rng.randint(3, 13), 0.4, weighted=True)
            forced, residual = local_ratio_triangle_free(g)
            assert find_triangle(residual) is None
            res_cover, _ = exhaustive_min_cover(residual.vertices, residual.edges, residual.weights)
            final = forced | res_cover
            ok, _ = g.is_vertex_cover(final)
            assert ok
            _, opt = exhaustive_min_cover(g.vertices, g.edges, g.weights)
            assert g.total_weight(final) <= Fraction(3, 2) * opt


class TestDilworthPartition:
    def test_single_crossing_pair_split(self):
        family = make_family([(1, (5, 6), (0, 10)), (2, (3, 8), (2, 7))])
        class_a, class_b = dilworth_partition(family)
        assert class_a.ids() == (1,)
        assert class_b.ids() == (2,)
        a, b = family.by_id(1), family.by_id(2)
        assert crossing_precedes(a, b)

    def test_non_crossing_family_stays_in_class_a(self):
        family = generate_family(10, seed=11, forbid_crossing=True)
        class_a, class_b = dilworth_partition(family)
        assert class_a.ids() == family.ids()
        assert len(class_b) == 0

    def test_random_triangle_free_families_have_clean_classes(self):
        for seed in range(50):
            family = generate_family(12, seed=700 + seed, forbid_triangle=True, max_side=600)
            class_a, class_b = dilworth_partition(family)
            for cls in (class_a, class_b):
                kinds = [
                    classify_pair(cls.rects[i], cls.rects[j]).kind
                    for i in range(len(cls))
                    for j in range(i + 1, len(cls))
                ]
                assert Kind.CROSSING not in kinds
            assert set(class_a.ids()) | set(class_b.ids()) == set(family.ids())

    def test_chain_rejected_with_witness(self):
        with pytest.raises(CrossingChainError) as err:
            dilworth_partition(chain_family())
        first, mid, last = err.value.chain
        family = chain_family()
        assert crossing_precedes(family.by_id(first), family.by_id(mid))
        assert crossing_precedes(family.by_id(mid), family.by_id(last))
