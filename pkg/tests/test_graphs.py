import random

import pytest

from rectcover import (
    Graph,
    build_graph,
    enumerate_point_cliques,
    find_triangle,
    generate_family,
)
from rectcover.errors import InvalidInputError

from conftest import fig2_family, make_family
from oracles import classify_independent, random_graph


def brute_force_triangle(g):
    verts = g.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            for k in range(j + 1, len(verts)):
                u, v, w = verts[i], verts[j], verts[k]
                if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w):
                    return (u, v, w)
    return None


class TestGraphBasics:
    def test_self_loop_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph([1, 2], [(1, 1)])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph([1, 2], [(1, 3)])

    def test_is_vertex_cover_witness(self):
        g = Graph([1, 2, 3], [(1, 2), (2, 3)])
        ok, witness = g.is_vertex_cover({2})
        assert ok and witness is None
        ok, witness = g.is_vertex_cover({1})
        assert not ok and witness == (2, 3)

    def test_subgraph_keeps_weights_and_kinds(self):
        family = fig2_family()
        g = build_graph(family)
        sub = g.subgraph({"a", "b"})
        assert sub.vertices == ("a", "b")
        assert sub.edges == (("a", "b"),)
        assert sub.kind_of("a", "b") is g.kind_of("a", "b")


class TestBuildGraph:
    def test_requires_normalized(self):
        family = fig2_family(normalized=False)
        with pytest.raises(InvalidInputError):
            build_graph(family)

    def test_disjoint_family_has_no_edges(self):
        family = make_family([(1, (0, 1), (0, 1)), (2, (3, 4), (3, 4)), (3, (6, 7), (6, 7))])
        g = build_graph(family)
        assert g.n == 3 and g.m == 0

    def test_fig2_family_is_triangle(self):
        g = build_graph(fig2_family())
        assert g.edges == (("a", "b"), ("a", "c"), ("b", "c"))

    def test_ten_random_rects_match_all_pairs_oracle(self):
        family = generate_family(10, seed=77)
        g = build_graph(family)
        rects = family.rects
        expected = set()
        for i in range(len(rects)):
            for j in range(i + 1, len(rects)):
                if classify_independent(rects[i], rects[j]) != "disjoint":
                    u, v = rects[i].id, rects[j].id
                    expected.add((u, v) if u < v else (v, u))
        assert set(g.edges) == expected

    def test_500_random_families_match_all_pairs_oracle(self):
        for i in range(500):
            family = generate_family(4 + (i * 13) % 47, seed=9000 + i)
            g = build_graph(family)
            count = 0
            rects = family.rects
            for a in range(len(rects)):
                for b in range(a + 1, len(rects)):
                    if classify_independent(rects[a], rects[b]) != "disjoint":
                        count += 1
            assert g.m == count


class TestPointCliques:
    def test_three_rects_sharing_a_point(self):
        family = make_family([(1, (0, 10), (0, 3)), (2, (1, 5), (1, 9)), (3, (2, 7), (2, 8))])
        cliques = enumerate_point_cliques(family, 2)
        assert frozenset({1, 2, 3}) in cliques

    def test_intersection_path_has_no_three_clique(self):
        # pairwise chain: 1-2 and 2-3 intersect, 1-3 do not
        family = make_family([(1, (0, 3), (0, 3)), (2, (2, 6), (2, 6)), (3, (5, 9), (5, 9))])
        assert enumerate_point_cliques(family, 2) == []

    def test_fig2_family_shares_a_point(self):
        cliques = enumerate_point_cliques(fig2_family(), 2)
        assert cliques == [frozenset({"a", "b", "c"})]

    def test_pairwise_intersecting_always_point_stabbed(self):
        # boxes have Helly number two: every triangle is a point clique
        rng = random.Random(5)
        found = 0
        for i in range(300):
            family = generate_family(8, seed=3000 + i, max_side=700)
            g = build_graph(family)
            triple = find_triangle(g)
            if triple is None:
                continue
            found += 1
            cliques = enumerate_point_cliques(family, 2)
            assert any(set(triple) <= clique for clique in cliques)
        assert found > 20

    def test_q_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            enumerate_point_cliques(fig2_family(), 0)


class TestFindTriangle:
    def test_k3(self):
        g = Graph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
        assert find_triangle(g) == (1, 2, 3)

    def test_bipartite_has_none(self):
        g = Graph(range(6), [(i, j + 3) for i in range(3) for j in range(3)])
        assert find_triangle(g) is None

    def test_matches_brute_force_on_random_graphs(self, rng):
        for _ in range(60):
            g = random_graph(rng, 12, 0.4)
            ours = find_triangle(g)
            brute = brute_force_triangle(g)
            assert (ours is None) == (brute is None)
            if ours is not None:
                u, v, w = ours
                assert g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)

    def test_respects_alive_filter(self):
        g = Graph([1, 2, 3, 4], [(1, 2), (2, 3), (1, 3), (3, 4)])
        assert find_triangle(g, alive={2, 3, 4}) is None
        assert find_triangle(g, alive={1, 2, 3}) == (1, 2, 3)
