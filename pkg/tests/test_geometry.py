import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectcover import (
    Kind,
    RectFamily,
    boundary_intersection_points,
    classify_pair,
    normalize_general_position,
    rect,
    to_fraction,
)
from rectcover.errors import InvalidInputError

from conftest import fig2_family, make_family
from oracles import classify_independent, segment_boundary_crossings


@st.composite
def general_position_families(draw, min_rects=1, max_rects=6, span=500):
    n = draw(st.integers(min_rects, max_rects))
    xs = draw(st.lists(st.integers(0, span), min_size=2 * n, max_size=2 * n, unique=True))
    ys = draw(st.lists(st.integers(0, span), min_size=2 * n, max_size=2 * n, unique=True))
    rects = []
    for i in range(n):
        x = sorted((xs[2 * i], xs[2 * i + 1]))
        y = sorted((ys[2 * i], ys[2 * i + 1]))
        rects.append(rect(i, x, y))
    return normalize_general_position(RectFamily(tuple(rects)))


def random_pair(rng, span=100):
    def one(rid, used_x, used_y):
        while True:
            a, b = rng.randint(0, span), rng.randint(0, span)
            c, d = rng.randint(0, span), rng.randint(0, span)
            vals_x, vals_y = {a, b}, {c, d}
            if len(vals_x) == 2 and len(vals_y) == 2 and not vals_x & used_x and not vals_y & used_y:
                used_x |= vals_x
                used_y |= vals_y
                return rect(rid, sorted((a, b)), sorted((c, d)))

    used_x, used_y = set(), set()
    return one(0, used_x, used_y), one(1, used_x, used_y)


class TestToFraction:
    def test_accepted_forms(self):
        assert to_fraction("3/4") == Fraction(3, 4)
        assert to_fraction("0.25") == Fraction(1, 4)
        assert to_fraction(2) == Fraction(2)
        assert to_fraction(0.1) == Fraction(1, 10)

    def test_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            to_fraction("abc")
        with pytest.raises(InvalidInputError):
            to_fraction(None)


class TestRectModel:
    def test_degenerate_rejected(self):
        with pytest.raises(InvalidInputError):
            rect(0, (5, 5), (0, 1))
        with pytest.raises(InvalidInputError):
            rect(0, (0, 1), (3, 2))

    def test_negative_weight_rejected(self):
        with pytest.raises(InvalidInputError):
            rect(0, (0, 1), (0, 1), weight=-1)

    def test_duplicate_ids_rejected(self):
        with pytest.raises(InvalidInputError):
            RectFamily((rect(0, (0, 1), (0, 1)), rect(0, (2, 3), (2, 3))))


class TestNormalization:
    def test_disjoint_pair_topology_preserved(self):
        family = make_family([(1, (0, 2), (0, 2)), (2, (5, 8), (5, 8))], normalized=False)
        normalized = normalize_general_position(family)
        a, b = normalized.rects
        assert classify_pair(a, b).kind is Kind.DISJOINT
        assert normalized.normalized

    def test_touching_pair_tiebroken_by_id(self):
        family = RectFamily((rect(1, (0, 5), (0, 4)), rect(2, (5, 9), (1, 3))))
        normalized = normalize_general_position(family)
        r1, r2 = normalized.by_id(1), normalized.by_id(2)
        assert r1.x.hi < r2.x.lo
        assert classify_pair(r1, r2).kind is Kind.DISJOINT

    def test_corner_family_all_pairs_preserved(self):
        raw = fig2_family(normalized=False)
        normalized = normalize_general_position(raw)
        endpoints = [v for r in normalized.rects for v in (r.x.lo, r.x.hi, r.y.lo, r.y.hi)]
        assert len(set(endpoints)) == 12
        for i in range(3):
            for j in range(i + 1, 3):
                before = classify_pair(raw.rects[i], raw.rects[j]).kind
                after = classify_pair(normalized.rects[i], normalized.rects[j]).kind
                assert before is Kind.CORNER
                assert after is before

    @given(general_position_families())
    @settings(max_examples=60, deadline=None)
    def test_idempotent(self, family):
        again = normalize_general_position(family)
        assert again.rects == family.rects

    @given(general_position_families(min_rects=2, max_rects=5))
    @settings(max_examples=60, deadline=None)
    def test_all_endpoints_distinct(self, family):
        endpoints = [v for r in family.rects for v in (r.x.lo, r.x.hi, r.y.lo, r.y.hi)]
        assert len(set(endpoints)) == len(endpoints)


class TestClassifyPair:
    def test_containment(self):
        kind = classify_pair(rect(1, (0, 10), (0, 10)), rect(2, (2, 5), (3, 6)))
        assert kind.kind is Kind.CONTAINMENT
        assert kind.container_id == 1 and kind.contained_id == 2

    def test_corner_one(self):
        kind = classify_pair(rect(1, (0, 4), (0, 4)), rect(2, (2, 6), (2, 6)))
        assert kind.kind is Kind.CORNER
        assert kind.corner_count == 1

    def test_corner_two(self):
        kind = classify_pair(rect(1, (0, 10), (0, 6)), rect(2, (3, 7), (4, 9)))
        assert kind.kind is Kind.CORNER
        assert kind.corner_count == 2

    def test_crossing(self):
        kind = classify_pair(rect(1, (1, 4), (0, 6)), rect(2, (0, 6), (2, 4)))
        assert kind.kind is Kind.CROSSING

    def test_symmetric_kind(self, rng):
        for _ in range(200):
            a, b = random_pair(rng)
            assert classify_pair(a, b).kind is classify_pair(b, a).kind

    def test_thousand_random_pairs_match_independent_classifier(self, rng):
        for _ in range(1000):
            a, b = random_pair(rng)
            assert classify_pair(a, b).kind.value == classify_independent(a, b)


class TestBoundaryPoints:
    def test_containment_pair_no_crossings(self):
        assert boundary_intersection_points(rect(1, (0, 10), (0, 10)), rect(2, (2, 5), (3, 6))) == []

    def test_corner_pair_two_points(self):
        a, b = rect(1, (0, 4), (0, 4)), rect(2, (2, 6), (2, 6))
        pts = [(p.x, p.y) for p in boundary_intersection_points(a, b)]
        assert pts == segment_boundary_crossings(a, b)
        assert pts == [(Fraction(2), Fraction(4)), (Fraction(4), Fraction(2))]

    def test_crossing_pair_four_points(self):
        a, b = rect(1, (1, 4), (0, 6)), rect(2, (0, 6), (2, 4))
        pts = boundary_intersection_points(a, b)
        assert len(pts) == 4
        assert [(p.x, p.y) for p in pts] == segment_boundary_crossings(a, b)

    def test_pair_annotation(self):
        a, b = rect("p", (0, 4), (0, 4)), rect("q", (2, 6), (2, 6))
        assert all(p.pair == ("p", "q") for p in boundary_intersection_points(a, b))

    def test_trichotomy_point_counts(self, rng):
        expected = {Kind.DISJOINT: 0, Kind.CONTAINMENT: 0, Kind.CORNER: 2, Kind.CROSSING: 4}
        for _ in range(500):
            a, b = random_pair(rng)
            kind = classify_pair(a, b)
            assert len(boundary_intersection_points(a, b)) == expected[kind.kind]
