import random

import pytest

from rectcover import RectFamily, normalize_general_position, rect


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def make_family(specs, normalized=True):
    """Family from (id, (xlo, xhi), (ylo, yhi)[, weight]) tuples."""
    rects = []
    for spec in specs:
        rid, x, y = spec[0], spec[1], spec[2]
        weight = spec[3] if len(spec) > 3 else 1
        rects.append(rect(rid, x, y, weight))
    family = RectFamily(tuple(rects))
    return normalize_general_position(family) if normalized else family


def fig2_family(normalized=True):
    """Three corner-intersecting rectangles forming a triangle, with six
    boundary crossings."""
    return make_family(
        [("a", (3, 6), (0, 4)), ("b", (0, 4), (1, 3)), ("c", (2, 5), (2, 5))],
        normalized=normalized,
    )
