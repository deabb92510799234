"""Instance files, seeded generators, and cover verification.

Instances are JSON documents with exact coordinates: after normalization
all values live on an integer grid and are serialized as decimal strings,
so files round-trip bit for bit and diffs stay readable.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import GenerationBudgetError, InvalidInputError
from .geometry import (
    Interval,
    Kind,
    Rect,
    RectFamily,
    classify_pair,
    normalize_general_position,
    to_fraction,
)
from .graphs import build_graph

GENERATOR_KINDS = ("uniform", "non_crossing", "triangle_free")


def fraction_to_string(value: Fraction) -> str:
    """Exact decimal string when the denominator is 2^a 5^b, else 'p/q'."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** places // value.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if value < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True)
class Instance:
    name: str
    weighted: bool
    family: RectFamily


def instance_to_json(instance: Instance) -> dict:
    rectangles = []
    for r in instance.family.rects:
        entry = {
            "id": r.id,
            "x": [fraction_to_string(r.x.lo), fraction_to_string(r.x.hi)],
            "y": [fraction_to_string(r.y.lo), fraction_to_string(r.y.hi)],
        }
        if instance.weighted:
            entry["weight"] = fraction_to_string(r.weight)
        rectangles.append(entry)
    return {
        "name": instance.name,
        "weighted": instance.weighted,
        "normalized": instance.family.normalized,
        "rectangles": rectangles,
    }


def instance_from_json(payload: dict) -> Instance:
    try:
        name = payload["name"]
        weighted = bool(payload["weighted"])
        raw = payload["rectangles"]
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"malformed instance document: {exc}") from exc
    rects = []
    for entry in raw:
        try:
            rid = entry["id"]
            x = entry["x"]
            y = entry["y"]
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed rectangle entry: {entry!r}") from exc
        if weighted != ("weight" in entry):
            raise InvalidInputError(
                f"rectangle {rid!r}: weight must be present iff the instance is weighted"
            )
        weight = to_fraction(entry.get("weight", 1))
        rects.append(
            Rect(rid, Interval(to_fraction(x[0]), to_fraction(x[1])),
                 Interval(to_fraction(y[0]), to_fraction(y[1])), weight)
        )
    family = RectFamily(tuple(rects), normalized=bool(payload.get("normalized", False)))
    return Instance(name, weighted, family)


def instance_to_text(instance: Instance) -> str:
    return json.dumps(instance_to_json(instance), indent=2, sort_keys=True) + "\n"


def save_instance(instance: Instance, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(instance_to_text(instance))


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_json(payload)


def generate_family(n: int, seed: int, *, forbid_crossing: bool = False,
                    forbid_triangle: bool = False, weighted: bool = False,
                    grid: int = 1000, max_side: int = 400,
                    budget: int = 4000) -> RectFamily:
    """Seeded random family on an integer grid, normalized.

    Endpoints are drawn without repeats per axis so classification is
    stable under normalization.  Rectangles violating a constraint are
    resampled; ``budget`` caps the total number of draws.
    """
    if n < 0:
        raise InvalidInputError("n must be non-negative")
    if grid < 2 or max_side < 1 or max_side >= grid:
        raise InvalidInputError("need grid >= 2 and 1 <= max_side < grid")
    rng = random.Random(seed)
    rects = []
    used_x = set()
    used_y = set()
    adjacency = {i: set() for i in range(n)}
    attempts = 0
    while len(rects) < n:
        attempts += 1
        if attempts > budget:
            raise GenerationBudgetError(
                "rejection budget exhausted; lower the density (smaller max_side "
                "or larger grid)"
            )
        side_x = rng.randint(1, max_side)
        side_y = rng.randint(1, max_side)
        x_lo = rng.randint(0, grid - side_x)
        y_lo = rng.randint(0, grid - side_y)
        x_hi, y_hi = x_lo + side_x, y_lo + side_y
        if {x_lo, x_hi} & used_x or {y_lo, y_hi} & used_y:
            continue
        rid = len(rects)
        weight = Fraction(rng.randint(100, 1000), 100) if weighted else Fraction(1)
        candidate = Rect(rid, Interval(Fraction(x_lo), Fraction(x_hi)),
                         Interval(Fraction(y_lo), Fraction(y_hi)), weight)
        kinds = {r.id: classify_pair(candidate, r) for r in rects}
        if forbid_crossing and any(k.kind is Kind.CROSSING for k in kinds.values()):
            continue
        neighbors = {r.id for r in rects if kinds[r.id].intersecting}
        if forbid_triangle and any(
            other in adjacency[first]
            for first in neighbors
            for other in neighbors
            if first < other
        ):
            continue
        for other in neighbors:
            adjacency[rid].add(other)
            adjacency[other].add(rid)
        used_x.update((x_lo, x_hi))
        used_y.update((y_lo, y_hi))
        rects.append(candidate)
    return normalize_general_position(RectFamily(tuple(rects)))


def generate(kind: str, n: int, seed: int, *, weighted: bool = False,
             grid: int = 1000, max_side: int = 400, budget: int = 4000) -> Instance:
    """Seeded instance of one of the named kinds.

    ``uniform`` draws independent boxes; ``non_crossing`` resamples any
    rectangle that would cross an accepted one; ``triangle_free``
    resamples any rectangle completing a pairwise-intersecting triple.
    """
    if kind not in GENERATOR_KINDS:
        raise InvalidInputError(f"unknown generator kind {kind!r}; choose from {GENERATOR_KINDS}")
    family = generate_family(
        n,
        seed,
        forbid_crossing=(kind == "non_crossing"),
        forbid_triangle=(kind == "triangle_free"),
        weighted=weighted,
        grid=grid,
        max_side=max_side,
        budget=budget,
    )
    return Instance(f"{kind}-n{n}-seed{seed}", weighted, family)


def verify_cover(instance: Instance, cover: Iterable) -> Fraction:
    """Independent check of a claimed cover; returns its weight.

    Raises on unknown ids or an uncovered edge (with the witness edge).
    """
    cover = list(cover)
    known = set(instance.family.ids())
    unknown = [c for c in cover if c not in known]
    if unknown:
        raise InvalidInputError(f"cover names unknown rectangles {unknown!r}")
    if len(set(cover)) != len(cover):
        raise InvalidInputError("cover lists a rectangle twice")
    family = instance.family
    if not family.normalized:
        family = normalize_general_position(family)
    g = build_graph(family)
    ok, witness = g.is_vertex_cover(cover)
    if not ok:
        from .errors import UncoveredEdgeError

        raise UncoveredEdgeError(witness)
    return g.total_weight(cover)
