"""Command line driver: instance generation, solving, verification, and
benchmark sweeps.

Exit codes: 0 ok, 1 invalid input, 2 verification failure, 3 resource
ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import glob
import json
import sys
import time
from fractions import Fraction

from .errors import InvalidInputError, ResourceLimitError, UncoveredEdgeError
from .geometry import normalize_general_position, to_fraction
from .graphs import build_graph
from .instances import (
    GENERATOR_KINDS,
    Instance,
    fraction_to_string,
    generate,
    instance_to_text,
    load_instance,
    save_instance,
    verify_cover,
)
from .solvers import (
    DEFAULT_EXACT_LIMIT,
    eptas_noncrossing,
    exact_vc,
    solve_general_unweighted,
    solve_general_weighted,
)
from .decompose import DEFAULT_WIDTH_CEILING

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILURE = 2
EXIT_RESOURCE_LIMIT = 3

ALGORITHMS = ("eptas", "general", "general-weighted", "exact")


def _normalized_family(instance: Instance):
    family = instance.family
    return family if family.normalized else normalize_general_position(family)


def _solve_one(instance: Instance, algorithm: str, epsilon, *, k_override, planar_route,
               width_ceiling, exact_limit):
    family = _normalized_family(instance)
    if algorithm == "exact":
        return exact_vc(build_graph(family), limit=exact_limit)
    if algorithm == "eptas":
        return eptas_noncrossing(family, epsilon, k_override=k_override,
                                 width_ceiling=width_ceiling)
    if algorithm == "general":
        return solve_general_unweighted(family, epsilon, planar_route=planar_route,
                                        k_override=k_override, width_ceiling=width_ceiling)
    if algorithm == "general-weighted":
        return solve_general_weighted(family, epsilon, k_override=k_override,
                                      width_ceiling=width_ceiling)
    raise InvalidInputError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    instance = generate(args.kind, args.n, args.seed, weighted=args.weighted,
                        grid=args.grid, max_side=args.max_side)
    _write_text(args.out, instance_to_text(instance))
    return EXIT_OK


def cmd_solve(args) -> int:
    instance = load_instance(args.instance)
    epsilon = to_fraction(args.epsilon)
    result = _solve_one(
        instance, args.algorithm, epsilon,
        k_override=args.k_override, planar_route=args.planar_route,
        width_ceiling=args.width_ceiling, exact_limit=args.exact_limit,
    )
    payload = {
        "instance": instance.name,
        "algorithm": result.algorithm,
        "epsilon": None if args.algorithm == "exact" else fraction_to_string(epsilon),
        "cover": sorted(result.cover),
        "weight": fraction_to_string(result.weight),
        "certified_ratio": fraction_to_string(result.certified_ratio),
        "lower_bound": fraction_to_string(result.lower_bound),
        "diagnostics": result.diagnostics,
    }
    _write_text(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = load_instance(args.instance)
    with open(args.cover, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{args.cover}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict) or "cover" not in payload:
        raise InvalidInputError(f"{args.cover}: missing 'cover' field")
    try:
        weight = verify_cover(instance, payload["cover"])
    except UncoveredEdgeError as exc:
        print(f"verification failed: uncovered edge {exc.edge!r}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILURE
    if "weight" in payload and to_fraction(payload["weight"]) != weight:
        print(
            f"verification failed: claimed weight {payload['weight']} but cover weighs "
            f"{fraction_to_string(weight)}",
            file=sys.stderr,
        )
        return EXIT_VERIFICATION_FAILURE
    print(f"ok: cover of weight {fraction_to_string(weight)} "
          f"({len(payload['cover'])} rectangles)")
    return EXIT_OK


def cmd_bench(args) -> int:
    paths = sorted(p for pattern in args.instances for p in glob.glob(pattern))
    if not paths:
        raise InvalidInputError("no instance files matched")
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            raise InvalidInputError(f"unknown algorithm {a!r}; choose from {ALGORITHMS}")
    epsilons = sorted(to_fraction(e.strip()) for e in args.epsilons.split(",") if e.strip())
    if not epsilons:
        raise InvalidInputError("need at least one epsilon")

    header = ["instance", "n", "algorithm", "epsilon", "cover_size", "cover_weight",
              "lower_bound", "exact_opt", "empirical_ratio", "certified_ratio",
              "wall_time_ms", "diagnostics"]
    rows = []
    for path in paths:
        instance = load_instance(path)
        n = len(instance.family)
        exact_opt = None
        per_instance = []
        for algorithm in algorithms:
            eps_values = [None] if algorithm == "exact" else epsilons
            for eps in eps_values:
                started = time.perf_counter()
                result = _solve_one(
                    instance, algorithm, eps if eps is not None else Fraction(1, 4),
                    k_override=args.k_override, planar_route=args.planar_route,
                    width_ceiling=args.width_ceiling, exact_limit=args.exact_limit,
                )
                elapsed_ms = int(1000 * (time.perf_counter() - started))
                if algorithm == "exact":
                    exact_opt = result.weight
                per_instance.append((algorithm, eps, result, elapsed_ms))
        for algorithm, eps, result, elapsed_ms in per_instance:
            ratio = ""
            if exact_opt is not None and exact_opt > 0:
                ratio = fraction_to_string(result.weight / exact_opt)
            elif exact_opt is not None and result.weight == 0:
                ratio = "1"
            rows.append([
                instance.name,
                n,
                algorithm,
                "" if eps is None else fraction_to_string(eps),
                len(result.cover),
                fraction_to_string(result.weight),
                fraction_to_string(result.lower_bound),
                "" if exact_opt is None else fraction_to_string(exact_opt),
                ratio,
                fraction_to_string(result.certified_ratio),
                elapsed_ms,
                json.dumps(result.diagnostics, sort_keys=True),
            ])

    if args.out is None or args.out == "-":
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        writer.writerows(rows)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectcover",
        description="Vertex cover approximation for axis-parallel rectangle families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded random instance")
    gen.add_argument("--kind", choices=GENERATOR_KINDS, default="uniform")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--weighted", action="store_true")
    gen.add_argument("--grid", type=int, default=1000)
    gen.add_argument("--max-side", type=int, default=400)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    def add_solver_flags(p):
        p.add_argument("--epsilon", default="1/4", help="rational, e.g. 0.25 or 1/4")
        p.add_argument("--k-override", type=int, default=None)
        p.add_argument("--planar-route", action="store_true")
        p.add_argument("--width-ceiling", type=int, default=DEFAULT_WIDTH_CEILING)
        p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance")
    solve.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    add_solver_flags(solve)
    solve.add_argument("--out", default=None)
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a cover file against an instance")
    verify.add_argument("instance")
    verify.add_argument("cover")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="sweep instances x algorithms x epsilons to CSV")
    bench.add_argument("--instances", nargs="+", required=True,
                       help="instance file paths or globs")
    bench.add_argument("--algorithms", default="eptas,exact",
                       help="comma-separated subset of " + ",".join(ALGORITHMS))
    bench.add_argument("--epsilons", default="1/4", help="comma-separated rationals")
    add_solver_flags(bench)
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
