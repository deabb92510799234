"""Vertex cover approximation for axis-parallel rectangle intersection
graphs: an EPTAS for non-crossing families via arrangement graphs and
layer deletion, and (1.5 + epsilon) algorithms for general families,
weighted or not, validated against exact desk-scale oracles."""

from . import errors
from .arrangement import ArrangementGraph, Fragment, Joint, build_arrangement
from .clean import (
    CleanResult,
    clean_family,
    crossing_precedes,
    dilworth_partition,
    local_ratio_triangle_free,
)
from .decompose import (
    DEFAULT_WIDTH_CEILING,
    LayerClasses,
    TreeDecomposition,
    bfs_layer_classes,
    heuristic_tree_decomposition,
    transfer_td,
    validate_td,
    vc_dp,
)
from .geometry import (
    BoundaryPoint,
    IntersectionKind,
    Interval,
    Kind,
    Rect,
    RectFamily,
    boundary_intersection_points,
    classify_pair,
    normalize_general_position,
    rect,
    to_fraction,
)
from .graphs import (
    Graph,
    build_graph,
    enumerate_point_cliques,
    find_triangle,
    point_stabbed_sets,
)
from .instances import (
    Instance,
    fraction_to_string,
    generate,
    generate_family,
    instance_from_json,
    instance_to_json,
    load_instance,
    save_instance,
    verify_cover,
)
from .kernelize import NtReduction, graph_lp_value, nt_lift, nt_reduce
from .solvers import (
    DEFAULT_EXACT_LIMIT,
    CoverResult,
    Params,
    eptas_noncrossing,
    exact_vc,
    lp_lower_bound,
    solve_general_unweighted,
    solve_general_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementGraph",
    "BoundaryPoint",
    "CleanResult",
    "CoverResult",
    "DEFAULT_EXACT_LIMIT",
    "DEFAULT_WIDTH_CEILING",
    "Fragment",
    "Graph",
    "Instance",
    "IntersectionKind",
    "Interval",
    "Joint",
    "Kind",
    "LayerClasses",
    "NtReduction",
    "Params",
    "Rect",
    "RectFamily",
    "TreeDecomposition",
    "bfs_layer_classes",
    "boundary_intersection_points",
    "build_arrangement",
    "build_graph",
    "classify_pair",
    "clean_family",
    "crossing_precedes",
    "dilworth_partition",
    "enumerate_point_cliques",
    "eptas_noncrossing",
    "errors",
    "exact_vc",
    "find_triangle",
    "fraction_to_string",
    "generate",
    "generate_family",
    "graph_lp_value",
    "heuristic_tree_decomposition",
    "instance_from_json",
    "instance_to_json",
    "load_instance",
    "local_ratio_triangle_free",
    "lp_lower_bound",
    "nt_lift",
    "nt_reduce",
    "normalize_general_position",
    "point_stabbed_sets",
    "rect",
    "save_instance",
    "solve_general_unweighted",
    "solve_general_weighted",
    "to_fraction",
    "transfer_td",
    "validate_td",
    "vc_dp",
    "verify_cover",
]
