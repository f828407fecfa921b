"""Online coloring and distance-two labeling of disk intersection graphs.

The library couples exactly-computed multi-layer hexagonal colorings of
the plane with single-pass coloring algorithms for streams of disks and
convex shapes, plus offline oracles that certify every output.
"""

from .exactmath import ExactScalar, as_rational, as_scalar, compare
from .geometry import (
    Disk,
    Point,
    disk,
    disks_intersect,
    point,
    polygon_min_sq_dist,
    second_neighbor_possible,
    sq_dist,
)
from .online import (
    KINDS,
    AlgorithmConfig,
    OnlineColor,
    OnlineColorer,
    RunResult,
    bound_for_config,
    bound_formula,
    branch_index,
    ceil_log2,
    make_config,
    run_online,
)
from .oracles import (
    DiskInstance,
    IntersectionGraph,
    RatioReport,
    build_disk_graph,
    build_shape_graph,
    chromatic_exact,
    competitive_report,
    gen_random_disks,
    gen_tile_clique,
    l21_span_exact,
    max_clique_exact,
    verify_coloring,
    verify_l21,
)
from .plane_coloring import (
    CyclicLabeling,
    PlaneColoring,
    color_count,
    double_range_base,
    fold_coloring,
    lstar_six_label,
    lstar_three_label,
    sigma_exact,
    sigma_lower_bound,
    validate_lstar,
    validate_solid,
)
from .shapes import (
    ConvexShape,
    ShapeInstance,
    ShapeMetrics,
    convex_shape,
    gen_random_shapes,
    inner_outer,
    run_shapes,
    shapes_intersect,
)
from .tiling import HexLattice, TileIndex, subtile_count

__version__ = "0.1.0"

__all__ = [
    "AlgorithmConfig",
    "ConvexShape",
    "CyclicLabeling",
    "Disk",
    "DiskInstance",
    "ExactScalar",
    "HexLattice",
    "IntersectionGraph",
    "KINDS",
    "OnlineColor",
    "OnlineColorer",
    "PlaneColoring",
    "Point",
    "RatioReport",
    "RunResult",
    "ShapeInstance",
    "ShapeMetrics",
    "TileIndex",
    "as_rational",
    "as_scalar",
    "bound_for_config",
    "bound_formula",
    "branch_index",
    "build_disk_graph",
    "build_shape_graph",
    "ceil_log2",
    "chromatic_exact",
    "color_count",
    "compare",
    "competitive_report",
    "convex_shape",
    "disk",
    "disks_intersect",
    "double_range_base",
    "fold_coloring",
    "gen_random_disks",
    "gen_random_shapes",
    "gen_tile_clique",
    "inner_outer",
    "l21_span_exact",
    "lstar_six_label",
    "lstar_three_label",
    "make_config",
    "max_clique_exact",
    "point",
    "polygon_min_sq_dist",
    "run_online",
    "run_shapes",
    "second_neighbor_possible",
    "shapes_intersect",
    "sigma_exact",
    "sigma_lower_bound",
    "sq_dist",
    "subtile_count",
    "validate_lstar",
    "validate_solid",
    "verify_coloring",
    "verify_l21",
]
