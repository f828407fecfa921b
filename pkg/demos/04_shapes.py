"""Coloring streams of convex shapes through their centered disks.

Each shape contributes only three numbers: its center, the diameter of
the largest centered disk inside it, and the diameter of the smallest
centered disk around it.  If inner disks meet, the shapes meet; if the
shapes meet, the outer disks meet.  Widening the plane coloring's band
by the outer/inner ratio rho makes the center-based coloring proper for
the true shape graph.
"""
from diskcolor import (
    build_shape_graph,
    convex_shape,
    fold_coloring,
    gen_random_shapes,
    inner_outer,
    make_config,
    run_shapes,
    shapes_intersect,
    verify_coloring,
)

# A unit square seen through its disks.
square = convex_shape(
    [("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")], ("0.5", "0.5")
)
m = inner_outer(square)
print(f"unit square: inner {m.inner_diameter:.4f}, outer {m.outer_diameter:.4f}, "
      f"rho {m.rho:.4f}")

# A stream of jittered polygons with rho <= 2 and inner diameters in
# [1, 1.5]; the base coloring must cover the widened band [1, 3].
sigma, rho = "1.5", "2"
instance = gen_random_shapes(120, sigma=sigma, box_side="12", seed=11, rho_max=rho)
base = fold_coloring(2, "3")  # rho * sigma = 3
config = make_config("FoldShadeColor", sigma, h=2, base=base)
result = run_shapes(config, instance.shapes, rho_bound=rho)

graph = build_shape_graph(instance.shapes)
print(f"\n120 shapes: edges={sum(len(a) for a in graph.adj) // 2}, "
      f"colors used {result.colors_used}, max value {result.max_value}")
print("proper on the true shape graph:",
      verify_coloring(graph, result.colors).passed)

# Branching on the inner diameter reuses one [1, 2*rho] coloring.
base4 = fold_coloring(2, "4")
config_b = make_config("BranchFoldColor", sigma, h=2, base=base4)
result_b = run_shapes(config_b, instance.shapes, rho_bound=rho)
print("branched variant proper:",
      verify_coloring(graph, result_b.colors).passed)

# Rotation changes nothing: the disks are rotation-invariant.
a = convex_shape([("2", "0"), ("3", "1"), ("2", "2"), ("1", "1")], ("2", "1"))
b = convex_shape([("3", "1"), ("2", "2"), ("1", "1"), ("2", "0")], ("2", "1"))
print("\nsame diamond listed from another vertex:",
      inner_outer(a) == inner_outer(b), "| still meet:", shapes_intersect(a, b))
