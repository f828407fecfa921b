"""Multi-layer hexagonal colorings of the plane and their safe bands.

The plane is tiled by unit-diameter hexagons; refining by h gives h^2
interleaved layers.  A coloring with periods (p, q) paints tile (i, j)
by its coset modulo the lattice spanned by (p, q) and (p+q, -p), using
p^2 + pq + q^2 colors, and stays safe (same color implies far apart) up
to a largest distance that we compute exactly.
"""
from diskcolor import (
    HexLattice,
    PlaneColoring,
    TileIndex,
    color_count,
    fold_coloring,
    point,
    sigma_exact,
    sigma_lower_bound,
    validate_solid,
)

# The classic 7-coloring: periods (2, 1) on the unrefined tiling.
seven = PlaneColoring(HexLattice(1), 2, 1)
print("periods (2,1) use", color_count(2, 1), "colors")
row = [seven.color_of(TileIndex(i, 0)) for i in range(14)]
print("one row of tiles:", row, "(every 7th tile repeats)")

# How far does it stay safe?  The guaranteed bound is simple arithmetic;
# the exact value comes from closed-hexagon boundary distances.
bound = sigma_lower_bound(1, 2, 1)
print(f"guaranteed safe distance: {bound.value:.5f}")
print(f"exact safe distance:      {sigma_exact(1, 2, 1):.5f}")

# The stock construction for a distance band [1, sigma]: periods (p, 0)
# with p = ceil((2 sigma/sqrt3 + 1) h).  For sigma = 1, h = 1: 9 colors.
nine = fold_coloring(1, 1)
print("\nband [1,1] coloring:", nine)
report = validate_solid(nine, 1, sample_count=2000)
print("validator:", "pass" if report.passed else report.failures)

# Refinement trades more layers for a better colors-per-layer rate.
for h in (1, 2, 3, 5):
    c = fold_coloring(h, 1)
    print(f"h={h}: {c.b} layers, {c.k} colors, rate {c.k / c.b:.2f}")

# Each point gets one color per layer, all distinct.
c = fold_coloring(2, 1)
sample = point("0.2", "-0.35")
print("\nlayer colors at one point:",
      [c.color_at(sample, layer) for layer in range(1, c.b + 1)])
