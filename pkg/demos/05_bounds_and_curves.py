"""Worst-case guarantees as formulas, and where the methods cross over.

Every algorithm carries a closed-form bound on its largest color in
terms of the clique number.  With many layers the per-clique rate
improves, but a fixed overhead of roughly gamma/2 extra rounds per
layer has to be amortized, so the refined methods only win once the
clique number is large.
"""
from diskcolor import bound_formula, ceil_log2, fold_coloring

# The greedy baseline pays a factor of 28 per size class; the tile
# methods pay the color count of their plane coloring.
print("sigma   first-fit   tile(1-fold)   tile(12-color, branched)")
for sigma in ("1.5", "2", "3", "4", "6", "8"):
    ff = 28 * ceil_log2(sigma)
    simple = fold_coloring(1, sigma).k
    branch = 12 * ceil_log2(sigma)
    print(f"{sigma:>5s} {ff:8d} {simple:12d} {branch:18d}")

# Folding with h^2 layers: rate k/b -> the crossover with the first-fit
# ratio 5 for unit disks happens at large clique numbers.
print("\nunit disks, h = 5 (121 colors over 25 layers, rate 4.84):")
k, b, gamma = 121, 25, 150
for omega in (1000, 50_000, 54_450, 54_451, 108_900, 108_901, 200_000):
    plain = bound_formula("FoldColor", omega, k=k, b=b, gamma=gamma)
    shaded = bound_formula("FoldShadeColor", omega, k=k, b=b, gamma=gamma)
    print(f"omega {omega:>7d}: plain ratio {plain / omega:.5f}, "
          f"shaded ratio {shaded / omega:.5f}")
print("shaded folding reaches ratio 5 at 54450 and stays below it from "
      "54451; plain folding needs 108901")

# The shading halves the amortized overhead: gamma vs gamma/2.
omega = 10_000
for h in (1, 2, 3):
    c = fold_coloring(h, 1)
    plain = bound_formula("FoldColor", omega, k=c.k, b=c.b, gamma=c.lattice.gamma)
    shaded = bound_formula("FoldShadeColor", omega, k=c.k, b=c.b,
                           gamma=c.lattice.gamma)
    print(f"h={h}: plain {plain}, shaded {shaded} "
          f"(saves {plain - shaded} colors at omega={omega})")
