"""Online coloring of a disk stream, verified after the fact.

Disks arrive one at a time with diameters in [1, sigma]; every disk is
colored immediately and never recolored.  Afterwards an offline oracle
builds the exact intersection graph and confirms no edge is
monochromatic, and the largest color stays within the worst-case bound
evaluated at the exact clique number.
"""
from diskcolor import (
    KINDS,
    bound_for_config,
    build_disk_graph,
    gen_random_disks,
    gen_tile_clique,
    make_config,
    max_clique_exact,
    run_online,
    verify_coloring,
)

instance = gen_random_disks(250, sigma="2", box_side="14", seed=2024)
graph = build_disk_graph(instance.disks)
omega = max_clique_exact(graph, limit=300)
print(f"instance: n=250, sigma=2, omega={omega}, "
      f"edges={sum(len(a) for a in graph.adj) // 2}")

print(f"\n{'algorithm':18s} {'colors':>6s} {'max':>5s} {'bound':>6s} verified")
for kind in KINDS:
    h = 2 if "Fold" in kind else 1
    config = make_config(kind, "2", h=h)
    result = run_online(config, instance.disks)
    ok = verify_coloring(graph, result.colors).passed
    bound = bound_for_config(config, omega)
    print(f"{kind:18s} {result.colors_used:6d} {result.max_value:5d} "
          f"{bound:6d} {ok}")

# The prefix property: colors never depend on later disks.
config = make_config("FoldShadeColor", "2", h=2)
full = run_online(config, instance.disks)
half = run_online(config, instance.disks[:125])
print("\nprefix of 125 colored identically:", full.colors[:125] == half.colors)

# An adversarial stream: every disk lands in one subtile, so they form
# one big clique and exercise the counter path of the tile algorithms.
clique = gen_tile_clique(40, h=2)
config = make_config("FoldShadeColor", "1", h=2)
result = run_online(config, clique.disks)
print(f"\n40-clique in one subtile: max value {result.max_value}, "
      f"bound {bound_for_config(config, 40)}")
