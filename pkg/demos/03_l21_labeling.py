"""Online distance-two labeling: adjacent disks differ by at least 2,
disks with a common neighbor never share a label.

The engine is the shaded folding algorithm run against a special plane
labeling: same-label tiles sit beyond twice the band, cyclically
consecutive labels beyond the band itself, and one declared-but-unused
guard label keeps the first and last labels from ever clashing.
"""
from diskcolor import (
    build_disk_graph,
    gen_random_disks,
    l21_span_exact,
    lstar_six_label,
    lstar_three_label,
    make_config,
    max_clique_exact,
    run_online,
    validate_lstar,
    verify_l21,
)
from diskcolor.online import bound_for_config

# Plane labelings: 3 labels per class while sigma <= 1/(4 - 2*sqrt(3)),
# 6 labels per class beyond that.
lab3 = lstar_three_label(1, 1)
print(f"three-label map, sigma=1: {lab3.k} labels "
      f"({lab3.labels_used} used + guard)")
print("validates:", validate_lstar(lab3, 1, sample_count=500).passed)

lab6 = lstar_six_label(1, 2)
print(f"six-label map, sigma=2:   {lab6.k} labels")
print("validates:", validate_lstar(lab6, 2, sample_count=500).passed)

# Remove the guard and the wrap pair (largest, smallest) gets too close.
broken = lab3.without_guard()
report = validate_lstar(broken, 1, sample_count=100)
print("guard removed still valid?", report.passed,
      "->", report.failures[:1])

# Online labeling of a random stream, checked by breadth-first search.
instance = gen_random_disks(150, sigma="1", box_side="9", seed=7)
graph = build_disk_graph(instance.disks)
config = make_config("FoldShadeColor", "1", h=2, mode="l21")
result = run_online(config, instance.disks)
labels = [c.value for c in result.colors]
print(f"\nn=150 run: max label {max(labels)}, "
      f"violations: {len(verify_l21(graph, labels).conflicts)}")
omega = max_clique_exact(graph, limit=200)
print(f"exact omega {omega}, label bound {bound_for_config(config, omega)}")

# For a tiny instance the optimal span is computable exactly.
small = gen_random_disks(8, sigma="1", box_side="3", seed=3)
g = build_disk_graph(small.disks)
print(f"\noptimal span of an 8-disk instance: {l21_span_exact(g)}")
