"""Acceptance suite: one test per shipping criterion, at stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion with its runtime.  Every expected value here is either derived
from an independent computation in this file, frozen from a hand
evaluation recorded in the test, or checked to a stated tolerance.
"""
import filecmp
import time

import pytest

from oracle_helpers import (
    brute_chromatic,
    brute_l21_span,
    brute_max_clique,
    centered_disks_meet,
)

from diskcolor.cli import main
from diskcolor.online import bound_for_config, bound_formula, make_config, run_online
from diskcolor.oracles import (
    build_disk_graph,
    build_shape_graph,
    chromatic_exact,
    gen_random_disks,
    gen_tile_clique,
    l21_span_exact,
    max_clique_exact,
    verify_coloring,
    verify_l21,
)
from diskcolor.plane_coloring import (
    PlaneColoring,
    color_count,
    fold_coloring,
    lstar_six_label,
    lstar_three_label,
    validate_lstar,
)
from diskcolor.shapes import gen_random_shapes, inner_outer, run_shapes
from diskcolor.tiling import HexLattice, TileIndex, subtile_count


def _report(num, text, started):
    print(f"PASS criterion {num}: {text} [{time.time() - started:.1f}s]")


def test_criterion_01_color_count_law():
    started = time.time()
    lattices = {h: HexLattice(h) for h in (1, 2, 3)}
    for h in (1, 2, 3):
        for p in range(0, 9):
            for q in range(0, 9):
                if (p, q) == (0, 0):
                    continue
                pc = PlaneColoring(lattices[h], p, q)
                span = 2 * (p + q) + 2
                patch = {
                    pc.color_of(TileIndex(i, j))
                    for i in range(-span, span + 1)
                    for j in range(-span, span + 1)
                }
                assert len(patch) == color_count(p, q) == p * p + p * q + q * q, (h, p, q)
    assert time.time() - started < 30
    _report(1, "patch enumeration shows exactly p^2+pq+q^2 colors "
               "for h in {1,2,3}, p,q <= 8", started)


def test_criterion_02_records_table(tmp_path):
    started = time.time()
    out = tmp_path / "records.csv"
    assert main(["plane", "records", "--h", "1", "2", "3", "--max-pq", "14",
                 "--sigma-max", "3.05", "--out", str(out)]) == 0
    rows = []
    for line in out.read_text().splitlines()[1:]:
        sigma, _ratio, b, k, p, q = line.split(",")
        rows.append((float(sigma), int(b), int(k), int(p), int(q)))
    required = [
        (1.01036, 9, 43, 1, 6),
        (1.08253, 4, 21, 1, 4),
        (1.15470, 9, 49, 0, 7),
        (1.51554, 4, 31, 1, 5),
        (1.73205, 9, 84, 2, 8),
        (3.03109, 9, 183, 1, 13),
    ]
    for sigma, b, k, p, q in required:
        hit = [r for r in rows if r[1] == b and r[2] == k and r[3] == p and r[4] == q]
        assert hit, (sigma, b, k, p, q)
        assert abs(hit[0][0] - sigma) < 1e-4, (sigma, hit[0][0])
    assert time.time() - started < 120
    _report(2, "`plane records` reproduces the six frozen table rows "
               "within 1e-4 on sigma", started)


def test_criterion_03_subtile_counts():
    started = time.time()
    expected = [1, 12, 54, 96, 150]
    for h, want in zip(range(1, 6), expected):
        lat = HexLattice(h)
        got = len(lat.subtiles_of_tile(TileIndex(0, 0)))
        assert got == want == subtile_count(h), h
    assert time.time() - started < 10
    _report(3, "subtiles per tile are 1, 12, 54, 96, 150 for h = 1..5", started)


def test_criterion_04_shading_balance():
    started = time.time()
    for h in range(1, 6):
        lat = HexLattice(h)
        report = lat.validate_shading()
        assert report.passed, (h, report.failures)
        assert report.per_shade == subtile_count(h) // (h * h)
        assert all(
            count == report.per_shade
            for counts in report.counts.values()
            for count in counts
        )
    assert time.time() - started < 30
    _report(4, "shading is balanced (gamma/b per shade) in every layer "
               "for h = 1..5", started)


_SIGMAS = ("1", "1.5", "2", "4")
_KINDS6 = ("BranchFF", "SimpleColor", "BranchColor",
           "FoldColor", "FoldShadeColor", "BranchFoldColor")


def _config_cache():
    cache = {}

    def get(kind, sigma, h):
        key = (kind, sigma, h)
        if key not in cache:
            cache[key] = make_config(kind, sigma, h=h)
        return cache[key]

    return get


def _size_schedule(i):
    if i == 499:
        return 2000
    if i == 799:
        return 1500
    if i % 125 == 99:
        return 600
    return (20, 30, 45, 60, 90, 120)[i % 6]


def test_criterion_05_online_soundness_thousand_instances():
    started = time.time()
    get_config = _config_cache()
    checked = 0
    for i in range(1000):
        kind = _KINDS6[i % 6]
        sigma = _SIGMAS[(i // 6) % 4]
        if kind in ("BranchFF", "SimpleColor", "BranchColor"):
            h = 1
        elif kind == "BranchFoldColor":
            h = (1, 3)[(i // 24) % 2]
        else:
            h = (1, 2, 3)[(i // 24) % 3]
        n = _size_schedule(i)
        inst = gen_random_disks(n, sigma=sigma, box_side=str(max(6, n // 12)),
                                seed=10_000 + i)
        config = get_config(kind, sigma, h)
        result = run_online(config, inst.disks)
        graph = build_disk_graph(inst.disks)
        report = verify_coloring(graph, result.colors)
        assert report.passed, (i, kind, sigma, h, report.conflicts[:3])
        checked += 1
    assert checked == 1000
    assert time.time() - started < 600
    _report(5, "1000 seeded runs (n up to 2000, sigma in {1,1.5,2,4}, "
               "six algorithms) verify with zero conflicts", started)


_BOUNDED_KINDS = ("SimpleColor", "BranchColor", "FoldColor",
                  "FoldShadeColor", "BranchFoldColor")


def test_criterion_06_bound_compliance():
    started = time.time()
    get_config = _config_cache()
    for i in range(200):
        kind = _BOUNDED_KINDS[i % 5]
        # branching degenerates at sigma = 1 (log factor is zero); use > 1
        sigma = ("1.5", "2", "4")[(i // 5) % 3] if kind != "SimpleColor" else \
            _SIGMAS[(i // 5) % 4]
        h = 1 if kind in ("SimpleColor", "BranchColor") else (1, 2, 3)[(i // 15) % 3]
        n = 10 + (i * 7) % 91  # 10..100
        inst = gen_random_disks(n, sigma=sigma, box_side=str(max(4, n // 10)),
                                seed=50_000 + i)
        config = get_config(kind, sigma, h)
        result = run_online(config, inst.disks)
        graph = build_disk_graph(inst.disks)
        assert verify_coloring(graph, result.colors).passed
        omega = max_clique_exact(graph, limit=100)
        assert result.max_value <= bound_for_config(config, omega), (i, kind)
        assert len(result.branches_used) <= config.max_branches
    # adversarial single-subtile cliques meet the bounds too
    for kind in _BOUNDED_KINDS:
        sigma = "1" if kind in ("SimpleColor", "FoldColor", "FoldShadeColor") else "1.5"
        for h in ((1,) if kind in ("SimpleColor", "BranchColor") else (1, 2, 3)):
            for n in (1, 5, 12, 30, 60):
                inst = gen_tile_clique(n, h=h)
                config = make_config(kind, sigma, h=h)
                result = run_online(config, inst.disks)
                graph = build_disk_graph(inst.disks)
                assert max_clique_exact(graph) == n
                assert verify_coloring(graph, result.colors).passed
                assert result.max_value <= bound_for_config(config, n), (kind, h, n)
    assert time.time() - started < 600
    _report(6, "200 random instances with exact omega and tile-cliques up "
               "to 60 all respect the largest-color bounds", started)


def test_criterion_07_ratio_thresholds():
    started = time.time()
    # h = 5, sigma = 1: k = 121, b = 25, gamma = 150
    base = fold_coloring(5, 1)
    assert (base.k, base.b, base.lattice.gamma) == (121, 25, 150)
    k, b, g = 121, 25, 150

    def fold_bound(w):
        return bound_formula("FoldColor", w, k=k, b=b, gamma=g)

    def shade_bound(w):
        return bound_formula("FoldShadeColor", w, k=k, b=b, gamma=g)

    # plain folding sits at exactly 5*omega at 108900 and is permanently
    # below from 108901 on (the floor makes it dip below sporadically
    # before that, which is fine and expected)
    assert fold_bound(108900) == 5 * 108900
    for w in range(108901, 109201):
        assert fold_bound(w) < 5 * w
    # shaded folding: equality at 54450, permanently below from 54451
    assert shade_bound(54450) == 5 * 54450
    for w in range(54451, 54751):
        assert shade_bound(w) < 5 * w
    assert time.time() - started < 1
    _report(7, "h=5 thresholds: folding beats 5w first at 108901; shaded "
               "folding ties 5w at 54450 and wins from 54451", started)


def test_criterion_08_plane_labelings():
    started = time.time()
    for h in (1, 2):
        lab = lstar_three_label(h, 1)
        # k = 3 * ceil(h(2/sqrt3 + 1) + 1)^2 + 1, evaluated independently
        import math

        p_expected = math.ceil(h * (2 / math.sqrt(3) + 1) + 1 - 1e-12)
        assert lab.k == 3 * p_expected**2 + 1
        assert validate_lstar(lab, 1, sample_count=500).passed
    lab6 = lstar_six_label(1, 2)
    assert lab6.k == 151
    assert validate_lstar(lab6, 2, sample_count=500).passed
    assert time.time() - started < 60
    _report(8, "three-label maps for h in {1,2} at sigma=1 and the "
               "151-label six-label map at sigma=2 all validate", started)


def test_criterion_09_online_l21_soundness():
    started = time.time()
    jobs = []
    for i in range(100):  # sigma = 1, n <= 300
        jobs.append(("1", (1, 2)[i % 2], None, 20 + (i * 13) % 81 if i != 50 else 300, i))
    for i in range(50):  # sigma = 1.8 with the three-label base
        jobs.append(("1.8", (1, 2)[i % 2], 3, 15 + (i * 11) % 66, 400 + i))
    for i in range(50):  # sigma = 2 with the six-label base
        jobs.append(("2", 1, 6, 15 + (i * 11) % 66, 800 + i))
    assert len(jobs) == 200
    configs = {}
    for sigma, h, span, n, seed in jobs:
        key = (sigma, h, span)
        if key not in configs:
            configs[key] = make_config("FoldShadeColor", sigma, h=h,
                                       mode="l21", label_span=span)
        config = configs[key]
        inst = gen_random_disks(n, sigma=sigma, box_side=str(max(5, n // 8)),
                                seed=90_000 + seed)
        result = run_online(config, inst.disks)
        graph = build_disk_graph(inst.disks)
        labels = [c.value for c in result.colors]
        report = verify_l21(graph, labels)
        assert report.passed, (sigma, h, span, n, report.conflicts[:3])
        if n <= 100:
            omega = max_clique_exact(graph, limit=100)
            if omega >= 1:
                assert max(labels) <= bound_for_config(config, omega)
    assert time.time() - started < 300
    _report(9, "200 distance-two labeling runs verify with zero violations "
               "and respect the label bound at exact omega", started)


def test_criterion_10_oracle_cross_validation():
    started = time.time()
    get_config = _config_cache()
    for i in range(50):  # clique vs subset enumeration, n <= 15
        inst = gen_random_disks(8 + i % 8, sigma="1.5", box_side="3", seed=1000 + i)
        g = build_disk_graph(inst.disks)
        assert max_clique_exact(g) == brute_max_clique(g), i
    for i in range(50):  # chromatic vs exhaustive scan, n <= 12
        inst = gen_random_disks(7 + i % 6, sigma="1.5", box_side="3", seed=2000 + i)
        g = build_disk_graph(inst.disks)
        assert chromatic_exact(g) == brute_chromatic(g), i
    for i in range(50):  # labeling span vs full enumeration, n <= 8
        inst = gen_random_disks(5 + i % 4, sigma="1.5", box_side="3", seed=3000 + i)
        g = build_disk_graph(inst.disks)
        assert l21_span_exact(g) == brute_l21_span(g), i
    # sandwich on verified runs
    for i in range(30):
        inst = gen_random_disks(12, sigma="2", box_side="4", seed=4000 + i)
        g = build_disk_graph(inst.disks)
        config = get_config("FoldShadeColor", "2", 1)
        result = run_online(config, inst.disks)
        assert verify_coloring(g, result.colors).passed
        omega = max_clique_exact(g)
        chi = chromatic_exact(g)
        assert omega <= chi <= result.colors_used, i
    assert time.time() - started < 300
    _report(10, "clique/chromatic/span oracles agree with brute force on "
                "150 instances; omega <= chi <= colors_used throughout", started)


def test_criterion_11_shape_soundness():
    started = time.time()
    from diskcolor.exactmath import as_scalar

    sigma_text = "1.5"
    rho_text = "2"
    # rho * sigma = 3 for the folded base; 2 * rho = 4 for the branched one
    base_fold = fold_coloring(2, "3")
    base_branch = fold_coloring(2, "4")
    cfg_fold = make_config("FoldShadeColor", sigma_text, h=2, base=base_fold)
    cfg_branch = make_config("BranchFoldColor", sigma_text, h=2, base=base_branch)
    for i in range(300):
        n = 10 + i % 11
        inst = gen_random_shapes(n, sigma=sigma_text, box_side=str(5 + i % 5),
                                 seed=60_000 + i, rho_max=rho_text)
        metrics = [inner_outer(s) for s in inst.shapes]
        true_graph = build_shape_graph(inst.shapes)
        for u in range(n):  # inner <= true <= outer edge sandwich
            cu, mu = inst.shapes[u].center, metrics[u]
            for v in range(u + 1, n):
                cv, mv = inst.shapes[v].center, metrics[v]
                if centered_disks_meet(cu, mu.inner_diameter_sq, cv, mv.inner_diameter_sq):
                    assert v in true_graph.adj[u], (i, u, v)
                if v in true_graph.adj[u]:
                    assert centered_disks_meet(
                        cu, mu.outer_diameter_sq, cv, mv.outer_diameter_sq
                    ), (i, u, v)
        res_fold = run_shapes(cfg_fold, inst.shapes, rho_bound=rho_text)
        assert verify_coloring(true_graph, res_fold.colors).passed, i
        res_branch = run_shapes(cfg_branch, inst.shapes, rho_bound=rho_text)
        assert verify_coloring(true_graph, res_branch.colors).passed, i
        if i % 50 == 0:  # bound against the true shape graph's clique number
            omega = max_clique_exact(true_graph, limit=100)
            assert res_fold.max_value <= bound_for_config(cfg_fold, omega)
    assert time.time() - started < 300
    _report(11, "300 shape streams: inner/true/outer sandwich holds and "
                "both shape algorithms verify on the true graph", started)


def test_criterion_12_determinism(tmp_path):
    started = time.time()
    from diskcolor.formats import write_disk_instance

    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_disk_instance(gen_random_disks(120, sigma="2", box_side="9", seed=77), a)
    write_disk_instance(gen_random_disks(120, sigma="2", box_side="9", seed=77), b)
    assert filecmp.cmp(a, b, shallow=False)
    r1, r2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    argv = ["run", "--algorithm", "BranchFoldColor", "--sigma", "4", "--h", "1",
            "--generate", "150", "--seed", "5", "--box", "12"]
    assert main(argv + ["--out", str(r1)]) == 0
    assert main(argv + ["--out", str(r2)]) == 0
    assert filecmp.cmp(r1, r2, shallow=False)
    b1, b2 = tmp_path / "b1.csv", tmp_path / "b2.csv"
    bench_argv = ["bench", "--count", "3", "--n", "30", "--sigma", "2",
                  "--seed", "8", "--algorithms", "BranchFF,FoldShadeColor:h=2"]
    assert main(bench_argv + ["--out", str(b1)]) == 0
    assert main(bench_argv + ["--out", str(b2)]) == 0
    assert filecmp.cmp(b1, b2, shallow=False)
    c1, c2 = tmp_path / "c1.csv", tmp_path / "c2.csv"
    for target in (c1, c2):
        assert main(["curves", "--family", "basic", "--sigma-min", "1",
                     "--sigma-max", "4", "--step", "0.25", "--out", str(target)]) == 0
    assert filecmp.cmp(c1, c2, shallow=False)
    _report(12, "seeded generators, runs, benches and curves rerun "
                "byte-identically", started)
