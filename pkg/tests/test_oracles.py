import itertools
import random

import pytest

from diskcolor.geometry import disk, disks_intersect
from diskcolor.online import OnlineColor, make_config, run_online
from diskcolor.oracles import (
    build_disk_graph,
    chromatic_exact,
    competitive_report,
    gen_random_disks,
    gen_tile_clique,
    l21_span_exact,
    max_clique_exact,
    verify_coloring,
    verify_l21,
)

from oracle_helpers import (
    brute_chromatic,
    brute_l21_span,
    brute_max_clique,
)


# -- graph construction ---------------------------------------------------


def test_build_graph_examples():
    g = build_disk_graph([disk(0, 0, 1), disk(1, 0, 1)])
    assert sorted(g.edges()) == [(0, 1)]  # tangent
    g5 = build_disk_graph([disk(0, 0, 1) for _ in range(5)])
    assert sum(1 for _ in g5.edges()) == 10  # complete


def test_build_graph_matches_bruteforce():
    inst = gen_random_disks(60, sigma="2", box_side="6", seed=31)
    g = build_disk_graph(inst.disks)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert (v in g.adj[u]) == disks_intersect(inst.disks[u], inst.disks[v])


def test_verify_coloring():
    g = build_disk_graph([disk(0, 0, 1), disk(1, 0, 1), disk(5, 5, 1)])
    good = [OnlineColor(0, 1), OnlineColor(0, 2), OnlineColor(0, 1)]
    assert verify_coloring(g, good).passed
    bad = [OnlineColor(0, 1), OnlineColor(0, 1), OnlineColor(0, 2)]
    report = verify_coloring(g, bad)
    assert not report.passed and report.conflicts[0][:2] == (0, 1)
    empty = build_disk_graph([])
    assert verify_coloring(empty, []).passed


def test_verify_l21_path():
    # path on 3 vertices: tangent chain
    chain = [disk(0, 0, 1), disk(1, 0, 1), disk(2, 0, 1)]
    g = build_disk_graph(chain)
    assert not verify_l21(g, [1, 3, 1]).passed  # distance-2 endpoints equal
    assert verify_l21(g, [1, 3, 5]).passed


def test_max_clique_examples():
    assert max_clique_exact(build_disk_graph([disk(0, 0, 1)] * 5)) == 5
    pairs = [disk(0, 0, 1), disk(1, 0, 1), disk(10, 0, 1), disk(11, 0, 1)]
    assert max_clique_exact(build_disk_graph(pairs)) == 2
    assert max_clique_exact(build_disk_graph([])) == 0
    with pytest.raises(ValueError):
        max_clique_exact(build_disk_graph([disk(0, 0, 1)] * 5), limit=4)


def test_max_clique_matches_bruteforce():
    for seed in range(6):
        inst = gen_random_disks(14, sigma="1.5", box_side="3", seed=seed)
        g = build_disk_graph(inst.disks)
        assert max_clique_exact(g) == brute_max_clique(g)


def test_chromatic_examples_and_bruteforce():
    assert chromatic_exact(build_disk_graph([disk(0, 0, 1)] * 4)) == 4
    # five disks in a ring, consecutive tangencies only
    ring = [disk(0, 0, 3), disk(2, 0, 3), disk(3, 2, 3), disk(1, 4, 3), disk(-1, 2, 3)]
    g5 = build_disk_graph(ring)
    assert sorted(g5.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert chromatic_exact(g5) == 3
    for seed in range(5):
        inst = gen_random_disks(11, sigma="1.5", box_side="3", seed=100 + seed)
        g = build_disk_graph(inst.disks)
        assert chromatic_exact(g) == brute_chromatic(g)
    with pytest.raises(ValueError):
        chromatic_exact(build_disk_graph([disk(0, 0, 1)] * 21), limit=20)


def test_l21_span_examples_and_bruteforce():
    assert l21_span_exact(build_disk_graph([disk(0, 0, 1)])) == 0
    assert l21_span_exact(build_disk_graph([disk(0, 0, 1), disk(1, 0, 1)])) == 2
    assert l21_span_exact(build_disk_graph([disk(0, 0, 1)] * 3)) == 4
    for seed in range(5):
        inst = gen_random_disks(7, sigma="1.5", box_side="3", seed=200 + seed)
        g = build_disk_graph(inst.disks)
        assert l21_span_exact(g) == brute_l21_span(g)


def test_sandwich_omega_chi_colors():
    for seed in range(4):
        inst = gen_random_disks(12, sigma="2", box_side="4", seed=300 + seed)
        g = build_disk_graph(inst.disks)
        omega = max_clique_exact(g)
        chi = chromatic_exact(g)
        cfg = make_config("FoldShadeColor", "2", h=1)
        res = run_online(cfg, inst.disks)
        assert omega <= chi <= res.colors_used


def test_generator_determinism_and_ranges():
    a = gen_random_disks(50, sigma="2", box_side="8", seed=9)
    b = gen_random_disks(50, sigma="2", box_side="8", seed=9)
    assert [(d.center.x, d.center.y, d.diameter) for d in a.disks] == [
        (d.center.x, d.center.y, d.diameter) for d in b.disks
    ]
    c = gen_random_disks(50, sigma="2", box_side="8", seed=10)
    assert any(
        x.center.x != y.center.x for x, y in zip(a.disks, c.disks)
    )
    for d in gen_random_disks(1000, sigma="2", box_side="10", seed=1).disks:
        assert d.diameter >= 1 and d.diameter <= 2
    assert gen_random_disks(0).disks == []


def test_tile_clique_forces_omega():
    inst = gen_tile_clique(12, h=2)
    g = build_disk_graph(inst.disks)
    assert max_clique_exact(g) == 12
    single = gen_tile_clique(1)
    assert len(single.disks) == 1


def test_tile_clique_respects_simple_color_bound():
    inst = gen_tile_clique(5, h=1)
    cfg = make_config("SimpleColor", 1)
    res = run_online(cfg, inst.disks)
    assert res.max_value <= 9 * 5  # k * omega


def test_competitive_report_fields():
    inst = gen_tile_clique(25, h=2)
    cfg = make_config("FoldShadeColor", 1, h=2)
    rep = competitive_report(cfg, inst, instance_id="clique25",
                             want_chi=True, want_lambda=True)
    assert rep.bound_respected and rep.verified
    assert rep.omega == 25 and rep.omega_exact
    assert rep.chi is None  # beyond the chi oracle limit
    assert rep.colors_used <= rep.max_value
    row = rep.csv_row()
    assert row.startswith("clique25,FoldShadeColor,")
    single = gen_tile_clique(1, h=1)
    rep1 = competitive_report(make_config("SimpleColor", 1), single, "k1",
                              want_chi=True, want_lambda=True)
    assert rep1.ratio_vs_omega == rep1.max_value / 1
    assert rep1.chi == 1 and rep1.lam == 0
