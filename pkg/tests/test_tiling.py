import random
from fractions import Fraction

import pytest

from diskcolor.exactmath import ExactScalar
from diskcolor.geometry import Point, point, sq_dist
from diskcolor.tiling import HexLattice, TileIndex, hexagon_vertices, subtile_count


def test_tile_center_examples():
    lat1 = HexLattice(1)
    c = lat1.tile_center(TileIndex(0, 0))
    assert c.x == 0 and c.y == 0
    c = lat1.tile_center(TileIndex(1, 0))
    assert c.x == ExactScalar(0, Fraction(1, 2)) and c.y == 0  # s1
    lat2 = HexLattice(2)
    c = lat2.tile_center(TileIndex(0, 1))
    assert c.x == ExactScalar(0, Fraction(1, 8)) and c.y == ExactScalar(Fraction(-3, 8))


def test_tile_diameter_is_one():
    verts = hexagon_vertices(point(0, 0))
    best = max(
        sq_dist(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]
    )
    assert best == ExactScalar(1)


def test_layer_of():
    lat2 = HexLattice(2)
    assert lat2.layer_of(TileIndex(0, 0)) == 1
    assert lat2.layer_of(TileIndex(1, 1)) == 4
    lat3 = HexLattice(3)
    assert lat3.layer_of(TileIndex(-1, 0)) == 3  # (-1) mod 3 == 2
    # lattice periodicity: shifting by (h, 0) keeps the layer
    for (i, j) in [(0, 0), (2, -1), (-4, 5)]:
        assert lat3.layer_of(TileIndex(i, j)) == lat3.layer_of(TileIndex(i + 3, j))


def test_locate_interior_and_boundary():
    lat1 = HexLattice(1)
    assert lat1.locate(point(0, 0), 1) == TileIndex(0, 0)
    # right vertical edge of H_{0,0} is shared with H_{1,0}: lex tie-break
    edge_pt = Point(ExactScalar(0, Fraction(1, 4)), ExactScalar(0))
    assert lat1.locate(edge_pt, 1) == TileIndex(0, 0)


def test_locate_matches_containment_and_is_lex_min():
    rng = random.Random(99)
    for h in (1, 2, 3):
        lat = HexLattice(h)
        for _ in range(300):
            p = point(
                Fraction(rng.randint(-400, 400), 64),
                Fraction(rng.randint(-400, 400), 64),
            )
            for r in range(1, lat.b + 1):
                t = lat.locate(p, r)
                assert lat.layer_of(t) == r
                assert lat.contains(t, p)
                # no lex-smaller tile of the layer contains p
                for di in (-h, 0):
                    for dj in (-h, 0, h):
                        if (di, dj) == (0, 0) or (di, dj) == (0, h):
                            continue
                        other = TileIndex(t.i + di, t.j + dj)
                        if (other.i, other.j) < (t.i, t.j):
                            assert not lat.contains(other, p)


def test_locate_translation_consistency():
    lat = HexLattice(2)
    rng = random.Random(5)
    s1 = Point(ExactScalar(0, Fraction(1, 2)), ExactScalar(0))
    for _ in range(100):
        p = point(Fraction(rng.randint(-100, 100), 16), Fraction(rng.randint(-100, 100), 16))
        q = p + s1
        for r in range(1, 5):
            t = lat.locate(p, r)
            u = lat.locate(q, r)
            assert (u.i, u.j) == (t.i + 2, t.j)


def test_subtile_key_layers():
    lat = HexLattice(2)
    p = point(Fraction(1, 100), Fraction(1, 100))
    key = lat.subtile_key(p)
    assert len(key) == 4
    for r, t in enumerate(key, start=1):
        assert lat.layer_of(t) == r
        assert lat.contains(t, p)


def test_subtile_count_values():
    assert [subtile_count(h) for h in range(1, 6)] == [1, 12, 54, 96, 150]
    with pytest.raises(ValueError):
        subtile_count(0)


def test_subtile_enumeration_matches_gamma():
    for h in range(1, 6):
        lat = HexLattice(h)
        subtiles = lat.subtiles_of_tile(TileIndex(0, 0))
        assert len(subtiles) == subtile_count(h)


def test_shading_balance_h1_to_h5():
    for h in range(1, 6):
        lat = HexLattice(h)
        report = lat.validate_shading()
        assert report.passed, (h, report.failures)
        assert report.per_shade == subtile_count(h) // (h * h)


def test_shade_of_point_is_constant_on_subtile_and_in_range():
    lat = HexLattice(3)
    assert lat.shade_of_point(point(Fraction(1, 97), Fraction(1, 89))) in range(1, 10)
    # shade from key equals shade from atom indices for a full tile
    tile = TileIndex(1, 2)
    for m, n, side, c in lat.atoms_in_tile(tile):
        s = m + n + side
        expected = (s % 3) * 3 + (m % 3) + 1
        assert lat.shade(lat.subtile_key(c)) == expected


def test_h1_shade_always_one():
    lat = HexLattice(1)
    assert lat.shade_of_point(point(0, 0)) == 1
    assert lat.shade_of_point(point(5, Fraction(13, 7))) == 1


def test_corrupted_shading_detected():
    lat = HexLattice(2)
    report = lat.validate_shading()
    assert report.passed
    # corrupt the cached table: give every class shade 1
    table = lat._shade_table()
    for key in table:
        table[key] = 1
    bad = lat.validate_shading()
    assert not bad.passed and bad.failures
    lat._shade_table_cache = None  # restore
