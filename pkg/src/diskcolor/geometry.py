"""Points, disks and convex-polygon distance primitives over Q[sqrt(3)].

All predicates here are exact.  Disks are closed, so tangency counts as
intersection; polygons are closed convex vertex lists in counterclockwise
order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactmath import ExactScalar, as_scalar

ZERO = ExactScalar(0)


@dataclass(frozen=True)
class Point:
    x: ExactScalar
    y: ExactScalar

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor) -> "Point":
        f = as_scalar(factor)
        return Point(self.x * f, self.y * f)


def point(x, y) -> Point:
    """Build a Point from ints, rationals or decimal strings."""
    return Point(as_scalar(x), as_scalar(y))


@dataclass(frozen=True)
class Disk:
    center: Point
    diameter: ExactScalar

    def __post_init__(self):
        if self.diameter.sign() <= 0:
            raise ValueError("disk diameter must be positive")


def disk(x, y, diameter) -> Disk:
    return Disk(point(x, y), as_scalar(diameter))


def sq_dist(p: Point, q: Point) -> ExactScalar:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def disks_intersect(d1: Disk, d2: Disk) -> bool:
    """Closed-disk intersection: tangent disks do intersect."""
    reach = (d1.diameter + d2.diameter) / 2
    return sq_dist(d1.center, d2.center) <= reach * reach


def second_neighbor_possible(d1: Disk, d2: Disk, sigma) -> bool:
    """Can the two disks ever acquire a common neighbor among later disks?

    True iff the center distance is at most (diam1 + diam2)/2 + sigma,
    the reach of one more disk of the largest allowed diameter.
    """
    reach = (d1.diameter + d2.diameter) / 2 + as_scalar(sigma)
    return sq_dist(d1.center, d2.center) <= reach * reach


def _point_segment_sq_dist(p: Point, a: Point, b: Point) -> ExactScalar:
    ab = b - a
    ap = p - a
    ab_sq = ab.x * ab.x + ab.y * ab.y
    if ab_sq.sign() == 0:
        return sq_dist(p, a)
    dot = ap.x * ab.x + ap.y * ab.y
    if dot.sign() <= 0:
        return sq_dist(p, a)
    if dot >= ab_sq:
        return sq_dist(p, b)
    cross = ap.x * ab.y - ap.y * ab.x
    return (cross * cross) / ab_sq


def _check_polygon(poly) -> None:
    if len(poly) < 3:
        raise ValueError("polygon needs at least 3 vertices")


def convex_polygons_intersect(poly1, poly2) -> bool:
    """Exact separating-axis test for closed convex polygons."""
    _check_polygon(poly1)
    _check_polygon(poly2)
    for owner in (poly1, poly2):
        n = len(owner)
        for idx in range(n):
            a = owner[idx]
            b = owner[(idx + 1) % n]
            nx = a.y - b.y
            ny = b.x - a.x
            lo1 = hi1 = poly1[0].x * nx + poly1[0].y * ny
            for v in poly1[1:]:
                d = v.x * nx + v.y * ny
                if d < lo1:
                    lo1 = d
                elif d > hi1:
                    hi1 = d
            lo2 = hi2 = poly2[0].x * nx + poly2[0].y * ny
            for v in poly2[1:]:
                d = v.x * nx + v.y * ny
                if d < lo2:
                    lo2 = d
                elif d > hi2:
                    hi2 = d
            if hi1 < lo2 or hi2 < lo1:
                return False
    return True


def polygon_min_sq_dist(poly1, poly2) -> ExactScalar:
    """Minimum squared distance between two closed convex polygons.

    Zero when the polygons touch or overlap.  Covers vertex-vertex and
    vertex-edge pairs in both directions, which is sufficient for convex
    polygons with disjoint interiors.
    """
    _check_polygon(poly1)
    _check_polygon(poly2)
    if convex_polygons_intersect(poly1, poly2):
        return ZERO
    best = None
    for src, dst in ((poly1, poly2), (poly2, poly1)):
        n = len(dst)
        for p in src:
            for idx in range(n):
                d = _point_segment_sq_dist(p, dst[idx], dst[(idx + 1) % n])
                if best is None or d < best:
                    best = d
    return best
