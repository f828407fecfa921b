"""Convex shapes with chosen centers, their bounding disks, and streams.

A shape is colored through two disks sharing its center point: the
largest centered disk inside it and the smallest centered disk around
it.  Only the center and those two diameters ever reach the online
algorithms, so rotation and reflection change nothing.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import ExactScalar, as_rational, as_scalar, sqrt_float
from .geometry import Point, convex_polygons_intersect, point, sq_dist
from .online import (
    AlgorithmConfig,
    OnlineColorer,
    RunResult,
    branch_index_sq,
)

ZERO = ExactScalar(0)


@dataclass(frozen=True)
class ConvexShape:
    vertices: Tuple[Point, ...]
    center: Point

    def __post_init__(self):
        verts = self.vertices
        n = len(verts)
        if n < 3:
            raise ValueError("shape needs at least 3 vertices")
        for idx in range(n):
            a, b, c = verts[idx], verts[(idx + 1) % n], verts[(idx + 2) % n]
            cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if cross.sign() <= 0:
                raise ValueError("vertices must be strictly convex counterclockwise")
        for idx in range(n):
            a, b = verts[idx], verts[(idx + 1) % n]
            side = (b.x - a.x) * (self.center.y - a.y) - (b.y - a.y) * (self.center.x - a.x)
            if side.sign() <= 0:
                raise ValueError("center must lie strictly inside the shape")


def convex_shape(vertex_coords, center_coords) -> ConvexShape:
    verts = tuple(point(x, y) for x, y in vertex_coords)
    return ConvexShape(vertices=verts, center=point(*center_coords))


@dataclass(frozen=True)
class ShapeMetrics:
    inner_diameter_sq: ExactScalar  # (2 * inradius at the center)^2, exact
    outer_diameter_sq: ExactScalar  # (2 * max vertex distance)^2, exact

    @property
    def inner_diameter(self) -> float:
        return sqrt_float(self.inner_diameter_sq)

    @property
    def outer_diameter(self) -> float:
        return sqrt_float(self.outer_diameter_sq)

    @property
    def rho(self) -> float:
        """Outer/inner diameter ratio, reported numerically."""
        return sqrt_float(self.outer_diameter_sq / self.inner_diameter_sq)

    def rho_at_most(self, bound) -> bool:
        r = as_scalar(bound)
        return self.outer_diameter_sq <= r * r * self.inner_diameter_sq


def inner_outer(shape: ConvexShape) -> ShapeMetrics:
    """Exact squared diameters of the centered inner and outer disks.

    The inner radius is the least distance from the center to an edge
    line (the shape is an intersection of those half-planes); the outer
    radius is the largest vertex distance.
    """
    verts = shape.vertices
    n = len(verts)
    c = shape.center
    inner_sq: Optional[ExactScalar] = None
    for idx in range(n):
        a, b = verts[idx], verts[(idx + 1) % n]
        ex = b.x - a.x
        ey = b.y - a.y
        cross = ex * (c.y - a.y) - ey * (c.x - a.x)
        line_sq = (cross * cross) / (ex * ex + ey * ey)
        if inner_sq is None or line_sq < inner_sq:
            inner_sq = line_sq
    outer_sq = max(sq_dist(c, v) for v in verts)
    return ShapeMetrics(inner_diameter_sq=inner_sq * 4, outer_diameter_sq=outer_sq * 4)


def shapes_intersect(s1: ConvexShape, s2: ConvexShape) -> bool:
    """Exact closed-shape intersection (separating axis)."""
    return convex_polygons_intersect(list(s1.vertices), list(s2.vertices))


def run_shapes(config: AlgorithmConfig, shapes: Sequence[ConvexShape],
               rho_bound) -> RunResult:
    """Color a shape stream through centers and inner-disk size classes.

    Preconditions checked exactly per shape: inner diameter within
    [1, sigma] and outer/inner ratio within the declared bound.  The
    base coloring must already cover the widened band (rho*sigma, or
    2*rho when branching); callers pick it accordingly.
    """
    rho = as_scalar(rho_bound)
    colorer = OnlineColorer(config)
    colors = []
    sigma_sq = config.sigma * config.sigma
    for shape in shapes:
        metrics = inner_outer(shape)
        d_sq = metrics.inner_diameter_sq
        if d_sq < ExactScalar(1) or d_sq > sigma_sq:
            raise ValueError("shape inner diameter outside [1, sigma]")
        if not metrics.rho_at_most(rho):
            raise ValueError("shape exceeds the declared outer/inner ratio")
        j = branch_index_sq(d_sq, config.sigma) if config.kind == "BranchFoldColor" else 0
        colors.append(colorer.step_center(shape.center, j))
    return RunResult(colors=colors, details=colorer.details,
                     metadata=config.metadata())


@dataclass
class ShapeInstance:
    shapes: List[ConvexShape]
    meta: Dict[str, object]


def gen_random_shapes(n: int, sigma="1", box_side="10", seed: int = 0,
                      rho_max="2", sides=(6, 7, 8)) -> ShapeInstance:
    """Seeded convex polygons with bounded outer/inner ratio.

    Mildly jittered regular polygons around decimal centers: jitter is
    small enough that convexity and the ratio bound always hold, and
    both are still verified exactly after decimal quantization.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    sig = as_rational(sigma)
    if sig < 1:
        raise ValueError("sigma must be at least 1")
    box = as_rational(box_side)
    rng = random.Random(seed)
    quantum = 10**6
    shapes: List[ConvexShape] = []
    while len(shapes) < n:
        m = sides[rng.randint(0, len(sides) - 1)]
        cx = box * rng.randint(0, quantum) / quantum
        cy = box * rng.randint(0, quantum) / quantum
        # target inner diameter in [1, sigma]; radii start from it
        target = 1 + (sig - 1) * rng.randint(0, quantum) / quantum
        base_r = float(target) / (2.0 * math.cos(math.pi / m)) * 1.02
        verts = []
        for idx in range(m):
            ang = 2.0 * math.pi * idx / m + rng.uniform(-0.1, 0.1) / m
            r = base_r * (1.0 + rng.uniform(0.0, 0.08))
            vx = float(cx) + r * math.cos(ang)
            vy = float(cy) + r * math.sin(ang)
            verts.append((f"{vx:.6f}", f"{vy:.6f}"))
        try:
            shape = convex_shape(verts, (f"{float(cx):.6f}", f"{float(cy):.6f}"))
        except ValueError:
            continue  # quantization broke convexity; draw again
        metrics = inner_outer(shape)
        d_sq = metrics.inner_diameter_sq
        if d_sq < ExactScalar(1) or d_sq > as_scalar(sig) * as_scalar(sig):
            continue
        if not metrics.rho_at_most(rho_max):
            continue
        shapes.append(shape)
    meta = {
        "kind": "shapes",
        "n": n,
        "sigma": str(sigma),
        "box_side": str(box_side),
        "seed": seed,
        "rho_max": str(rho_max),
        "rng": "python-random-mt19937",
    }
    return ShapeInstance(shapes=shapes, meta=meta)


def center_minimizing_ratio(vertices: Sequence[Point], grid: int = 8) -> Point:
    """Interior point approximately minimizing the outer/inner ratio.

    A coarse grid search over the bounding box; purely a convenience,
    correctness never depends on the choice.
    """
    xs = [v.x for v in vertices]
    ys = [v.y for v in vertices]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    best: Optional[Tuple[float, Point]] = None
    for ix in range(1, grid):
        for iy in range(1, grid):
            fx = Fraction(ix, grid)
            fy = Fraction(iy, grid)
            cand = Point(lo_x + (hi_x - lo_x) * fx, lo_y + (hi_y - lo_y) * fy)
            try:
                shape = ConvexShape(vertices=tuple(vertices), center=cand)
            except ValueError:
                continue
            rho = inner_outer(shape).rho
            if best is None or rho < best[0]:
                best = (rho, cand)
    if best is None:
        raise ValueError("no interior grid point found")
    return best[1]
