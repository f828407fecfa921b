"""Refined hexagonal tilings: layers, exact point location, subtiles, shading.

The base tile is a hexagon with two vertical sides, center (0,0) and
diameter 1.  For a refinement parameter h, the tile grid is stepped by
s1/h and s2/h where s1 = (sqrt3/2, 0) and s2 = (sqrt3/4, -3/4); the
h^2 sublattices of index residues form the layers, and each layer is a
tiling of the plane on its own.

Boundary ownership: a point on a tile boundary belongs, within each
layer, to the lexicographically smallest (i, j) among the tiles of that
layer whose closed hexagon contains it.  This turns every layer into an
exact partition of the plane.

A subtile is a nonempty common intersection of one tile per layer; it is
identified by the tuple of tile indices.  The shading assigns each
subtile a value in [h^2] so that every tile of every layer holds equally
many subtiles of each value (checked by validate_shading).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .exactmath import ExactScalar, as_rational
from .geometry import Point

SQRT3 = ExactScalar(0, 1)


@dataclass(frozen=True)
class TileIndex:
    i: int
    j: int


def subtile_count(h: int) -> int:
    """Maximum number of subtiles inside a single tile."""
    if h < 1:
        raise ValueError("h must be a positive integer")
    if h == 1:
        return 1
    if h == 2:
        return 12
    return 6 * h * h


def hexagon_vertices(center: Point) -> List[Point]:
    """Counterclockwise vertices of the unit-diameter tile at `center`."""
    q = Fraction(1, 4)
    offsets = [
        (Fraction(1, 4), q),
        (0, Fraction(1, 2)),
        (-Fraction(1, 4), q),
        (-Fraction(1, 4), -q),
        (0, -Fraction(1, 2)),
        (Fraction(1, 4), -q),
    ]
    out = []
    for bx, y in offsets:
        out.append(Point(center.x + ExactScalar(0, bx), center.y + ExactScalar(y)))
    return out


class HexLattice:
    """Immutable h-refined hexagonal lattice with its h^2 layers."""

    def __init__(self, h: int):
        if h < 1:
            raise ValueError("h must be a positive integer")
        self.h = h
        self.b = h * h
        self.gamma = subtile_count(h)
        # membership thresholds for the unit hexagon: |dx| <= sqrt3/4,
        # |dx + sqrt3 dy| <= sqrt3/2, |dx - sqrt3 dy| <= sqrt3/2
        self._half_w = as_rational(Fraction(3, 16))  # (sqrt3/4)^2 as (dx^2 scaled)
        self._shade_table_cache: Dict[Tuple[Tuple[int, int], ...], int] | None = None
        # residue offsets per layer r: alpha = (r-1) % h, beta = (r-1) // h
        self._offsets = []
        for r in range(1, self.b + 1):
            alpha = (r - 1) % h
            beta = (r - 1) // h
            self._offsets.append((alpha, beta))

    # -- index arithmetic ------------------------------------------------

    def tile_center(self, t: TileIndex) -> Point:
        """Center of tile (i, j): ((2i+j) sqrt3/(4h), -3j/(4h))."""
        h = self.h
        return Point(
            ExactScalar(0, Fraction(2 * t.i + t.j, 4 * h)),
            ExactScalar(Fraction(-3 * t.j, 4 * h)),
        )

    def layer_of(self, t: TileIndex) -> int:
        """Layer number in [h^2], from non-negative index residues."""
        h = self.h
        return 1 + (t.i % h) + h * (t.j % h)

    def layer_residues(self, r: int) -> Tuple[int, int]:
        if not 1 <= r <= self.b:
            raise ValueError(f"layer {r} out of range [1, {self.b}]")
        return self._offsets[r - 1]

    # -- exact membership and location -----------------------------------

    def contains(self, t: TileIndex, p: Point) -> bool:
        """Closed-hexagon membership, exact."""
        c = self.tile_center(t)
        dx = p.x - c.x
        dy = p.y - c.y
        q3_4 = ExactScalar(0, Fraction(1, 4))  # sqrt3/4
        if dx > q3_4 or dx < -q3_4:
            return False
        q3_2 = ExactScalar(0, Fraction(1, 2))  # sqrt3/2
        u = dx + SQRT3 * dy
        if u > q3_2 or u < -q3_2:
            return False
        w = dx - SQRT3 * dy
        return -q3_2 <= w <= q3_2

    def locate(self, p: Point, r: int) -> TileIndex:
        """The layer-r tile owning point p.

        Among the tiles of layer r whose closed hexagon contains p
        (one in the generic case, two or three on boundaries), the
        lexicographically smallest (i, j) wins.
        """
        alpha, beta = self.layer_residues(r)
        h = self.h
        # subtract the layer offset alpha*s1/h + beta*s2/h
        ox = ExactScalar(0, Fraction(2 * alpha + beta, 4 * h))
        oy = ExactScalar(Fraction(-3 * beta, 4 * h))
        qx = p.x - ox
        qy = p.y - oy
        # fractional coordinates in the (s1, s2) basis
        v = qy * Fraction(-4, 3)
        u = qx * ExactScalar(0, Fraction(2, 3)) - v / 2
        a0 = u.floor()
        b0 = v.floor()
        for da in (-1, 0, 1, 2):
            a = a0 + da
            for db in (-1, 0, 1, 2):
                bb = b0 + db
                t = TileIndex(alpha + h * a, beta + h * bb)
                if self.contains(t, p):
                    return t
        raise AssertionError("point location failed; candidate window too small")

    def subtile_key(self, p: Point) -> Tuple[TileIndex, ...]:
        """Owning tile of p in every layer, in layer order 1..h^2."""
        return tuple(self.locate(p, r) for r in range(1, self.b + 1))

    # -- subtile enumeration ---------------------------------------------
    #
    # The union of all tile borders over all layers lies on three line
    # families: x = s*d/2, x+sqrt3*y = m*d, x-sqrt3*y = n*d with
    # d = sqrt3/(2h).  These cut the plane into triangular cells
    # ("atoms"); every subtile is a union of atoms (a single atom once
    # h >= 3).

    def _atom_centroid(self, m: int, n: int, side: int) -> Point:
        d3 = Fraction(1, 6 * self.h)  # d/3 = sqrt3/(6h), as sqrt3-coefficient
        u = ExactScalar(0, (3 * m + 1 + side) * d3)
        w = ExactScalar(0, (3 * n + 1 + side) * d3)
        x = (u + w) / 2
        y = (u - w) * ExactScalar(0, Fraction(1, 6))  # (u-w)/(2 sqrt3)
        return Point(x, y)

    def atoms_in_tile(self, t: TileIndex) -> List[Tuple[int, int, int, Point]]:
        """All triangular cells inside tile t as (m, n, side, centroid)."""
        h = self.h
        cu = t.i - t.j
        cw = t.i + 2 * t.j
        out = []
        for m in range(cu - h, cu + h):
            for n in range(cw - h, cw + h):
                for side in (0, 1):
                    c = self._atom_centroid(m, n, side)
                    if self.contains(t, c):
                        out.append((m, n, side, c))
        return out

    def subtiles_of_tile(self, t: TileIndex):
        """Subtiles inside tile t as (key, representative interior point).

        The representative is the lexicographically smallest atom
        centroid of the subtile (exact comparison), which makes the
        enumeration order canonical.
        """
        groups: Dict[Tuple[TileIndex, ...], List[Point]] = {}
        for _m, _n, _side, c in self.atoms_in_tile(t):
            groups.setdefault(self.subtile_key(c), []).append(c)
        out = []
        for key, pts in groups.items():
            rep = min(pts, key=lambda q: (q.x, q.y))
            out.append((key, rep))
        out.sort(key=lambda item: (item[1].x, item[1].y))
        return out

    # -- shading ----------------------------------------------------------

    def shade(self, key: Tuple[TileIndex, ...]) -> int:
        """Shade in [h^2] of the subtile identified by `key`.

        h = 1: single shade.  h >= 3: vertical-stripe scheme; the stripe
        index s and the diagonal index m of the (unique) atom follow
        from the key by interval intersection, and the shade is
        (s mod h)*h + (m mod h) + 1.  h = 2: canonical enumeration of
        the 12 subtile classes of a fundamental tile, extended
        periodically; the per-class shades are chosen (deterministically)
        so that every tile of every layer is balanced.
        """
        h = self.h
        if h == 1:
            return 1
        if h == 2:
            return self._shade_table()[self._normalize_key(key)]
        s = max(2 * t.i + t.j for t in key) - h
        m = max(t.i - t.j for t in key) - h
        return (s % h) * h + (m % h) + 1

    def shade_of_point(self, p: Point) -> int:
        return self.shade(self.subtile_key(p))

    def _normalize_key(self, key) -> Tuple[Tuple[int, int], ...]:
        # translate by the layer-1 entry (a multiple of (h, 0) and (0, h))
        i0, j0 = key[0].i, key[0].j
        return tuple((t.i - i0, t.j - j0) for t in key)

    def _shade_table(self) -> Dict[Tuple[Tuple[int, int], ...], int]:
        if self._shade_table_cache is not None:
            return self._shade_table_cache
        table = self._build_balanced_table()
        self._shade_table_cache = table
        return table

    def _build_balanced_table(self) -> Dict[Tuple[Tuple[int, int], ...], int]:
        """Assign shades to the subtile classes of a fundamental tile (h=2).

        Classes are the subtiles of tile (0,0) in canonical order.  A
        backtracking pass picks, in that order, the smallest shade that
        can still lead to per-shade balance in the representative tile
        of every layer.
        """
        h, b = self.h, self.b
        per_shade = self.gamma // b
        classes = self.subtiles_of_tile(TileIndex(0, 0))
        class_index = {self._normalize_key(key): idx for idx, (key, _) in enumerate(classes)}
        # multiset of classes seen in each layer's representative tile
        layer_class_counts: List[List[int]] = []
        for r in range(1, b + 1):
            alpha, beta = self.layer_residues(r)
            counts = [0] * len(classes)
            for key, _rep in self.subtiles_of_tile(TileIndex(alpha, beta)):
                counts[class_index[self._normalize_key(key)]] += 1
            layer_class_counts.append(counts)

        n_classes = len(classes)
        assignment = [0] * n_classes
        loads = [[0] * (b + 1) for _ in range(b)]  # loads[layer][shade]

        def feasible(idx: int) -> bool:
            # remaining classes can still fill every (layer, shade) to quota
            for lr, counts in enumerate(layer_class_counts):
                remaining = sum(counts[c] for c in range(idx, n_classes))
                deficit = sum(
                    per_shade - loads[lr][s]
                    for s in range(1, b + 1)
                    if loads[lr][s] < per_shade
                )
                if deficit > remaining:
                    return False
            return True

        def assign(idx: int) -> bool:
            if idx == n_classes:
                return True
            for shade in range(1, b + 1):
                ok = True
                for lr, counts in enumerate(layer_class_counts):
                    if loads[lr][shade] + counts[idx] > per_shade:
                        ok = False
                        break
                if not ok:
                    continue
                assignment[idx] = shade
                for lr, counts in enumerate(layer_class_counts):
                    loads[lr][shade] += counts[idx]
                if feasible(idx + 1) and assign(idx + 1):
                    return True
                for lr, counts in enumerate(layer_class_counts):
                    loads[lr][shade] -= counts[idx]
            assignment[idx] = 0
            return False

        if not assign(0):
            raise AssertionError("no balanced shading exists for this refinement")
        return {
            self._normalize_key(key): assignment[idx]
            for idx, (key, _rep) in enumerate(classes)
        }

    def validate_shading(self) -> "ShadingReport":
        """Check per-shade balance on one representative tile per layer."""
        b = self.b
        per_shade = self.gamma // b
        failures = []
        counts_by_layer = {}
        h = self.h
        for r in range(1, b + 1):
            alpha, beta = self.layer_residues(r)
            tile = TileIndex(alpha, beta)
            counts = [0] * (b + 1)
            if h >= 3:
                # every atom is its own subtile (gamma = 6h^2), so the
                # stripe/diagonal indices come straight from atom coords
                atoms = self.atoms_in_tile(tile)
                if len(atoms) != self.gamma:
                    failures.append((r, 0, len(atoms)))
                for m, n, side, _c in atoms:
                    s = m + n + side
                    counts[(s % h) * h + (m % h) + 1] += 1
            else:
                subtiles = self.subtiles_of_tile(tile)
                if len(subtiles) != self.gamma:
                    failures.append((r, 0, len(subtiles)))
                for key, _rep in subtiles:
                    counts[self.shade(key)] += 1
            counts_by_layer[r] = counts[1:]
            for shade in range(1, b + 1):
                if counts[shade] != per_shade:
                    failures.append((r, shade, counts[shade]))
        return ShadingReport(passed=not failures, per_shade=per_shade,
                             counts=counts_by_layer, failures=failures)


@dataclass
class ShadingReport:
    passed: bool
    per_shade: int
    counts: Dict[int, List[int]]
    failures: List[Tuple[int, int, int]]
