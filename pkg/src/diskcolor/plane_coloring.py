"""Solid multi-layer plane colorings and cyclic label maps on hex tilings.

A lattice coloring with periods (p, q) colors tile (i, j) by its coset
modulo the integer lattice spanned by (p, q) and (p+q, -p); it uses
exactly p^2 + pq + q^2 colors.  Together with the h^2 layers of the
refined tiling this yields an h^2-fold coloring of the plane whose
same-colored tiles are far apart; the exact largest safe point distance
is computed from closed-hexagon boundary distances.

Cyclic label maps expand every monochromatic class of a (p, 0) coloring
into 3 or 6 consecutive labels, ordered so that consecutive labels are
never geometrically close; one spare label is declared on top so the
first and last labels never meet cyclically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import ExactScalar, as_scalar, sqrt_float
from .geometry import Point, point, sq_dist
from .tiling import HexLattice, TileIndex, hexagon_vertices, subtile_count
from .geometry import polygon_min_sq_dist

ORIGIN_HEX = hexagon_vertices(point(0, 0))


def color_count(p: int, q: int) -> int:
    """Number of colors used by the (p, q) lattice coloring."""
    if p < 0 or q < 0 or (p, q) == (0, 0):
        raise ValueError("periods must be non-negative and not both zero")
    return p * p + p * q + q * q


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


class PlaneColoring:
    """h^2-fold solid coloring of the plane from a (p, q) period lattice."""

    def __init__(self, lattice: HexLattice, p: int, q: int):
        self.k = color_count(p, q)
        self.lattice = lattice
        self.p = p
        self.q = q
        self.b = lattice.b
        g = math.gcd(p, q)
        self.g = g
        self.a = self.k // g
        # a lattice vector with second coordinate exactly g
        _, x, y = _ext_gcd(q, p)  # x*q + y*p == g
        u, v = x, -y  # u*(p,q) + v*(p+q,-p) has j-component u*q - v*p == g
        self._row_step_i = u * p + v * (p + q)
        self._gap_sq: Optional[ExactScalar] = None

    def color_index(self, t: TileIndex) -> int:
        """Canonical coset index in [0, k)."""
        j0 = t.j % self.g
        m = (t.j - j0) // self.g
        return j0 * self.a + (t.i - m * self._row_step_i) % self.a

    def color_of(self, t: TileIndex) -> int:
        return self.color_index(t) + 1

    def color_at(self, p: Point, layer: int) -> int:
        return self.color_of(self.lattice.locate(p, layer))

    def min_gap_sq(self) -> ExactScalar:
        """Exact min squared boundary distance of same-colored tiles."""
        if self._gap_sq is None:
            self._gap_sq = min_same_color_gap_sq(self.lattice.h, self.p, self.q)
        return self._gap_sq

    def sigma_max(self) -> float:
        """Largest safe distance bound, as a float with error < 1e-9."""
        return sqrt_float(self.min_gap_sq())

    def supports_sigma(self, sigma) -> bool:
        """True when same-colored tiles stay strictly farther than sigma."""
        s = as_scalar(sigma)
        return self.min_gap_sq() > s * s

    def __repr__(self):
        return f"PlaneColoring(h={self.lattice.h}, p={self.p}, q={self.q}, k={self.k})"


def index_vector_center(h: int, u: int, v: int) -> Point:
    """Plane offset of tile (u, v) relative to tile (0, 0)."""
    return Point(
        ExactScalar(0, Fraction(2 * u + v, 4 * h)),
        ExactScalar(Fraction(-3 * v, 4 * h)),
    )


class _GapCache:
    """Exact boundary distances between a tile and its (u, v) translate."""

    def __init__(self, h: int):
        self.h = h
        self._cache: Dict[Tuple[int, int], ExactScalar] = {}

    def boundary_sq(self, u: int, v: int) -> ExactScalar:
        key = (u, v) if (u, v) >= (-u, -v) else (-u, -v)
        hit = self._cache.get(key)
        if hit is None:
            offset = index_vector_center(self.h, key[0], key[1])
            other = [pt + offset for pt in ORIGIN_HEX]
            hit = polygon_min_sq_dist(ORIGIN_HEX, other)
            self._cache[key] = hit
        return hit

    def center_sq(self, u: int, v: int) -> Fraction:
        return Fraction(3 * (u * u + u * v + v * v), 4 * self.h * self.h)


_GAP_CACHES: Dict[int, _GapCache] = {}


def gap_cache(h: int) -> _GapCache:
    if h not in _GAP_CACHES:
        _GAP_CACHES[h] = _GapCache(h)
    return _GAP_CACHES[h]


def min_same_color_gap_sq(h: int, p: int, q: int) -> ExactScalar:
    """Exact min squared boundary distance over same-colored tile pairs.

    The color lattice is equilateral: the period vectors (p, q) and
    (p+q, -p) have equal quadratic-form value k and the form restricted
    to the lattice is k*(m^2 + mn + n^2).  Any pair farther apart than
    best-so-far + 1 in center distance cannot beat the best boundary
    distance, which bounds the enumeration.
    """
    k = color_count(p, q)
    cache = gap_cache(h)

    def vec(m: int, n: int) -> Tuple[int, int]:
        return (m * p + n * (p + q), m * q - n * p)

    best = cache.boundary_sq(*vec(1, 0))
    # center distance bound: sqrt(best) + 1; squared, in form-value terms
    while True:
        # upper rational bound for (sqrt(best)+1)^2 = best + 2 sqrt(best) + 1
        best_f = math.sqrt(max(float(best), 0.0))
        radius_sq = Fraction(int(math.ceil(((best_f + 1) * 1.001 + 1e-9) ** 2 * 16)), 16)
        vmax = radius_sq * Fraction(4 * h * h, 3)  # bound on u^2+uv+v^2
        nmax = int(math.isqrt(int(vmax * Fraction(4, 3) / k))) + 2
        improved = False
        for m in range(-nmax, nmax + 1):
            for n in range(-nmax, nmax + 1):
                if (m, n) == (0, 0):
                    continue
                if k * (m * m + m * n + n * n) > vmax:
                    continue
                d = cache.boundary_sq(*vec(m, n))
                if d < best:
                    best = d
                    improved = True
        if not improved:
            return best


@dataclass
class SigmaBound:
    value: float
    valid: bool  # the guaranteed bound only certifies a coloring when >= 1


def sigma_lower_bound(h: int, p: int, q: int) -> SigmaBound:
    """Guaranteed safe distance (sqrt(3k)/(2h) - 1), rounded downward."""
    k = color_count(p, q)
    center_sq = ExactScalar(Fraction(3 * k, 4 * h * h))
    value = sqrt_float(center_sq) - 1.0 - 1e-12
    valid = center_sq >= ExactScalar(4)  # center >= 2  <=>  bound >= 1
    return SigmaBound(value=value, valid=valid)


def sigma_exact(h: int, p: int, q: int) -> float:
    """Exact largest safe sigma for the (h, p, q) coloring, within 1e-9.

    Raises ValueError when the coloring does not even cover distance 1.
    """
    gap = min_same_color_gap_sq(h, p, q)
    if gap < ExactScalar(1):
        raise ValueError(f"(h={h}, p={p}, q={q}) tops out below distance 1")
    return sqrt_float(gap)


def fold_coloring(h: int, sigma) -> PlaneColoring:
    """The stock h^2-fold coloring for distance band [1, sigma].

    Periods (p, 0) with p = ceil((2 sigma/sqrt3 + 1) h), hence p^2 colors.
    """
    s = as_scalar(sigma)
    if s < ExactScalar(1):
        raise ValueError("sigma must be at least 1")
    p = (s * ExactScalar(0, Fraction(2, 3)) * h + h).ceil()
    return PlaneColoring(HexLattice(h), p, 0)


def double_range_base(h: int) -> PlaneColoring:
    """Smallest-k (p, q) coloring of the [1, 2] band for this refinement.

    Tangency is tolerated (closed gap exactly 2 passes), which admits the
    12-color coloring at h = 1; boundary ownership keeps actual point
    pairs at distance 2 in different colors.
    """
    four = ExactScalar(4)
    best: Optional[Tuple[int, int, int]] = None
    limit = 6 * h + 30
    for p in range(0, limit):
        for q in range(p, limit):
            if (p, q) == (0, 0):
                continue
            k = color_count(p, q)
            if best is not None and k >= best[0]:
                continue
            # quick reject: center distance below 2 cannot reach gap 2
            if Fraction(3 * k, 4 * h * h) < 4:
                continue
            if min_same_color_gap_sq(h, p, q) >= four:
                best = (k, p, q)
    if best is None:
        raise ValueError(f"no [1,2]-band coloring found for h={h}")
    return PlaneColoring(HexLattice(h), best[1], best[2])


# -- cyclic label maps ----------------------------------------------------


class CyclicLabeling:
    """Solid h^2-fold labeling with guarded cyclic label order.

    Built on the (p, 0) coloring: every class of p^2 monochromatic tiles
    is split into `span` (3 or 6) sparser sublattices which receive
    consecutive labels.  One extra label is declared but never used, so
    the largest and smallest used labels are not cyclic neighbors.
    """

    def __init__(self, lattice: HexLattice, p: int, span: int, sigma: ExactScalar,
                 table: Dict[Tuple[int, int], Tuple[int, ...]]):
        self.lattice = lattice
        self.p = p
        self.span = span  # labels per class: 3 or 6
        self.sigma = sigma
        self.b = lattice.b
        self.k = span * p * p + 1  # declared label count (guard included)
        self.labels_used = span * p * p
        self._table = table
        self._reps: Dict[int, TileIndex] = {}
        for (i0, j0), labels in table.items():
            for s, label in enumerate(labels):
                a, bb = self._sub_rep(s)
                self._reps[label] = TileIndex(i0 + p * a, j0 + p * bb)

    def _sub_rep(self, s: int) -> Tuple[int, int]:
        if self.span == 3:
            return s, 0  # (A - B) mod 3 == s
        return s % 2, s // 2  # (A mod 2, B mod 3)

    def sub_of(self, a_steps: int, b_steps: int) -> int:
        if self.span == 3:
            return (a_steps - b_steps) % 3
        return (a_steps % 2) + 2 * (b_steps % 3)

    def same_label_basis(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        p = self.p
        if self.span == 3:
            return (p, p), (3 * p, 0)
        return (2 * p, 0), (0, 3 * p)

    def label_of_tile(self, t: TileIndex) -> int:
        p = self.p
        i0 = t.i % p
        j0 = t.j % p
        a = (t.i - i0) // p
        bb = (t.j - j0) // p
        return self._table[(i0, j0)][self.sub_of(a, bb)]

    def label_at(self, pt: Point, layer: int) -> int:
        return self.label_of_tile(self.lattice.locate(pt, layer))

    # kept name parity with PlaneColoring so online code treats both alike
    color_of = label_of_tile
    color_at = label_at

    def rep_tile(self, label: int) -> TileIndex:
        return self._reps[label]

    def without_guard(self) -> "CyclicLabeling":
        """Copy declaring only the used labels (for negative controls)."""
        clone = CyclicLabeling(self.lattice, self.p, self.span, self.sigma, self._table)
        clone.k = self.labels_used
        return clone

    def __repr__(self):
        return (f"CyclicLabeling(h={self.lattice.h}, p={self.p}, "
                f"span={self.span}, k={self.k})")


SIGMA_3LABEL_LIMIT_SQ = Fraction(7, 4)  # (1/(4-2*sqrt3))^2 = (1 + sqrt3/2)^2


def _three_label_sigma_ok(s: ExactScalar) -> bool:
    limit = ExactScalar(1, Fraction(1, 2))  # 1 + sqrt3/2 = 1/(4 - 2 sqrt3)
    return s <= limit


def _coset_vectors_within(h: int, d: Tuple[int, int], basis, lim: float):
    """Index vectors d + lattice(basis) with center distance <= lim (approx).

    The enumeration window is a safe overestimate; callers treat vectors
    beyond `lim` as automatically safe because a boundary gap is at
    least the center distance minus 1 (tile diameter).
    """
    cache = gap_cache(h)
    (x1, y1), (x2, y2) = basis
    # |u|, |v| of any vector with center <= lim is at most 4*h*lim/3
    comp = 4.0 * h * lim / 3.0 + abs(d[0]) + abs(d[1]) + 1
    base_min = min(abs(val) for val in (x1, y1, x2, y2) if val)
    span = int(comp / base_min) + 2
    lim_sq = Fraction(int(math.ceil(lim * lim * 16)) + 1, 16)
    for m in range(-span, span + 1):
        for n in range(-span, span + 1):
            u = d[0] + m * x1 + n * x2
            v = d[1] + m * y1 + n * y2
            if cache.center_sq(u, v) > lim_sq:
                continue
            yield u, v


def _coset_is_far(h: int, d: Tuple[int, int], basis, threshold_sq: ExactScalar,
                  reach: float) -> bool:
    """True when every vector in d + lattice(basis) has boundary gap^2 > threshold."""
    cache = gap_cache(h)
    for u, v in _coset_vectors_within(h, d, basis, reach + 1.0):
        if (u, v) == (0, 0):
            return False
        if not cache.boundary_sq(u, v) > threshold_sq:
            return False
    return True


def _snake_classes(p: int) -> List[Tuple[int, int]]:
    out = []
    for col in range(p):
        rows = range(p) if col % 2 == 0 else range(p - 1, -1, -1)
        for row in rows:
            out.append((col, row))
    return out


def _sub_orders(span: int) -> List[Tuple[int, ...]]:
    if span == 3:
        import itertools

        return sorted(itertools.permutations(range(3)))
    cycle = (0, 1, 2, 3, 4, 5)
    orders = []
    for start in range(6):
        rot = tuple(cycle[(start + i) % 6] for i in range(6))
        orders.append(rot)
        orders.append(tuple(reversed(rot)))
    return sorted(orders)


def build_cyclic_labeling(h: int, sigma, span: int) -> CyclicLabeling:
    """Construct the guarded cyclic labeling for the given band and span.

    Classes are laid out along a boustrophedon walk of the p x p class
    grid; the per-class order of the `span` sublabels is chosen by a
    deterministic backtracking pass so that every pair of consecutive
    labels lives on tile sets strictly farther apart than sigma.
    """
    s = as_scalar(sigma)
    if s < ExactScalar(1):
        raise ValueError("sigma must be at least 1")
    if span == 3 and not _three_label_sigma_ok(s):
        raise ValueError("three-label map needs sigma <= 1/(4 - 2*sqrt(3)) ~ 1.86603")
    if span not in (3, 6):
        raise ValueError("span must be 3 or 6")
    p = (s * ExactScalar(0, Fraction(2, 3)) * h + h + 1).ceil()
    lattice = HexLattice(h)
    shell = CyclicLabeling(lattice, p, span, s, table={})
    basis = shell.same_label_basis()
    classes = _snake_classes(p)
    orders = _sub_orders(span)
    sigma_sq = s * s
    reach = float(s)

    def rep_of(cls: Tuple[int, int], sub: int) -> Tuple[int, int]:
        a, bb = shell._sub_rep(sub)
        return cls[0] + p * a, cls[1] + p * bb

    chosen: List[Tuple[int, ...]] = []
    safe_cache: Dict[Tuple[int, int], bool] = {}

    def transition_ok_cached(prev_rep, nxt_rep) -> bool:
        d = (nxt_rep[0] - prev_rep[0], nxt_rep[1] - prev_rep[1])
        # (6p)Z x (3p)Z is inside the same-label lattice for both spans,
        # so this key never conflates distinct cosets
        key = (d[0] % (6 * p), d[1] % (3 * p))
        hit = safe_cache.get(key)
        if hit is None:
            hit = _coset_is_far(h, d, basis, sigma_sq, reach)
            safe_cache[key] = hit
        return hit

    def search(idx: int) -> bool:
        if idx == len(classes):
            return True
        cls = classes[idx]
        for order in orders:
            if idx > 0:
                prev_cls = classes[idx - 1]
                prev_last = rep_of(prev_cls, chosen[idx - 1][-1])
                first = rep_of(cls, order[0])
                if not transition_ok_cached(prev_last, first):
                    continue
            chosen.append(order)
            if search(idx + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        raise ValueError(f"no safe label order found for h={h}, sigma={float(s)}")

    table: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    label = 1
    for cls, order in zip(classes, chosen):
        labels = [0] * span
        for sub in order:
            labels[sub] = label
            label += 1
        table[cls] = tuple(labels)
    return CyclicLabeling(lattice, p, span, s, table)


def lstar_three_label(h: int, sigma) -> CyclicLabeling:
    """Guarded labeling with 3 labels per class; needs sigma <= ~1.86603."""
    return build_cyclic_labeling(h, sigma, span=3)


def lstar_six_label(h: int, sigma) -> CyclicLabeling:
    """Guarded labeling with 6 labels per class; works for any sigma >= 1."""
    return build_cyclic_labeling(h, sigma, span=6)


# -- validators ------------------------------------------------------------


@dataclass
class ValidationReport:
    passed: bool
    checks: List[str]
    failures: List[str]

    def __bool__(self):  # pragma: no cover - convenience
        return self.passed


def _sample_points(count: int, seed: int = 2024) -> List[Point]:
    import random

    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append(
            point(
                Fraction(rng.randint(-4000, 4000), 512),
                Fraction(rng.randint(-4000, 4000), 512),
            )
        )
    return pts


def validate_solid(coloring: PlaneColoring, sigma, sample_count: int = 10_000) -> ValidationReport:
    """Certify a coloring as a solid b-fold coloring for the [1, sigma] band.

    Checks tile diameter, strict separation of same-colored tiles within
    the sufficient enumeration radius, and pairwise-distinct layer colors
    at sampled points.
    """
    s = as_scalar(sigma)
    checks: List[str] = []
    failures: List[str] = []
    h = coloring.lattice.h
    # (a) tile diameter is exactly 1
    verts = ORIGIN_HEX
    diam_sq = max(
        sq_dist(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]
    )
    if diam_sq == ExactScalar(1):
        checks.append("tile diameter = 1")
    else:
        failures.append(f"tile diameter^2 = {float(diam_sq)}")
    # (b) same-colored pairs beyond sigma, enumerated within 2*sigma + 2
    cache = gap_cache(h)
    sigma_sq = s * s
    reach = 2.0 * float(s) + 2.0
    k = coloring.k
    vmax = Fraction(int(math.ceil(reach * reach * 16)), 16) * Fraction(4 * h * h, 3)
    nmax = int(math.isqrt(int(vmax * Fraction(4, 3)) // k + 4)) + 2
    p, q = coloring.p, coloring.q
    worst = None
    for m in range(-nmax, nmax + 1):
        for n in range(-nmax, nmax + 1):
            if (m, n) == (0, 0):
                continue
            if k * (m * m + m * n + n * n) > vmax:
                continue
            u = m * p + n * (p + q)
            v = m * q - n * p
            d = cache.boundary_sq(u, v)
            if not d > sigma_sq:
                failures.append(
                    f"tiles (0,0) and ({u},{v}) share a color at gap^2 = {float(d):.6f}"
                )
            if worst is None or d < worst:
                worst = d
    checks.append("same-color tile separation enumerated")
    # (c) distinct layer colors at sampled points
    bad = 0
    for pt in _sample_points(sample_count):
        seen = set()
        for layer in range(1, coloring.b + 1):
            seen.add(coloring.color_at(pt, layer))
        if len(seen) != coloring.b:
            bad += 1
            if bad <= 3:
                failures.append(f"layer colors collide at ({pt.x}, {pt.y})")
    checks.append(f"layer distinctness sampled at {sample_count} points")
    return ValidationReport(passed=not failures, checks=checks, failures=failures)


def validate_lstar(labeling: CyclicLabeling, sigma, sample_count: int = 2_000) -> ValidationReport:
    """Certify the cyclic-label conditions for the [1, sigma] band.

    Same-label tiles must sit strictly beyond 2*sigma, cyclically
    consecutive labels strictly beyond sigma (the declared-but-unused
    guard label makes the first/last pair vacuous), and the layer labels
    at any point must be pairwise distinct.
    """
    s = as_scalar(sigma)
    h = labeling.lattice.h
    checks: List[str] = []
    failures: List[str] = []
    basis = labeling.same_label_basis()
    two_sigma_sq = s * s * 4
    sigma_sq = s * s
    # condition 1: labels within declared range
    top = 0
    for labels in labeling._table.values():
        top = max(top, max(labels))
        if min(labels) < 1 or top > labeling.k:
            failures.append("label out of declared range")
    checks.append(f"labels in [1, {labeling.k}] with top used {top}")
    # condition 2: same-label tiles differ by a sublattice vector; all of
    # them within reach must clear 2*sigma strictly
    cache = gap_cache(h)
    same_ok = True
    for u, v in _coset_vectors_within(h, (0, 0), basis, 2 * float(s) + 1.0):
        if (u, v) == (0, 0):
            continue
        if not cache.boundary_sq(u, v) > two_sigma_sq:
            failures.append(f"same-label tiles (0,0) and ({u},{v}) within 2*sigma")
            same_ok = False
    if same_ok:
        checks.append("same-label separation > 2*sigma")
    # conditions 3 and 4: consecutive labels (cyclically) far apart
    pairs = [(lb, lb + 1) for lb in range(1, labeling.labels_used)]
    if labeling.labels_used >= labeling.k:  # no guard: the wrap pair is live
        pairs.append((labeling.k, 1))
    bad_pairs = 0
    for lo, hi in pairs:
        t1 = labeling.rep_tile(lo)
        t2 = labeling.rep_tile(hi)
        d = (t2.i - t1.i, t2.j - t1.j)
        if not _coset_is_far(h, d, basis, sigma_sq, float(s)):
            bad_pairs += 1
            if bad_pairs <= 4:
                which = "wrap" if (lo, hi) == (labeling.k, 1) else "consecutive"
                failures.append(f"{which} labels {lo},{hi} within sigma")
    checks.append(f"{len(pairs)} consecutive-label pairs enumerated")
    # layer distinctness at sampled points
    bad = 0
    for pt in _sample_points(sample_count, seed=77):
        seen = set()
        for layer in range(1, labeling.b + 1):
            seen.add(labeling.label_at(pt, layer))
        if len(seen) != labeling.b:
            bad += 1
            if bad <= 3:
                failures.append(f"layer labels collide at ({pt.x}, {pt.y})")
    checks.append(f"layer distinctness sampled at {sample_count} points")
    return ValidationReport(passed=not failures, checks=checks, failures=failures)
