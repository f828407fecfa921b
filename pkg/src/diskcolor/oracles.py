"""Offline ground truth: intersection graphs, verifiers, exact solvers.

Everything here is independent of the online path: graphs are built by
exact pairwise intersection tests, colorings are checked edge by edge,
and the small-instance solvers (clique, chromatic number, labeling span)
are exhaustive searches with pruning.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import ExactScalar, as_rational, as_scalar, rational_to_decimal
from .geometry import Disk, Point, disk, disks_intersect, point
from .online import AlgorithmConfig, OnlineColor, RunResult, bound_for_config, run_online
from .tiling import HexLattice, TileIndex


@dataclass
class IntersectionGraph:
    n: int
    adj: List[set]
    provenance: str = "disks"

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def _rational_micro_coords(disks: Sequence[Disk]):
    """Integer-scaled coordinates when all inputs are plain rationals."""
    denoms = set()
    for d in disks:
        for s in (d.center.x, d.center.y, d.diameter):
            if s.b != 0:
                return None
            denoms.add(as_rational(s.a).denominator)
    scale = 1
    for den in denoms:
        den = int(den)
        scale = scale * den // math.gcd(scale, den)
        if scale > 10**24:
            return None
    out = []
    for d in disks:
        out.append(
            (
                int(d.center.x.a * scale),
                int(d.center.y.a * scale),
                int(d.diameter.a * scale),
            )
        )
    return out


def build_disk_graph(disks: Sequence[Disk]) -> IntersectionGraph:
    """Exact pairwise intersection graph of closed disks.

    When every coordinate is rational the test runs on a common integer
    grid (still exact, far faster); otherwise it falls back to field
    arithmetic.
    """
    n = len(disks)
    adj = [set() for _ in range(n)]
    scaled = _rational_micro_coords(disks)
    if scaled is not None:
        for u in range(n):
            xu, yu, du = scaled[u]
            for v in range(u + 1, n):
                xv, yv, dv = scaled[v]
                dx = xu - xv
                dy = yu - yv
                reach = du + dv
                if 4 * (dx * dx + dy * dy) <= reach * reach:
                    adj[u].add(v)
                    adj[v].add(u)
    else:
        for u in range(n):
            for v in range(u + 1, n):
                if disks_intersect(disks[u], disks[v]):
                    adj[u].add(v)
                    adj[v].add(u)
    return IntersectionGraph(n=n, adj=adj, provenance="disks")


def build_shape_graph(shapes) -> IntersectionGraph:
    from .shapes import shapes_intersect

    n = len(shapes)
    adj = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if shapes_intersect(shapes[u], shapes[v]):
                adj[u].add(v)
                adj[v].add(u)
    return IntersectionGraph(n=n, adj=adj, provenance="shapes")


@dataclass
class VerificationReport:
    passed: bool
    conflicts: List[Tuple[int, int, str]] = field(default_factory=list)


def verify_coloring(graph: IntersectionGraph, colors: Sequence[OnlineColor]) -> VerificationReport:
    """List every edge whose endpoints share the same (branch, value)."""
    if len(colors) != graph.n:
        raise ValueError("assignment size does not match the graph")
    conflicts = []
    for u, v in graph.edges():
        cu, cv = colors[u], colors[v]
        if (cu.branch, cu.value) == (cv.branch, cv.value):
            conflicts.append((u, v, f"both colored ({cu.branch},{cu.value})"))
    return VerificationReport(passed=not conflicts, conflicts=conflicts)


def verify_l21(graph: IntersectionGraph, labels: Sequence[int]) -> VerificationReport:
    """Distance-two labeling check by depth-2 breadth-first search."""
    if len(labels) != graph.n:
        raise ValueError("label vector size does not match the graph")
    conflicts = []
    for u in range(graph.n):
        for v in graph.adj[u]:
            if u < v and abs(labels[u] - labels[v]) < 2:
                conflicts.append((u, v, "adjacent labels differ by less than 2"))
    for u in range(graph.n):
        second = set()
        for mid in graph.adj[u]:
            second.update(graph.adj[mid])
        second.discard(u)
        second -= graph.adj[u]
        for v in second:
            if u < v and labels[u] == labels[v]:
                conflicts.append((u, v, "equal labels at graph distance 2"))
    return VerificationReport(passed=not conflicts, conflicts=conflicts)


# -- exact solvers ------------------------------------------------------


def max_clique_exact(graph: IntersectionGraph, limit: int = 100) -> int:
    """Exact clique number by branch and bound with coloring bounds."""
    n = graph.n
    if n > limit:
        raise ValueError(f"clique oracle limited to {limit} vertices")
    if n == 0:
        return 0
    masks = [0] * n
    for u in range(n):
        for v in graph.adj[u]:
            masks[u] |= 1 << v
    best = 0

    def greedy_color_order(cand: int):
        """Candidates in greedy color-class order with their class number.

        A clique extending through position i cannot beat size + class,
        which is the pruning bound in expand().
        """
        order = []
        bounds = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                bit = avail & -avail
                v = bit.bit_length() - 1
                order.append(v)
                bounds.append(color)
                rest ^= bit
                avail = (avail ^ bit) & ~masks[v]
        return order, bounds

    def expand(cand: int, size: int):
        nonlocal best
        order, bounds = greedy_color_order(cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            cand &= ~(1 << v)
            new_cand = (cand | (1 << v)) & masks[v]
            if size + 1 > best:
                best = size + 1
            if new_cand:
                expand(new_cand, size + 1)
    expand((1 << n) - 1, 0)
    return best


def greedy_clique_lower_bound(graph: IntersectionGraph) -> int:
    order = sorted(range(graph.n), key=graph.degree, reverse=True)
    best = 0
    for start in order[: min(graph.n, 30)]:
        clique = {start}
        for v in order:
            if v != start and all(v in graph.adj[u] for u in clique):
                clique.add(v)
        best = max(best, len(clique))
    return best


def chromatic_exact(graph: IntersectionGraph, limit: int = 20) -> int:
    """Exact chromatic number by fixed-k backtracking, k increasing."""
    n = graph.n
    if n > limit:
        raise ValueError(f"chromatic oracle limited to {limit} vertices")
    if n == 0:
        return 0
    lower = max_clique_exact(graph, limit=max(limit, n))
    # greedy upper bound
    colors = [0] * n
    for v in sorted(range(n), key=graph.degree, reverse=True):
        used = {colors[u] for u in graph.adj[v]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    upper = max(colors)

    order = sorted(range(n), key=graph.degree, reverse=True)

    def colorable(k: int) -> bool:
        assign = [0] * n

        def place(idx: int, introduced: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            used = {assign[u] for u in graph.adj[v] if assign[u]}
            top = min(k, introduced + 1)
            for c in range(1, top + 1):
                if c in used:
                    continue
                assign[v] = c
                if place(idx + 1, max(introduced, c)):
                    return True
            assign[v] = 0
            return False

        return place(0, 0)

    for k in range(lower, upper):
        if colorable(k):
            return k
    return upper


def l21_span_exact(graph: IntersectionGraph, limit: int = 10) -> int:
    """Minimum span of a distance-two labeling, labels drawn from 0..span."""
    n = graph.n
    if n > limit:
        raise ValueError(f"labeling-span oracle limited to {limit} vertices")
    if n == 0:
        return 0
    omega = max_clique_exact(graph, limit=max(limit, n))
    # second-neighbor sets
    second = [set() for _ in range(n)]
    for u in range(n):
        for mid in graph.adj[u]:
            second[u].update(graph.adj[mid])
        second[u].discard(u)
        second[u] -= graph.adj[u]
    order = sorted(range(n), key=graph.degree, reverse=True)

    def feasible(span: int) -> bool:
        labels = [-1] * n

        def place(idx: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            for lab in range(span + 1):
                ok = True
                for u in graph.adj[v]:
                    if labels[u] >= 0 and abs(labels[u] - lab) < 2:
                        ok = False
                        break
                if ok:
                    for u in second[v]:
                        if labels[u] == lab:
                            ok = False
                            break
                if ok:
                    labels[v] = lab
                    if place(idx + 1):
                        return True
                    labels[v] = -1
            return False

        return place(0)

    span = max(0, 2 * (omega - 1))
    while not feasible(span):
        span += 1
    return span


# -- instance generators -------------------------------------------------


@dataclass
class DiskInstance:
    disks: List[Disk]
    meta: Dict[str, object]


RNG_ID = "python-random-mt19937"
_QUANTUM = 10**6


def gen_random_disks(n: int, sigma="1", box_side="10", seed: int = 0) -> DiskInstance:
    """Seeded uniform disks: centers in a box, diameters in [1, sigma].

    Coordinates are quantized to exact decimals (micro-units), so the
    instance round-trips through text byte-identically.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    sig = as_rational(sigma)
    if sig < 1:
        raise ValueError("sigma must be at least 1")
    box = as_rational(box_side)
    rng = random.Random(seed)
    disks: List[Disk] = []
    spread = sig - 1
    for _ in range(n):
        x = box * rng.randint(0, _QUANTUM) / _QUANTUM
        y = box * rng.randint(0, _QUANTUM) / _QUANTUM
        diameter = 1 + spread * rng.randint(0, _QUANTUM) / _QUANTUM
        disks.append(Disk(Point(as_scalar(x), as_scalar(y)), as_scalar(diameter)))
    meta = {
        "kind": "disks",
        "n": n,
        "sigma": str(sigma),
        "box_side": str(box_side),
        "seed": seed,
        "rng": RNG_ID,
    }
    return DiskInstance(disks=disks, meta=meta)


def gen_tile_clique(n: int, h: int = 1, tile: Optional[TileIndex] = None) -> DiskInstance:
    """n unit disks huddled inside one subtile: omega equals n.

    Centers are decimal points a few nanometers apart near a subtile
    interior point, verified exactly to share the subtile.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    lattice = HexLattice(h)
    tile = tile or TileIndex(0, 0)
    _m, _n, _side, centroid = lattice.atoms_in_tile(tile)[0]
    cx = round(float(centroid.x), 9)
    cy = round(float(centroid.y), 9)
    disks: List[Disk] = []
    key0 = None
    for idx in range(n):
        p = point(f"{cx:.9f}", f"{cy + idx * 1e-12:.12f}")
        key = lattice.subtile_key(p)
        if key0 is None:
            key0 = key
        elif key != key0:
            raise AssertionError("tile-clique points drifted across subtiles")
        disks.append(Disk(p, ExactScalar(1)))
    meta = {"kind": "disks", "n": n, "sigma": "1", "seed": None,
            "rng": "tile-clique", "h": h}
    return DiskInstance(disks=disks, meta=meta)


# -- competitive reports --------------------------------------------------


@dataclass
class RatioReport:
    instance: str
    algorithm: str
    sigma: str
    h: int
    p: int
    q: int
    b: int
    k: int
    mode: str
    n: int
    omega: int
    omega_exact: bool
    chi: Optional[int]
    lam: Optional[int]
    colors_used: int
    max_value: int
    bound_value: int
    bound_respected: bool
    ratio_vs_omega: Optional[float]
    verified: bool

    CSV_HEADER = (
        "instance,algorithm,sigma,h,p,q,b,k,mode,n,omega,omega_exact,chi,"
        "lambda,colors_used,max_value,bound_value,bound_respected,ratio_vs_omega"
    )

    def csv_row(self) -> str:
        ratio = "" if self.ratio_vs_omega is None else f"{self.ratio_vs_omega:.6f}"
        chi = "" if self.chi is None else str(self.chi)
        lam = "" if self.lam is None else str(self.lam)
        return ",".join(
            [
                self.instance,
                self.algorithm,
                self.sigma,
                str(self.h),
                str(self.p),
                str(self.q),
                str(self.b),
                str(self.k),
                self.mode,
                str(self.n),
                str(self.omega),
                str(int(self.omega_exact)),
                chi,
                lam,
                str(self.colors_used),
                str(self.max_value),
                str(self.bound_value),
                str(int(self.bound_respected)),
                ratio,
            ]
        )


def competitive_report(config: AlgorithmConfig, instance: DiskInstance,
                       instance_id: str = "inst",
                       clique_limit: int = 100, chi_limit: int = 20,
                       lambda_limit: int = 10,
                       want_chi: bool = False, want_lambda: bool = False) -> RatioReport:
    """Run, verify, and measure one instance against the theorem bound.

    Oracle size refusals degrade gracefully: omega falls back to a greedy
    lower bound (flagged), chi/lambda stay empty.
    """
    result = run_online(config, instance.disks)
    graph = build_disk_graph(instance.disks)
    if config.mode == "l21":
        labels = [c.value for c in result.colors]
        verified = verify_l21(graph, labels).passed
    else:
        verified = verify_coloring(graph, result.colors).passed
    if graph.n == 0:
        omega, exact = 0, True
    elif graph.n <= clique_limit:
        omega, exact = max_clique_exact(graph, limit=clique_limit), True
    else:
        omega, exact = greedy_clique_lower_bound(graph), False
    chi = None
    if want_chi and 0 < graph.n <= chi_limit:
        chi = chromatic_exact(graph, limit=chi_limit)
    lam = None
    if want_lambda and 0 < graph.n <= lambda_limit:
        lam = l21_span_exact(graph, limit=lambda_limit)
    meta = result.metadata
    bound = bound_for_config(config, omega) if omega >= 1 else 0
    max_value = result.max_value
    branch_count_ok = len(result.branches_used) <= config.max_branches
    bound_ok = (max_value <= bound and branch_count_ok) if omega >= 1 else True
    ratio = (max_value / omega) if omega >= 1 else None
    return RatioReport(
        instance=instance_id,
        algorithm=config.kind,
        sigma=config.sigma_text,
        h=int(meta.get("h", 0)),
        p=int(meta.get("p", 0)),
        q=int(meta.get("q", 0)),
        b=int(meta.get("b", 0)),
        k=int(meta.get("k", 0)),
        mode=config.mode,
        n=graph.n,
        omega=omega,
        omega_exact=exact,
        chi=chi,
        lam=lam,
        colors_used=result.colors_used,
        max_value=max_value,
        bound_value=bound,
        bound_respected=bound_ok,
        ratio_vs_omega=ratio,
        verified=verified,
    )
