"""Single-pass online coloring of disk streams.

Six algorithms, all sharing two ingredients: *branching* splits disks by
the dyadic size class of their diameter and colors each class with its
own palette; *folding* routes same-subtile arrivals cyclically through
the layers of a multi-fold plane coloring.  Colors are (branch, value)
pairs; values from different branches never conflict.

A vertex is colored the moment it arrives and never recolored; the color
depends only on the disks seen so far.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exactmath import ExactScalar, as_scalar
from .geometry import Disk, Point, disks_intersect
from .plane_coloring import (
    CyclicLabeling,
    PlaneColoring,
    double_range_base,
    fold_coloring,
    lstar_six_label,
    lstar_three_label,
)
from .tiling import TileIndex

KINDS = (
    "BranchFF",
    "SimpleColor",
    "BranchColor",
    "FoldColor",
    "FoldShadeColor",
    "BranchFoldColor",
)
BRANCHING_KINDS = {"BranchFF", "BranchColor", "BranchFoldColor"}
L21_KINDS = {"SimpleColor", "FoldColor", "FoldShadeColor"}
SHADED_KINDS = {"FoldShadeColor", "BranchFoldColor"}

ONE = ExactScalar(1)


def ceil_log2(sigma) -> int:
    """Smallest c >= 0 with 2^c >= sigma, exact."""
    s = as_scalar(sigma)
    if s < ONE:
        raise ValueError("sigma must be at least 1")
    c = 0
    power = ExactScalar(1)
    while power < s:
        power = power * 2
        c += 1
    return c


def _dyadic_power(sigma: ExactScalar) -> Optional[int]:
    """t >= 1 when sigma equals 2^t exactly, else None."""
    t = 1
    power = ExactScalar(2)
    while power <= sigma:
        if power == sigma:
            return t
        power = power * 2
        t += 1
    return None


def branch_index_sq(d_sq: ExactScalar, sigma: ExactScalar) -> int:
    """Dyadic size class from a squared diameter, exact.

    floor(log2 d), except that a diameter equal to sigma = 2^t (integer
    t >= 1) joins class t-1, so the topmost class spans [2^(t-1), 2^t].
    """
    if d_sq < ONE or d_sq > sigma * sigma:
        raise ValueError("diameter outside [1, sigma]")
    t = _dyadic_power(sigma)
    if t is not None and d_sq == sigma * sigma:
        return t - 1
    j = 0
    power = ExactScalar(4)  # 4^(j+1)
    while power <= d_sq:
        power = power * 4
        j += 1
    return j


def branch_index(diameter, sigma) -> int:
    d = as_scalar(diameter)
    return branch_index_sq(d * d, as_scalar(sigma))


@dataclass(frozen=True)
class OnlineColor:
    branch: int
    value: int


@dataclass
class AlgorithmConfig:
    """A fully resolved run configuration.

    `base` is the plane coloring (or cyclic labeling in l21 mode) the
    tile-based algorithms consult; BranchFF needs none.  Use
    make_config() rather than building this directly.
    """

    kind: str
    sigma: ExactScalar
    sigma_text: str
    base: object = None
    mode: str = "proper"
    h: int = 1

    @property
    def max_branches(self) -> int:
        return max(1, ceil_log2(self.sigma))

    def metadata(self) -> Dict[str, object]:
        meta: Dict[str, object] = {
            "algorithm": self.kind,
            "sigma": self.sigma_text,
            "mode": self.mode,
            "max_branches": self.max_branches,
        }
        base = self.base
        if isinstance(base, PlaneColoring):
            meta.update(h=base.lattice.h, p=base.p, q=base.q, b=base.b, k=base.k)
            meta["shading"] = "stripe" if self.kind in SHADED_KINDS else "none"
        elif isinstance(base, CyclicLabeling):
            meta.update(h=base.lattice.h, p=base.p, q=0, b=base.b, k=base.k)
            meta["shading"] = "stripe" if self.kind in SHADED_KINDS else "none"
            meta["labels_per_class"] = base.span
        return meta


def make_config(kind: str, sigma, *, h: int = 1, mode: str = "proper",
                periods: Optional[Tuple[int, int]] = None,
                base: object = None,
                label_span: Optional[int] = None) -> AlgorithmConfig:
    """Build a run configuration, constructing the base coloring it needs.

    SimpleColor/FoldColor/FoldShadeColor color against a coloring of the
    [1, sigma] band (h^2-fold); BranchColor and BranchFoldColor against a
    coloring of the [1, 2] band reused across all size classes.  In l21
    mode the base is a guarded cyclic labeling instead (3 labels per
    class by default when sigma permits, else 6).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown algorithm kind {kind!r}")
    s = as_scalar(sigma)
    if s < ONE:
        raise ValueError("sigma must be at least 1")
    text = sigma if isinstance(sigma, str) else str(float(s))
    if mode not in ("proper", "l21"):
        raise ValueError("mode must be 'proper' or 'l21'")
    if mode == "l21" and kind not in L21_KINDS:
        raise ValueError(f"{kind} cannot produce distance-2 labelings (branch palettes clash)")
    if kind == "SimpleColor" and h != 1:
        raise ValueError("SimpleColor uses a single-layer base (h = 1)")
    if base is None and kind != "BranchFF":
        if mode == "l21":
            span = label_span
            if span is None:
                span = 3 if s <= ExactScalar(1, Fraction(1, 2)) else 6
            base = (lstar_three_label if span == 3 else lstar_six_label)(h, s)
        elif kind in ("BranchColor", "BranchFoldColor"):
            if periods is not None:
                base = PlaneColoring(_lattice(h), *periods)
                if not base.min_gap_sq() >= ExactScalar(4):
                    raise ValueError("base does not cover the [1, 2] band")
            else:
                base = double_range_base(h)
        else:
            if periods is not None:
                base = PlaneColoring(_lattice(h), *periods)
                if not base.supports_sigma(s):
                    raise ValueError(f"base does not cover the [1, {text}] band")
            else:
                base = fold_coloring(h, s)
    if mode == "l21" and not isinstance(base, CyclicLabeling):
        raise ValueError("l21 mode needs a cyclic labeling as base")
    return AlgorithmConfig(kind=kind, sigma=s, sigma_text=text, base=base,
                           mode=mode, h=h)


def _lattice(h: int):
    from .tiling import HexLattice

    return HexLattice(h)


# -- per-kind machines -------------------------------------------------


class _FoldMachine:
    """Folded tile coloring against one base; SimpleColor is b = 1."""

    def __init__(self, base, shaded: bool):
        self.base = base
        self.lattice = base.lattice
        self.b = base.lattice.b
        self.k = base.k
        self.shaded = shaded
        self.arrivals: Dict[Tuple[TileIndex, ...], int] = {}
        self.tile_counts: Dict[Tuple[TileIndex, int], int] = {}

    def assign(self, center: Point) -> Tuple[int, TileIndex, int]:
        key = self.lattice.subtile_key(center)
        seen = self.arrivals.get(key, 0)
        if self.shaded:
            layer = 1 + (self.lattice.shade(key) - 1 + seen) % self.b
        else:
            layer = 1 + seen % self.b
        self.arrivals[key] = seen + 1
        tile = key[layer - 1]
        t = self.tile_counts.get((tile, layer), 0)
        self.tile_counts[(tile, layer)] = t + 1
        value = self.base.color_of(tile) + self.k * t
        return layer, tile, value


class _BranchFFState:
    """Greedy first-fit per size class.

    Rational inputs are rescaled onto a common integer grid so the
    pairwise intersection scan is plain integer arithmetic (still
    exact); any irrational coordinate falls back to field arithmetic.
    """

    def __init__(self):
        self.by_branch: Dict[int, list] = {}
        self._scale = 1
        self._int_ok = True

    def _as_ints(self, disk: Disk):
        if not self._int_ok:
            return None
        for s in (disk.center.x, disk.center.y, disk.diameter):
            if s.b != 0:
                self._int_ok = False
                return None
        den = 1
        for s in (disk.center.x, disk.center.y, disk.diameter):
            d = int(s.a.denominator)
            den = den * d // math.gcd(den, d)
        lcm = self._scale * den // math.gcd(self._scale, den)
        if lcm != self._scale:
            factor = lcm // self._scale
            self._scale = lcm
            for bucket in self.by_branch.values():
                for entry in bucket:
                    if entry[1] is not None:
                        entry[1] = tuple(v * factor for v in entry[1])
        s = self._scale
        return (int(disk.center.x.a * s), int(disk.center.y.a * s),
                int(disk.diameter.a * s))

    def assign(self, j: int, disk: Disk) -> int:
        bucket = self.by_branch.setdefault(j, [])
        ints = self._as_ints(disk)
        forbidden = set()
        if ints is not None:
            x, y, d = ints
            for entry in bucket:
                other = entry[1]
                if other is None:
                    other = entry[1] = self._recode(entry[0])
                dx = x - other[0]
                dy = y - other[1]
                reach = d + other[2]
                if 4 * (dx * dx + dy * dy) <= reach * reach:
                    forbidden.add(entry[2])
        else:
            for entry in bucket:
                if disks_intersect(entry[0], disk):
                    forbidden.add(entry[2])
        value = 1
        while value in forbidden:
            value += 1
        bucket.append([disk, ints, value])
        return value

    def _recode(self, disk: Disk):
        s = self._scale
        return (int(disk.center.x.a * s), int(disk.center.y.a * s),
                int(disk.diameter.a * s))


@dataclass
class StepDetail:
    branch: int
    value: int
    layer: Optional[int]
    tile: Optional[TileIndex]


class OnlineColorer:
    """Stateful single-pass colorer; step() never looks ahead."""

    def __init__(self, config: AlgorithmConfig):
        self.config = config
        kind = config.kind
        self._ff = _BranchFFState() if kind == "BranchFF" else None
        self._machines: Dict[int, _FoldMachine] = {}
        self.details: List[StepDetail] = []

    def _machine(self, j: int) -> _FoldMachine:
        m = self._machines.get(j)
        if m is None:
            m = _FoldMachine(self.config.base, shaded=self.config.kind in SHADED_KINDS)
            self._machines[j] = m
        return m

    def step(self, disk: Disk) -> OnlineColor:
        cfg = self.config
        d_sq = disk.diameter * disk.diameter
        if disk.diameter < ONE or disk.diameter > cfg.sigma:
            raise ValueError("disk diameter outside [1, sigma]")
        kind = cfg.kind
        if kind == "BranchFF":
            j = branch_index_sq(d_sq, cfg.sigma)
            value = self._ff.assign(j, disk)
            detail = StepDetail(j, value, None, None)
        elif kind in ("SimpleColor", "FoldColor", "FoldShadeColor"):
            layer, tile, value = self._machine(0).assign(disk.center)
            detail = StepDetail(0, value, layer, tile)
        else:  # BranchColor, BranchFoldColor
            j = branch_index_sq(d_sq, cfg.sigma)
            center = disk.center.scaled(Fraction(1, 2**j)) if j else disk.center
            layer, tile, value = self._machine(j).assign(center)
            detail = StepDetail(j, value, layer, tile)
        self.details.append(detail)
        return OnlineColor(detail.branch, detail.value)

    def step_center(self, center: Point, j: int) -> OnlineColor:
        """Color a bare center in size class j (shape streams)."""
        machine_j = j if self.config.kind in BRANCHING_KINDS else 0
        if machine_j and self.config.kind == "BranchFoldColor":
            center = center.scaled(Fraction(1, 2**machine_j))
        layer, tile, value = self._machine(machine_j).assign(center)
        detail = StepDetail(machine_j, value, layer, tile)
        self.details.append(detail)
        return OnlineColor(detail.branch, detail.value)


@dataclass
class RunResult:
    colors: List[OnlineColor]
    details: List[StepDetail]
    metadata: Dict[str, object]

    @property
    def branches_used(self) -> List[int]:
        return sorted({c.branch for c in self.colors})

    @property
    def max_value_per_branch(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for c in self.colors:
            out[c.branch] = max(out.get(c.branch, 0), c.value)
        return out

    @property
    def colors_used(self) -> int:
        return len({(c.branch, c.value) for c in self.colors})

    @property
    def max_value(self) -> int:
        """Sum of per-branch maxima: the theorems' color-count yardstick."""
        return sum(self.max_value_per_branch.values())

    def flat_colors(self) -> List[int]:
        width = int(self.metadata.get("max_branches", 1))
        return [c.value * width + c.branch for c in self.colors]


def run_online(config: AlgorithmConfig, disks) -> RunResult:
    """Color a disk stream in arrival order; deterministic, never recolors."""
    colorer = OnlineColorer(config)
    colors = [colorer.step(d) for d in disks]
    return RunResult(colors=colors, details=colorer.details,
                     metadata=config.metadata())


def bound_formula(kind: str, omega: int, *, sigma=None, k: int = 0, b: int = 1,
                  gamma: int = 1) -> int:
    """Worst-case largest-color bound for the given algorithm.

    SimpleColor: k*w.  BranchColor: 12*ceil(log2 sigma)*w.  FoldColor:
    k*floor((w + (b-1)*gamma)/b).  FoldShadeColor: the same with
    gamma/2.  BranchFoldColor: ceil(log2 sigma) times the shaded bound.
    BranchFF: 28*ceil(log2 sigma)*w (competitive-ratio form).
    """
    if omega < 1:
        raise ValueError("omega must be at least 1")
    if kind == "SimpleColor":
        return k * omega
    if kind == "BranchFF":
        return 28 * ceil_log2(sigma) * omega
    if kind == "BranchColor":
        return 12 * ceil_log2(sigma) * omega
    if kind == "FoldColor":
        return k * ((omega + (b - 1) * gamma) // b)
    if kind == "FoldShadeColor":
        return k * ((2 * omega + (b - 1) * gamma) // (2 * b))
    if kind == "BranchFoldColor":
        return ceil_log2(sigma) * (k * ((2 * omega + (b - 1) * gamma) // (2 * b)))
    raise ValueError(f"unknown algorithm kind {kind!r}")


def bound_for_config(config: AlgorithmConfig, omega: int) -> int:
    meta = config.metadata()
    return bound_formula(
        config.kind,
        omega,
        sigma=config.sigma,
        k=int(meta.get("k", 0)),
        b=int(meta.get("b", 1)),
        gamma=config.base.lattice.gamma if config.base is not None else 1,
    )
