"""Text formats: JSONL instances, plane-coloring files, CSV helpers.

Coordinates travel as decimal strings and are converted exactly on both
ends, so a written instance reparses to the identical object and a
seeded generator reproduces identical bytes.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from .exactmath import ExactScalar, as_rational, as_scalar, rational_to_decimal
from .geometry import Disk, Point
from .oracles import DiskInstance
from .plane_coloring import CyclicLabeling, PlaneColoring
from .shapes import ConvexShape, ShapeInstance
from .tiling import HexLattice, TileIndex


def _scalar_to_text(s: ExactScalar) -> str:
    if s.b != 0:
        raise ValueError("only rational coordinates can be serialized")
    return rational_to_decimal(s.a)


def _point_to_pair(p: Point) -> List[str]:
    return [_scalar_to_text(p.x), _scalar_to_text(p.y)]


def write_disk_instance(instance: DiskInstance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps({"meta": instance.meta}, sort_keys=True) + "\n")
        for d in instance.disks:
            row = {
                "center": _point_to_pair(d.center),
                "diameter": _scalar_to_text(d.diameter),
            }
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def read_disk_instance(path) -> DiskInstance:
    disks: List[Disk] = []
    meta: Dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            if "meta" in obj:
                meta = obj["meta"]
                continue
            x, y = obj["center"]
            disks.append(
                Disk(
                    Point(as_scalar(x), as_scalar(y)),
                    as_scalar(obj["diameter"]),
                )
            )
    return DiskInstance(disks=disks, meta=meta)


def write_shape_instance(instance: ShapeInstance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps({"meta": instance.meta}, sort_keys=True) + "\n")
        for s in instance.shapes:
            row = {
                "center": _point_to_pair(s.center),
                "vertices": [_point_to_pair(v) for v in s.vertices],
            }
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def read_shape_instance(path) -> ShapeInstance:
    shapes: List[ConvexShape] = []
    meta: Dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            if "meta" in obj:
                meta = obj["meta"]
                continue
            verts = tuple(Point(as_scalar(x), as_scalar(y)) for x, y in obj["vertices"])
            cx, cy = obj["center"]
            shapes.append(ConvexShape(vertices=verts, center=Point(as_scalar(cx), as_scalar(cy))))
    return ShapeInstance(shapes=shapes, meta=meta)


# -- plane coloring files ---------------------------------------------------
#
# header: `h p q k b kind sigma_max`, then `i j color` rows over a
# fundamental domain.  sigma_max is decimal with error below 1e-9 (the
# root itself is irrational); cyclic labelings record their target band
# value extended by the labels-per-class marker.


def write_coloring(coloring, path, sigma_text: Optional[str] = None) -> None:
    lines = []
    if isinstance(coloring, CyclicLabeling):
        kind = f"cyclic{coloring.span}"
        p = coloring.p
        sigma_out = sigma_text or rational_to_decimal(coloring.sigma.a)
        lines.append(
            f"{coloring.lattice.h} {p} 0 {coloring.k} {coloring.b} {kind} {sigma_out}"
        )
        # the label map repeats on (6p)Z x (3p)Z for both spans
        for i in range(6 * p):
            for j in range(3 * p):
                lines.append(f"{i} {j} {coloring.label_of_tile(TileIndex(i, j))}")
    elif isinstance(coloring, PlaneColoring):
        sigma_out = sigma_text or f"{coloring.sigma_max():.9f}"
        lines.append(
            f"{coloring.lattice.h} {coloring.p} {coloring.q} {coloring.k} "
            f"{coloring.b} lattice {sigma_out}"
        )
        for i in range(coloring.a):
            for j in range(coloring.g):
                lines.append(f"{i} {j} {coloring.color_of(TileIndex(i, j))}")
    else:
        raise TypeError("unknown coloring object")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_coloring(path):
    """Rebuild the coloring from its parameters and check the table."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        h, p, q, k, b = (int(x) for x in header[:5])
        kind = header[5]
        sigma_text = header[6]
        rows = []
        for line in fh:
            line = line.strip()
            if line:
                i, j, c = line.split()
                rows.append((int(i), int(j), int(c)))
    if kind == "lattice":
        coloring = PlaneColoring(HexLattice(h), p, q)
        if coloring.k != k or coloring.b != b:
            raise ValueError("coloring file header inconsistent with parameters")
    elif kind in ("cyclic3", "cyclic6"):
        from .plane_coloring import build_cyclic_labeling

        coloring = build_cyclic_labeling(h, sigma_text, span=int(kind[-1]))
        if coloring.k != k or coloring.p != p:
            raise ValueError("labeling file header inconsistent with parameters")
    else:
        raise ValueError(f"unknown coloring kind {kind!r}")
    for i, j, c in rows:
        if coloring.color_of(TileIndex(i, j)) != c:
            raise ValueError(f"table mismatch at tile ({i}, {j})")
    return coloring, sigma_text
