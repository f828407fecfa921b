"""Command-line surface: plane colorings, online runs, benches, bound curves.

Exit codes: 0 success, 1 validation/verification failure, 2 usage error.
All output is deterministic for fixed arguments and seeds.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from .exactmath import ExactScalar, as_scalar
from .formats import (
    read_disk_instance,
    read_shape_instance,
    write_coloring,
    write_disk_instance,
    read_coloring,
)
from .online import KINDS, bound_formula, ceil_log2, make_config, run_online
from .oracles import (
    RatioReport,
    competitive_report,
    gen_random_disks,
    gen_tile_clique,
)
from .plane_coloring import (
    CyclicLabeling,
    PlaneColoring,
    build_cyclic_labeling,
    color_count,
    fold_coloring,
    sigma_exact,
    sigma_lower_bound,
    validate_lstar,
    validate_solid,
)
from .tiling import HexLattice


def _write_lines(path: Optional[str], lines: List[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# -- plane ------------------------------------------------------------------


def cmd_plane(args) -> int:
    if args.plane_cmd == "sigma":
        try:
            exact = sigma_exact(args.h, args.p, args.q)
        except ValueError as err:
            print(f"invalid: {err}")
            return 1
        bound = sigma_lower_bound(args.h, args.p, args.q)
        flag = "" if bound.valid else " (below 1: not a valid guarantee)"
        print(f"h={args.h} p={args.p} q={args.q} k={color_count(args.p, args.q)}")
        print(f"sigma_guaranteed={bound.value:.9f}{flag}")
        print(f"sigma_exact={exact:.9f} (error < 1e-9)")
        return 0

    if args.plane_cmd == "build":
        if args.labels is not None:
            coloring = build_cyclic_labeling(args.h, args.sigma, span=args.labels)
        elif args.p is not None:
            coloring = PlaneColoring(HexLattice(args.h), args.p, args.q or 0)
            if not coloring.supports_sigma(args.sigma):
                print("requested periods do not cover the band", file=sys.stderr)
                return 1
        else:
            coloring = fold_coloring(args.h, args.sigma)
        write_coloring(coloring, args.out, sigma_text=args.sigma)
        kind = "labeling" if isinstance(coloring, CyclicLabeling) else "coloring"
        print(f"wrote {kind} k={coloring.k} b={coloring.b} to {args.out}")
        return 0

    if args.plane_cmd == "validate":
        coloring, file_sigma = read_coloring(args.file)
        sigma = args.sigma or file_sigma
        if isinstance(coloring, CyclicLabeling):
            report = validate_lstar(coloring, sigma, sample_count=args.samples)
        else:
            report = validate_solid(coloring, sigma, sample_count=args.samples)
        for line in report.checks:
            print(f"  ok: {line}")
        for line in report.failures:
            print(f"  FAIL: {line}")
        print("PASS" if report.passed else "FAIL")
        return 0 if report.passed else 1

    if args.plane_cmd == "records":
        rows = []
        for h in args.h:
            for p in range(0, args.max_pq + 1):
                for q in range(p, args.max_pq + 1):
                    if (p, q) == (0, 0):
                        continue
                    try:
                        s = sigma_exact(h, p, q)
                    except ValueError:
                        continue
                    if s < args.sigma_min - 1e-9 or s > args.sigma_max + 1e-9:
                        continue
                    k = color_count(p, q)
                    rows.append((s, k / (h * h), h * h, k, p, q))
        dedup = {}
        for row in sorted(rows, key=lambda r: (r[0], r[1], r[2], r[3], r[4], r[5])):
            key = (round(row[0], 7), row[2], row[3])
            if key not in dedup:
                dedup[key] = row
        lines = ["sigma,k_per_b,b,k,p,q"]
        for s, ratio, b, k, p, q in sorted(dedup.values()):
            lines.append(f"{s:.5f},{ratio:.5f},{b},{k},{p},{q}")
        _write_lines(args.out, lines)
        return 0

    raise AssertionError("unreachable")


# -- run ---------------------------------------------------------------------


def _load_or_generate(args):
    if args.instance:
        return read_disk_instance(args.instance), args.instance
    if args.generate is None:
        raise SystemExit(2)
    inst = gen_random_disks(args.generate, sigma=args.sigma,
                            box_side=args.box, seed=args.seed)
    return inst, f"random(n={args.generate},seed={args.seed})"


def _run_shape_stream(args) -> int:
    from .online import make_config as mk
    from .oracles import build_shape_graph, verify_coloring, verify_l21
    from .shapes import run_shapes

    instance = read_shape_instance(args.shapes)
    rho = args.rho or instance.meta.get("rho_max", "2")
    rho_s = as_scalar(rho)
    sigma_s = as_scalar(args.sigma)
    h = args.h
    try:
        if args.mode == "l21":
            base = build_cyclic_labeling(h, rho_s * sigma_s,
                                         span=args.label_span or 6)
        elif args.algorithm == "BranchFoldColor":
            base = fold_coloring(h, rho_s * 2)
        else:
            base = fold_coloring(h, rho_s * sigma_s)
        config = mk(args.algorithm, args.sigma, h=h, mode=args.mode, base=base)
        result = run_shapes(config, instance.shapes, rho_bound=rho)
    except ValueError as err:
        print(f"shape stream error: {err}", file=sys.stderr)
        return 1
    meta = result.metadata
    width = int(meta["max_branches"])
    lines = ["# " + " ".join(f"{k}={v}" for k, v in sorted(meta.items()))]
    lines.append("id,branch,color,layer,tile_i,tile_j,flat_color")
    for idx, detail in enumerate(result.details):
        lines.append(
            f"{idx},{detail.branch},{detail.value},{detail.layer},"
            f"{detail.tile.i},{detail.tile.j},{detail.value * width + detail.branch}"
        )
    _write_lines(args.out, lines)
    print(f"n={len(result.colors)} colors_used={result.colors_used} "
          f"max_value={result.max_value}")
    if args.verify:
        graph = build_shape_graph(instance.shapes)
        if args.mode == "l21":
            ok = verify_l21(graph, [c.value for c in result.colors]).passed
        else:
            ok = verify_coloring(graph, result.colors).passed
        print("verified pass" if ok else "VERIFICATION FAILED")
        if not ok:
            return 1
    return 0


def cmd_run(args) -> int:
    if args.shapes:
        return _run_shape_stream(args)
    try:
        config = make_config(
            args.algorithm,
            args.sigma,
            h=args.h,
            mode=args.mode,
            periods=tuple(args.periods) if args.periods else None,
            label_span=args.label_span,
        )
    except ValueError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return 2
    try:
        instance, name = _load_or_generate(args)
    except FileNotFoundError as err:
        print(err, file=sys.stderr)
        return 2
    try:
        result = run_online(config, instance.disks)
    except ValueError as err:
        print(f"ingestion error: {err}", file=sys.stderr)
        return 1
    meta = result.metadata
    width = int(meta["max_branches"])
    lines = ["# " + " ".join(f"{k}={v}" for k, v in sorted(meta.items()))]
    lines.append("id,branch,color,layer,tile_i,tile_j,flat_color")
    for idx, detail in enumerate(result.details):
        layer = "" if detail.layer is None else str(detail.layer)
        ti = "" if detail.tile is None else str(detail.tile.i)
        tj = "" if detail.tile is None else str(detail.tile.j)
        flat = detail.value * width + detail.branch
        lines.append(f"{idx},{detail.branch},{detail.value},{layer},{ti},{tj},{flat}")
    _write_lines(args.out, lines)
    stats = (
        f"n={len(result.colors)} colors_used={result.colors_used} "
        f"max_value={result.max_value} branches={result.branches_used}"
    )
    print(stats)
    if args.verify:
        report = competitive_report(config, instance, instance_id=name,
                                    want_chi=args.chi, want_lambda=args.lam)
        print(RatioReport.CSV_HEADER)
        print(report.csv_row())
        if not report.verified:
            print("VERIFICATION FAILED", file=sys.stderr)
            return 1
        if not report.bound_respected:
            print("BOUND EXCEEDED", file=sys.stderr)
            return 1
    return 0


# -- bench --------------------------------------------------------------------


def _parse_algo_spec(spec: str):
    """'FoldShadeColor:h=3' -> (kind, {h: 3})."""
    parts = spec.split(":")
    kind = parts[0]
    opts = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        opts[key] = int(value)
    return kind, opts


def cmd_bench(args) -> int:
    algos = [_parse_algo_spec(s) for s in args.algorithms.split(",")]
    rows = []
    all_ok = True
    for idx in range(args.count):
        seed = args.seed + idx
        for kind, opts in algos:
            h = opts.get("h", 1)
            config = make_config(kind, args.sigma, h=h)
            if args.clique:
                # adversarial: crowd one subtile of this algorithm's lattice
                size = min(args.n, 60)
                inst = gen_tile_clique(size, h=h)
                name = f"clique{size}-h{h}"
            else:
                inst = gen_random_disks(args.n, sigma=args.sigma,
                                        box_side=args.box, seed=seed)
                name = f"rand-{seed}"
            report = competitive_report(config, inst, instance_id=name,
                                        clique_limit=args.clique_limit)
            rows.append(report)
            if not (report.verified and report.bound_respected):
                all_ok = False
    rows.sort(key=lambda r: (r.instance, r.algorithm))
    lines = [RatioReport.CSV_HEADER] + [r.csv_row() for r in rows]
    _write_lines(args.out, lines)
    verified = sum(1 for r in rows if r.verified)
    respected = sum(1 for r in rows if r.bound_respected)
    print(f"rows={len(rows)} verified={verified} bound_respected={respected}")
    if not all_ok:
        print("BENCH FAILURES PRESENT", file=sys.stderr)
        return 1
    return 0


# -- curves --------------------------------------------------------------------


def _sigma_grid(lo: str, hi: str, step: str) -> List[str]:
    from .exactmath import rational_to_decimal

    out = []
    val = Fraction(str(lo))
    top = Fraction(str(hi))
    inc = Fraction(str(step))
    while val <= top:
        out.append(rational_to_decimal(val))
        val += inc
    return out


def cmd_curves(args) -> int:
    if args.family == "basic":
        lines = ["sigma,branch_ff,simple_color,branch_color"]
        for stext in _sigma_grid(args.sigma_min, args.sigma_max, args.step):
            s = as_scalar(stext)
            simple = (s * ExactScalar(0, Fraction(2, 3)) + 1).ceil() ** 2
            if s > ExactScalar(1):
                c = ceil_log2(s)
                lines.append(f"{stext},{28 * c},{simple},{12 * c}")
            else:
                # branching is degenerate exactly at sigma = 1
                lines.append(f"{stext},,{simple},")
        _write_lines(args.out, lines)
        return 0

    if args.family == "ratio-omega":
        combos = []
        for stext in ("1", "2"):
            for h in (1, 2, 3):
                base = fold_coloring(h, stext)
                gamma = base.lattice.gamma
                combos.append((stext, h, base.k, base.b, gamma))
        header = "omega," + ",".join(f"sigma{c[0]}_h{c[1]}" for c in combos)
        lines = [header]
        omega = args.omega_min
        while omega <= args.omega_max:
            vals = []
            for stext, h, k, b, gamma in combos:
                bound = bound_formula("FoldShadeColor", omega, k=k, b=b, gamma=gamma)
                vals.append(f"{bound / omega:.6f}")
            lines.append(f"{omega}," + ",".join(vals))
            omega = max(omega + 1, int(omega * args.omega_step))
        _write_lines(args.out, lines)
        return 0

    if args.family == "ratio-sigma":
        h = args.h
        omega = args.omega
        lines = ["sigma,fold_shade_ratio"]
        for stext in _sigma_grid(args.sigma_min, args.sigma_max, args.step):
            base = fold_coloring(h, stext)
            bound = bound_formula("FoldShadeColor", omega, k=base.k, b=base.b,
                                  gamma=base.lattice.gamma)
            lines.append(f"{stext},{bound / omega:.6f}")
        _write_lines(args.out, lines)
        return 0

    raise AssertionError("unreachable")


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskcolor",
        description="Online coloring of disk graphs on exact hexagonal plane colorings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    plane = sub.add_parser("plane", help="build/validate/inspect plane colorings")
    psub = plane.add_subparsers(dest="plane_cmd", required=True)

    p_sigma = psub.add_parser("sigma", help="safe band bounds for (h, p, q)")
    p_sigma.add_argument("--h", type=int, required=True)
    p_sigma.add_argument("--p", type=int, required=True)
    p_sigma.add_argument("--q", type=int, required=True)

    p_build = psub.add_parser("build", help="emit a coloring/labeling file")
    p_build.add_argument("--h", type=int, required=True)
    p_build.add_argument("--sigma", type=str, required=True)
    p_build.add_argument("--p", type=int)
    p_build.add_argument("--q", type=int)
    p_build.add_argument("--labels", type=int, choices=(3, 6),
                         help="build a cyclic labeling with this many labels per class")
    p_build.add_argument("--out", type=str, required=True)

    p_val = psub.add_parser("validate", help="validate a coloring file")
    p_val.add_argument("--file", type=str, required=True)
    p_val.add_argument("--sigma", type=str)
    p_val.add_argument("--samples", type=int, default=10_000)

    p_rec = psub.add_parser("records", help="scan (h, p, q) and emit the sigma table")
    p_rec.add_argument("--h", type=int, nargs="+", default=[1, 2, 3])
    p_rec.add_argument("--max-pq", type=int, default=14)
    p_rec.add_argument("--sigma-min", type=float, default=1.0)
    p_rec.add_argument("--sigma-max", type=float, default=3.05)
    p_rec.add_argument("--out", type=str)

    run = sub.add_parser("run", help="run an online algorithm over an instance")
    run.add_argument("--algorithm", type=str, required=True, choices=KINDS)
    run.add_argument("--sigma", type=str, required=True)
    run.add_argument("--h", type=int, default=1)
    run.add_argument("--mode", type=str, default="proper", choices=("proper", "l21"))
    run.add_argument("--label-span", type=int, choices=(3, 6))
    run.add_argument("--periods", type=int, nargs=2, metavar=("P", "Q"))
    run.add_argument("--instance", type=str, help="JSONL disk instance file")
    run.add_argument("--shapes", type=str, help="JSONL convex-shape instance file")
    run.add_argument("--rho", type=str, help="declared outer/inner ratio bound for shapes")
    run.add_argument("--generate", type=int, help="generate n random disks instead")
    run.add_argument("--box", type=str, default="10")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--out", type=str)
    run.add_argument("--verify", action="store_true")
    run.add_argument("--chi", action="store_true", help="also compute exact chi when sized")
    run.add_argument("--lam", action="store_true", help="also compute exact span when sized")

    bench = sub.add_parser("bench", help="batch of instances x algorithms")
    bench.add_argument("--count", type=int, default=10)
    bench.add_argument("--n", type=int, default=50)
    bench.add_argument("--sigma", type=str, default="2")
    bench.add_argument("--box", type=str, default="10")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--clique", action="store_true",
                       help="adversarial single-tile cliques instead of random disks")
    bench.add_argument("--clique-limit", type=int, default=100)
    bench.add_argument(
        "--algorithms",
        type=str,
        default="BranchFF,SimpleColor,BranchColor,FoldColor:h=2,FoldShadeColor:h=3,BranchFoldColor:h=8",
    )
    bench.add_argument("--out", type=str)

    curves = sub.add_parser("curves", help="bound-curve data files")
    curves.add_argument("--family", type=str, required=True,
                        choices=("basic", "ratio-omega", "ratio-sigma"))
    curves.add_argument("--sigma-min", type=str, default="1")
    curves.add_argument("--sigma-max", type=str, default="8")
    curves.add_argument("--step", type=str, default="0.25")
    curves.add_argument("--omega-min", type=int, default=1)
    curves.add_argument("--omega-max", type=int, default=10**6)
    curves.add_argument("--omega-step", type=float, default=1.5)
    curves.add_argument("--omega", type=int, default=10**9)
    curves.add_argument("--h", type=int, default=10)
    curves.add_argument("--out", type=str)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "plane":
        return cmd_plane(args)
    if args.command == "run":
        return cmd_run(args)
    if args.command == "bench":
        return cmd_bench(args)
    if args.command == "curves":
        return cmd_curves(args)
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
