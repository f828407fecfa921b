import filecmp
import subprocess
import sys

import pytest

from diskcolor.cli import main
from diskcolor.formats import (
    read_coloring,
    read_disk_instance,
    read_shape_instance,
    write_coloring,
    write_disk_instance,
    write_shape_instance,
)
from diskcolor.oracles import gen_random_disks
from diskcolor.plane_coloring import fold_coloring, lstar_three_label
from diskcolor.shapes import gen_random_shapes
from diskcolor.tiling import TileIndex


def test_disk_instance_roundtrip(tmp_path):
    inst = gen_random_disks(25, sigma="1.5", box_side="6", seed=4)
    path = tmp_path / "disks.jsonl"
    write_disk_instance(inst, path)
    back = read_disk_instance(path)
    assert back.meta["seed"] == 4
    assert len(back.disks) == 25
    for a, b in zip(inst.disks, back.disks):
        assert (a.center.x, a.center.y, a.diameter) == (b.center.x, b.center.y, b.diameter)
    # byte determinism
    path2 = tmp_path / "disks2.jsonl"
    write_disk_instance(gen_random_disks(25, sigma="1.5", box_side="6", seed=4), path2)
    assert filecmp.cmp(path, path2, shallow=False)


def test_shape_instance_roundtrip(tmp_path):
    inst = gen_random_shapes(8, sigma="2", box_side="8", seed=6)
    path = tmp_path / "shapes.jsonl"
    write_shape_instance(inst, path)
    back = read_shape_instance(path)
    assert len(back.shapes) == 8
    for a, b in zip(inst.shapes, back.shapes):
        assert a.center == b.center
        assert a.vertices == b.vertices


def test_coloring_file_roundtrip(tmp_path):
    fc = fold_coloring(2, "1.5")
    path = tmp_path / "coloring.txt"
    write_coloring(fc, path, sigma_text="1.5")
    loaded, sigma_text = read_coloring(path)
    assert sigma_text == "1.5"
    assert loaded.k == fc.k and loaded.b == fc.b
    for i in range(-4, 5):
        for j in range(-4, 5):
            assert loaded.color_of(TileIndex(i, j)) == fc.color_of(TileIndex(i, j))


def test_labeling_file_roundtrip(tmp_path):
    lab = lstar_three_label(1, 1)
    path = tmp_path / "labels.txt"
    write_coloring(lab, path)
    loaded, _ = read_coloring(path)
    assert loaded.k == lab.k
    for i in range(-3, 9):
        for j in range(-3, 9):
            assert loaded.label_of_tile(TileIndex(i, j)) == lab.label_of_tile(TileIndex(i, j))


def test_corrupted_coloring_file_rejected(tmp_path):
    fc = fold_coloring(1, "1")
    path = tmp_path / "coloring.txt"
    write_coloring(fc, path, sigma_text="1")
    lines = path.read_text().splitlines()
    head, first = lines[0], lines[1].split()
    first[2] = str(int(first[2]) % fc.k + 1)
    path.write_text("\n".join([head, " ".join(first)] + lines[2:]) + "\n")
    with pytest.raises(ValueError):
        read_coloring(path)


# -- CLI ----------------------------------------------------------------


def test_cli_plane_sigma_exit_codes(capsys):
    assert main(["plane", "sigma", "--h", "2", "--p", "1", "--q", "4"]) == 0
    out = capsys.readouterr().out
    assert "1.082531" in out
    assert main(["plane", "sigma", "--h", "3", "--p", "1", "--q", "1"]) == 1


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["plane", "sigma", "--h", "2"])  # missing p, q
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc2:
        main(["nonsense"])
    assert exc2.value.code == 2


def test_cli_build_validate_cycle(tmp_path, capsys):
    out = tmp_path / "c.txt"
    assert main(["plane", "build", "--h", "1", "--sigma", "1", "--out", str(out)]) == 0
    assert main(["plane", "validate", "--file", str(out), "--sigma", "1",
                 "--samples", "200"]) == 0
    # too-large sigma fails with exit 1
    assert main(["plane", "validate", "--file", str(out), "--sigma", "1.8",
                 "--samples", "50"]) == 1


def test_cli_run_verify_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "r1.csv"
    out2 = tmp_path / "r2.csv"
    argv = ["run", "--algorithm", "FoldColor", "--sigma", "1.5", "--h", "2",
            "--generate", "80", "--seed", "13", "--box", "8", "--verify"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    assert filecmp.cmp(out1, out2, shallow=False)
    header = out1.read_text().splitlines()[1]
    assert header == "id,branch,color,layer,tile_i,tile_j,flat_color"


def test_cli_run_rejects_bad_instance(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"center": ["0", "0"], "diameter": "9"}\n')
    code = main(["run", "--algorithm", "SimpleColor", "--sigma", "2",
                 "--instance", str(bad)])
    assert code == 1


def test_cli_records_contains_required_rows(tmp_path):
    out = tmp_path / "records.csv"
    assert main(["plane", "records", "--h", "2", "--max-pq", "5",
                 "--sigma-max", "1.6", "--out", str(out)]) == 0
    body = out.read_text()
    assert "1.08253,5.25000,4,21,1,4" in body
    assert "1.51554,7.75000,4,31,1,5" in body


def test_cli_curves_families(tmp_path):
    basic = tmp_path / "basic.csv"
    assert main(["curves", "--family", "basic", "--sigma-min", "1",
                 "--sigma-max", "2", "--step", "0.5", "--out", str(basic)]) == 0
    lines = basic.read_text().splitlines()
    assert lines[0] == "sigma,branch_ff,simple_color,branch_color"
    assert lines[1] == "1,,9,"  # branch curves only beyond sigma = 1
    assert lines[2] == "1.5,28,9,12"
    ro = tmp_path / "ro.csv"
    assert main(["curves", "--family", "ratio-omega", "--omega-min", "1",
                 "--omega-max", "1000", "--out", str(ro)]) == 0
    rows = ro.read_text().splitlines()
    assert rows[0].startswith("omega,sigma1_h1")
    # ratio column is non-increasing in omega
    col = [float(r.split(",")[1]) for r in rows[1:]]
    assert all(a >= b - 1e-12 for a, b in zip(col, col[1:]))
    rs = tmp_path / "rs.csv"
    assert main(["curves", "--family", "ratio-sigma", "--h", "10",
                 "--omega", "1000000000", "--sigma-min", "1", "--sigma-max", "2",
                 "--step", "0.5", "--out", str(rs)]) == 0
    assert rs.read_text().splitlines()[0] == "sigma,fold_shade_ratio"


def test_cli_bench_small(tmp_path):
    out = tmp_path / "bench.csv"
    code = main(["bench", "--count", "2", "--n", "25", "--sigma", "2",
                 "--seed", "3", "--algorithms", "BranchFF,SimpleColor",
                 "--out", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 1 + 2 * 2
    # deterministic rerun
    out2 = tmp_path / "bench2.csv"
    main(["bench", "--count", "2", "--n", "25", "--sigma", "2",
          "--seed", "3", "--algorithms", "BranchFF,SimpleColor",
          "--out", str(out2)])
    assert filecmp.cmp(out, out2, shallow=False)


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "diskcolor.cli", "plane", "sigma",
         "--h", "1", "--p", "2", "--q", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "sigma_exact=2.000000" in proc.stdout


def test_cli_shape_stream(tmp_path):
    inst = gen_random_shapes(20, sigma="1.5", box_side="8", seed=9, rho_max="2")
    path = tmp_path / "shapes.jsonl"
    write_shape_instance(inst, path)
    code = main(["run", "--algorithm", "FoldShadeColor", "--sigma", "1.5",
                 "--h", "2", "--shapes", str(path), "--rho", "2",
                 "--out", str(tmp_path / "sr.csv"), "--verify"])
    assert code == 0
