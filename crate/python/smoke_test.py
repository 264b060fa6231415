#!/usr/bin/env python3
"""Smoke test for the toricgauss extension module.

Builds nothing itself: run `cargo build -p toric-gauss-py` (or --release)
first. The script locates the compiled cdylib under target/, stages it as an
importable module and exercises the main entry points.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_extension():
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libtoricgauss.so", "toricgauss.dll", "libtoricgauss.dylib")
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit(
        "toricgauss extension not found; run `cargo build -p toric-gauss-py` first"
    )


def stage(ext_path):
    stage_dir = Path(tempfile.mkdtemp(prefix="toricgauss-"))
    suffix = ".pyd" if ext_path.suffix == ".dll" else ".so"
    shutil.copy2(ext_path, stage_dir / ("toricgauss" + suffix))
    sys.path.insert(0, str(stage_dir))
    return stage_dir


def main():
    stage(locate_extension())
    import toricgauss as tg

    # the singular quadrilateral surface: generically 2-jet spanned, its
    # order-2 map contracts everything to a point
    quad = tg.PointConfiguration([[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [1, 2]])
    assert len(quad) == 6
    assert tg.osculating_dimension(quad, 2) == 6
    assert tg.is_generically_kjet_spanned(quad, 2)
    assert tg.compute_bk(quad, 2) == [[5, 4]]
    report = tg.analyze(quad, 2)
    assert report["fiber_dimension"] == 2
    assert report["finite"] is False
    assert sorted(report["fiber_points"]) == sorted(p for p in quad.points)
    hull = tg.convex_hull(quad)
    assert hull["smooth"] is False
    assert hull["vertices"] == [[0, 0], [0, 1], [1, 2], [2, 0]]

    # dilated simplices are the contraction exception
    simplex = tg.dilated_simplex(2, 3)
    assert tg.is_k_veronese(simplex, 3)
    c = tg.classify(simplex, 3)
    assert c["veronese"] and not c["finite"]

    # the doubled unit square is finite and birational at order 2
    square = tg.grid_box([2, 2])
    c = tg.classify(square, 2)
    assert c["smooth"] and c["kjet_spanned"] and c["finite"] and c["birational"]

    # hexagon: generic osculating dimension 6, but short edges
    hexagon = tg.hexagon()
    assert tg.osculating_dimension(hexagon, 2) == 6
    assert tg.edge_criterion_kjet(hexagon, 2) is False

    # the singular family dichotomy at order 2
    assert tg.analyze(tg.pn_family(3, 2), 2)["fiber_dimension"] == 3
    assert tg.analyze(tg.pn_family(3, 4), 2)["fiber_dimension"] == 2

    # exact plumbing: saturation divides out multiples
    assert tg.saturate([[2, 0]], 2) == [[1, 0]]

    # three-way agreement of the enumeration paths
    check = tg.cross_check(square, 2)
    assert check["full_matches_oracle"] and check["exchange_lattice_matches"]

    # jet matrix of three collinear points
    assert tg.jet_matrix(tg.PointConfiguration([[0], [1], [2]]), 1) == [
        [1, 1, 1],
        [0, 1, 2],
    ]
    assert tg.multi_indices(2, 1) == [[0, 0], [1, 0], [0, 1]]

    # agreement with the command line tool on the same input
    cli = REPO / "target" / "debug" / "toric-gauss"
    if cli.exists():
        doc = json.dumps({"points": [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [1, 2]],
                          "order": 2})
        out = subprocess.run([str(cli), "gauss"], input=doc, text=True,
                             capture_output=True, check=True)
        assert json.loads(out.stdout)["fiber_dimension"] == report["fiber_dimension"]

    print("smoke test passed")


if __name__ == "__main__":
    main()
