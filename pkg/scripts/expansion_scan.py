#!/usr/bin/env python3
"""Spectral gap of the warped staircase levels against the unwarped control.

Writes scan.csv, scan.svg and a manifest to --out.
"""
import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from origami_lab.cli import _int_list, scan_builders
from origami_lab.config import ScanConfig
from origami_lab.manifest import ExperimentManifest
from origami_lab.plot import line_plot
from origami_lab.spectral import expansion_scan, scan_csv


def run(cfg: ScanConfig, out: Path) -> list:
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    builder, control = scan_builders(cfg.family, cfg.genus, cfg.k)
    rows = expansion_scan(builder, cfg.levels, control if cfg.control else None, threads=cfg.threads)
    man = ExperimentManifest(sys.argv, {"family": cfg.family, "genus": cfg.genus, "k": cfg.k,
                                        "levels": list(cfg.levels), "control": cfg.control}, 0)
    (out / "scan.csv").write_text(scan_csv(rows))
    series = {"warped": ([r.level for r in rows], [r.lambda2 for r in rows])}
    if rows and rows[0].control_lambda2 is not None:
        series["control"] = ([r.level for r in rows], [r.control_lambda2 for r in rows])
    (out / "scan.svg").write_text(line_plot(series, title=f"{cfg.family} lambda2 by level",
                                            xlabel="t", ylabel="lambda2", logy=True))
    for name in ("scan.csv", "scan.svg"):
        man.add_output(out, out / name)
    man.wall_time = round(time.perf_counter() - start, 6)
    man.write(out / "manifest.json")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="staircase", choices=("staircase", "schreier", "selberg"))
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--levels", default="4,8,16,32,64")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("out/scan"))
    a = ap.parse_args()
    cfg = replace(ScanConfig(), family=a.family, genus=a.genus, k=a.k,
                  levels=tuple(_int_list(a.levels)), control=a.family == "staircase", threads=a.threads)
    for r in run(cfg, a.out):
        ctrl = "" if r.control_lambda2 is None else f"  control {r.control_lambda2:.6f}"
        print(f"t={r.level:4d}  |V|={r.vertices:6d}  lambda2 {r.lambda2:.6f}{ctrl}")


if __name__ == "__main__":
    main()
