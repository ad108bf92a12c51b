#!/usr/bin/env python3
"""Warped distance between two points of one covering fibre, level by level."""
import argparse
from pathlib import Path

from origami_lab.config import FiberConfig
from origami_lab.plot import line_plot
from origami_lab.surface import covering_map, parse_point, staircase, surface_from_datum
from origami_lab.warpgraph import fiber_divergence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("out/fibres"))
    a = ap.parse_args()
    cfg = FiberConfig()
    surface = surface_from_datum(staircase(cfg.genus))
    pts = [surface.canonical(*parse_point(p)) for p in cfg.points]
    print("torus images:", sorted({str(covering_map(surface, p)) for p in pts}))
    table = fiber_divergence(surface, cfg.k, pts, cfg.levels)
    a.out.mkdir(parents=True, exist_ok=True)
    (a.out / "fibres.csv").write_text(table.to_csv())
    series = {f"{i}-{j}": (table.levels, d) for (i, j), d in table.distances.items()}
    (a.out / "fibres.svg").write_text(line_plot(series, title="fibre distances", xlabel="t", ylabel="distance"))
    for pair, d in table.distances.items():
        print(pair, d, "strictly increasing" if table.strictly_increasing(pair) else "NOT strictly increasing")


if __name__ == "__main__":
    main()
