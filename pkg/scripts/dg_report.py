#!/usr/bin/env python3
"""Compare the word-ball formula D_G with the level-graph distance on random pairs.

D_G(u, v) = min over |g| <= R of |g| + t * d(g u, v) is computed on the grid,
so the comparison is against the warped distance on the same level.
"""
import argparse
from collections import Counter
from pathlib import Path

import numpy as np

from origami_lab.surface import staircase, surface_from_datum, torus
from origami_lab.warpgraph import build_level, dg_wordball


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--surface", choices=("torus", "z2"), default="torus")
    ap.add_argument("--t", type=int, default=8)
    ap.add_argument("--k", type=int, default=None, help="default: 1 on the torus, 2 on Z_2")
    ap.add_argument("--R", type=int, default=6)
    ap.add_argument("--pairs", type=int, default=50)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", type=Path, default=Path("out/dg"))
    a = ap.parse_args()
    surface = torus() if a.surface == "torus" else surface_from_datum(staircase(2))
    k = a.k or (1 if a.surface == "torus" else 2)
    level = build_level(surface, k, a.t)
    rng = np.random.default_rng(a.seed)
    rows = ["u,v,warped,dg,excess"]
    excess = Counter()
    for _ in range(a.pairs):
        i, j = rng.integers(0, level.n, size=2)
        u, v = level.labels[i], level.labels[j]
        d = level.distance(u, v)
        dg = dg_wordball(surface, k, a.t, u, v, a.R)
        excess[int(dg - d)] += 1
        rows.append(f"{u},{v},{d},{dg},{dg - d}")
    a.out.mkdir(parents=True, exist_ok=True)
    (a.out / "dg.csv").write_text("\n".join(rows) + "\n")
    print(f"{a.surface} t={a.t} k={k} R={a.R}: D_G - warped distance histogram {dict(sorted(excess.items()))}")


if __name__ == "__main__":
    main()
