#!/usr/bin/env python3
"""Export orbit point clouds of the cohomogeneity-one groups as CSV for plotting.

One file per (label, base point); a second base point shows a neighbouring leaf.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from conforbits import catalog, io, orbits

LEAVES = {
    "P": [(0.0, 0.0, 1.0), (0.0, 0.0, -0.5)],
    "SO(2)xP": [(0.3, 0.0, 1.0)],
    "SO(2)xL": [(1.0, 0.0, 0.0), (2.0, 0.0, 0.0)],
    "NaxL": [(1.0, 0.0, 0.0)],
    "R+*xL": [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)],
    "SO(3)": [(1.0, 0.0, 0.0), (0.0, 2.0, 0.0)],
    "R+*xSO(2)": [(0.0, 1.0, 0.0), (0.0, 1.0, 1.0)],
    "SO(2)xSO(2)": [(1.0, 0.6, 0.0, 0.0, 0.8)],
    "SO(3)-block": [(1.0, 0.6, 0.8, 0.0, 0.0)],
    "SO0(1,2)": [(1.0, 0.0, 0.0, 0.6, 0.8)],
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", type=Path, default=Path("results/clouds"))
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=24221)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for label, bases in LEAVES.items():
        g = catalog.get(label, 1.0 if label in catalog.FAMILY_LABELS else None).generators
        for i, base in enumerate(bases):
            cloud = orbits.orbit_cloud(g, np.array(base), steps=args.steps, seed=args.seed, label=label)
            name = label.replace("*", "s").replace("(", "").replace(")", "").replace(",", "_")
            path = args.out_dir / f"{name}_{i}.csv"
            path.write_text(io.cloud_to_csv(cloud))
            print(f"{path}  {len(cloud.points)} points, orbit dim {cloud.meta['orbit_dim']}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
