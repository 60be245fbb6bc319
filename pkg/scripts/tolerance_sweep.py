#!/usr/bin/env python3
"""How the verification harness degrades as the rank tolerance shrinks or grows.

Too small a tolerance makes roundoff look like extra rank (classification
reports InternalInconsistency); too large a tolerance merges genuinely
independent directions.
"""

from __future__ import annotations

import argparse

from conforbits import verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--conjugations", type=int, default=20)
    ap.add_argument("--tols", type=float, nargs="+", default=[1e-15, 1e-13, 1e-11, 1e-8, 1e-5, 1e-2])
    args = ap.parse_args()

    names = [name for name, _ in verify.SECTIONS]
    print(f"{'rank_tol':>9s}  " + "  ".join(n.split("_", 1)[1][:14].rjust(14) for n in names))
    for tol in args.tols:
        settings = verify.Settings(rank_tol=tol, conjugations=args.conjugations, equivariance_trials=100)
        cells = []
        for name, fn in verify.SECTIONS:
            recs = fn(settings)
            cells.append(f"{sum(r['passed'] for r in recs)}/{len(recs)}".rjust(14))
        print(f"{tol:9.0e}  " + "  ".join(cells))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
