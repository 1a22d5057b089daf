"""Count triangles with R/r = 2 + 1/M found by the quartic sieve for a range of M.

    python scripts/near_equilateral_survey.py --max-m 40 --bound 60
"""

import argparse

from rrtri.search import SearchConfig, quartic_sieve
from rrtri.transform import RatioTarget
from rrtri.triangle import angles_degrees


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=40)
    ap.add_argument("--bound", type=int, default=60)
    args = ap.parse_args()

    found = 0
    for m in range(1, args.max_m + 1):
        recs = quartic_sieve(RatioTarget.near_equilateral(m), SearchConfig(args.bound))
        if not recs:
            print(f"M={m:3d}  none up to bound {args.bound}")
            continue
        found += 1
        best = min(recs, key=lambda r: max(r.triangle.sides))
        angles = "/".join(f"{a:.2f}" for a in angles_degrees(best.triangle))
        print(f"M={m:3d}  {len(recs)} triangle(s), smallest {best.triangle.sides}  angles {angles}")
    print(f"# {found}/{args.max_m} values of M have a triangle up to bound {args.bound}")


if __name__ == "__main__":
    main()
