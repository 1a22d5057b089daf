"""Sweep E_N for egg points with small denominators and report R/r = N triangles.

    python scripts/integral_egg_sweep.py --from 3 --to 999 --egg-bound 1
"""

import argparse
import json
import time

from rrtri.search import SearchConfig, egg_sieve
from rrtri.table1 import TABLE1
from rrtri.transform import RatioTarget


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--from", dest="n_from", type=int, default=3)
    ap.add_argument("--to", dest="n_to", type=int, default=999)
    ap.add_argument("--egg-bound", type=int, default=1)
    ap.add_argument("--jsonl", action="store_true")
    args = ap.parse_args()

    known = {n: (f, g, h) for n, f, g, h in TABLE1}
    cfg = SearchConfig(args.egg_bound)
    start = time.monotonic()
    hits = {}
    for n in range(args.n_from, args.n_to + 1):
        recs = egg_sieve(RatioTarget.integer(n), cfg)
        if recs:
            hits[n] = sorted(r.triangle.sides for r in recs)
            if args.jsonl:
                print(json.dumps({"N": n, "mod8": n % 8,
                                  "triangles": [list(map(str, t)) for t in hits[n]]}))
            else:
                tag = "table" if n in known else "new"
                print(f"N={n:4d}  N mod 8={n % 8}  [{tag}]  {hits[n]}")
    missing = sorted(n for n in known if n != 2 and args.n_from <= n <= args.n_to and n not in hits)
    print(f"# {len(hits)} N with triangles, e <= {args.egg_bound}, "
          f"{time.monotonic() - start:.1f} s")
    print(f"# residues mod 8: {sorted({n % 8 for n in hits})}")
    print(f"# table rows not reached at this bound: {missing}")


if __name__ == "__main__":
    main()
