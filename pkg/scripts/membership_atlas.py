#!/usr/bin/env python3
"""Membership atlas: classify (i, j) grids over several base fields at once.

For each cell the verdict comes from the congruence/valuation procedures,
and (optionally) every finite-field verdict is re-checked against the
brute-force enumeration oracle.  Output is a compact text atlas plus a
summary of member densities, handy for eyeballing the periodic structure.

    python scripts/membership_atlas.py --max 24 --primes 3 5 7 --oracle
"""

import argparse
import sys

from m2alg import decide_Q, decide_Z2, decide_Zp, enum_sweep_fp


def atlas(title, verdict, max_ij, checked=None):
    print(f"\n== {title} ==")
    members = 0
    for i in range(1, max_ij + 1):
        row = []
        for j in range(1, max_ij + 1):
            v = verdict(i, j)
            members += v
            row.append("#" if v else ".")
        print("".join(row))
    density = members / (max_ij * max_ij)
    extra = "" if checked is None else f", oracle agreement {checked}"
    print(f"members: {members}/{max_ij * max_ij} ({density:.1%}){extra}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=24)
    ap.add_argument("--primes", type=int, nargs="*", default=[3, 5, 7])
    ap.add_argument("--oracle", action="store_true", help="cross-check finite fields")
    args = ap.parse_args(argv)

    atlas("Q", lambda i, j: decide_Q(i, j).verdict, args.max)
    pairs = [
        (i, j) for i in range(1, args.max + 1) for j in range(1, args.max + 1)
    ]
    for p in [2] + args.primes:
        decide_fn = (
            (lambda i, j: decide_Z2(i, j).verdict)
            if p == 2
            else (lambda i, j: decide_Zp(p, i, j).verdict)
        )
        agreement = None
        if args.oracle:
            found = enum_sweep_fp(p, pairs)
            bad = [
                (i, j)
                for (i, j) in pairs
                if decide_fn(i, j) != (found[(i, j)] is not None)
            ]
            agreement = "100%" if not bad else f"DISAGREES at {bad[:5]}"
            if bad:
                print(f"!! disagreement over Z_{p}: {bad[:10]}", file=sys.stderr)
                return 1
        atlas(f"Z_{p}", decide_fn, args.max, checked=agreement)
    return 0


if __name__ == "__main__":
    sys.exit(main())
