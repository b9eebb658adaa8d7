#!/usr/bin/env python3
"""Tabulate the quotient ring A[s,t]/I for coprime exponent pairs.

Prints, per pair, the reduced basis, the dimension of the quotient over
the base field, and the module generating bound 2(i+j-1)(i-j) that the
full algebra (four copies of the quotient) must respect.

    python scripts/quotient_dimensions.py --max 10 --field q
"""

import argparse
import math
import sys

from m2alg import GF, QQ, structure_basis
from m2alg.groebner import INFINITE


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8)
    ap.add_argument("--field", choices=("q", "fp"), default="q")
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args(argv)
    field = QQ if args.field == "q" else GF(args.p)

    print(f"{'(i, j)':>8}  {'dim':>4}  {'4*dim':>5}  {'bound':>5}  basis")
    pairs = [(1, 1)] + [
        (i, j)
        for i in range(2, args.max + 1)
        for j in range(1, i)
        if math.gcd(i, j) == 1
    ]
    for i, j in pairs:
        gb = structure_basis(i, j, field)
        dim = gb.dimension()
        basis = ", ".join(g.text() for g in gb.polys)
        if dim is INFINITE:
            print(f"({i:2},{j:2})  {'inf':>4}  {'-':>5}  {'-':>5}  {basis}")
            continue
        bound = 2 * (i + j - 1) * (i - j)
        flag = "" if 4 * dim <= bound else "  <-- BOUND VIOLATED"
        print(f"({i:2},{j:2})  {dim:4}  {4 * dim:5}  {bound:5}  {basis}{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
