"""Explicit 2x2 witness matrices over the quotient ring A[s,t]/I.

For coprime (i, j), the pair

    X = s^(-beta) * [[t, s], [1, 0]]^(alpha+beta)   (alpha*j - beta*i = 1),
    Y = [[0, 1], [0, 0]],

computed in the quotient, satisfies the defining relations
X^i Y + Y X^j = 1 and Y^2 = 0, and in fact X^j = [[t, s], [1, 0]] and
X^i = [[0, s], [1, -t]].  For i = j = 1 the quotient degenerates to A[s]
and X = [[0, s], [1, 0]].  All of this is re-verified at construction;
a failure raises Inconsistency rather than returning a bad pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Inconsistency, UnsupportedParameters
from .fields import QQ
from .groebner import GroebnerBasis, QuotientRing, structure_basis
from .mat2 import Mat2, mat_pow
from .poly import BiPoly


@dataclass(frozen=True)
class WitnessPair:
    """Matrices X, Y realizing the defining relations for exponents (i, j)."""

    X: Mat2
    Y: Mat2
    i: int
    j: int
    ring: QuotientRing


def _s_inverse(ring: QuotientRing, i: int, j: int):
    """The closed-form inverse of s in the quotient: (-1)^(i-j) * s^(i-j-1)."""
    field = ring.field
    return ring.of(
        BiPoly.s(field, i - j - 1).scale(field.of((-1) ** (i - j)))
    )


def witness_XY(i: int, j: int, field=QQ, gb: GroebnerBasis | None = None) -> WitnessPair:
    """Construct and verify the witness pair over A[s,t]/I.

    Accepts either orientation of (i, j); the matrices satisfy the relation
    in both orientations (the two presentations coincide).
    """
    if i < 1 or j < 1:
        raise UnsupportedParameters("exponents must be >= 1")
    if math.gcd(i, j) != 1:
        raise UnsupportedParameters(f"gcd({i}, {j}) != 1")
    hi, lo = max(i, j), min(i, j)
    if gb is None:
        gb = structure_basis(hi, lo, field)
    ring = QuotientRing(gb)
    companion = Mat2(ring, ring.t(), ring.s(), ring.one, ring.zero)
    if hi == lo == 1:
        X = Mat2(ring, ring.zero, ring.s(), ring.one, ring.zero)
    else:
        alpha = pow(lo, -1, hi)
        beta = (alpha * lo - 1) // hi
        X = mat_pow(companion, alpha + beta).scale(_s_inverse(ring, hi, lo) ** beta)
    Y = Mat2.e12(ring)
    ident = Mat2.identity(ring)
    checks = [
        (Y * Y).is_zero(),
        mat_pow(X, i) * Y + Y * mat_pow(X, j) == ident,
        mat_pow(X, j) * Y + Y * mat_pow(X, i) == ident,
        mat_pow(X, lo) == companion,
        mat_pow(X, hi) == Mat2(ring, ring.zero, ring.s(), ring.one, -ring.t()),
    ]
    if not all(checks):
        raise Inconsistency(f"witness construction failed for (i, j) = ({i}, {j})")
    return WitnessPair(X=X, Y=Y, i=i, j=j, ring=ring)
