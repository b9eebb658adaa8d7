"""Buchberger engine for ideals of A[s, t] over a field, lex order t > s.

Purpose-built for the structure ideal

    I(i, j) = ( f(i+j), f(i+j-1) - s^(j-1), s^(i-j) - (-1)^(i-j) ),

defined for coprime i >= j (with the degenerate single generator (t) at
i = j = 1), whose quotient carries the whole algebra via 2x2 matrices.
The engine itself is standard: S-polynomials, multivariate division,
full inter-reduction, deterministic pair selection (smallest lcm first),
so identical inputs always produce the identical reduced basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UnsupportedParameters
from .fields import QQ
from .poly import (
    BiPoly,
    mono_div,
    mono_divides,
    mono_lcm,
    order_key,
)
from .sequences import f_st


class _Infinite:
    """Marker for an infinite-dimensional quotient."""

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_infinite_instance, ())


INFINITE = _Infinite()


def _infinite_instance():
    return INFINITE


@dataclass(frozen=True)
class Ideal:
    """A finite generating set, remembering (i, j) when built structurally."""

    generators: tuple
    field: object
    params: tuple | None = None


def build_ideal_I(i: int, j: int, field=QQ) -> Ideal:
    """The structure ideal for the presentation with exponents (i, j).

    Requires gcd(i, j) = 1; the pair is used in the orientation i >= j
    (the two orientations present the same ring).
    """
    if i < 1 or j < 1:
        raise UnsupportedParameters("exponents must be >= 1")
    if math.gcd(i, j) != 1:
        raise UnsupportedParameters(
            f"gcd({i}, {j}) != 1: no quotient description is available"
        )
    if i < j:
        i, j = j, i
    if i == j == 1:
        return Ideal((BiPoly.t(field),), field, (1, 1))
    gens = (
        f_st(i + j, field),
        f_st(i + j - 1, field) - BiPoly.s(field, j - 1),
        BiPoly.s(field, i - j) - BiPoly.const((-1) ** (i - j), field),
    )
    return Ideal(gens, field, (i, j))


def _reduce_once(p: BiPoly, basis: list[BiPoly]):
    """One full division pass; returns (normal form, quotients per divisor)."""
    field = p.field
    quotients = [BiPoly.zero(field) for _ in basis]
    remainder = BiPoly.zero(field)
    work = p
    while not work.is_zero():
        lm = work.lm()
        lc = work.lc()
        for k, g in enumerate(basis):
            glm = g.lm()
            if mono_divides(glm, lm):
                factor = lc / g.lc()
                mono = mono_div(lm, glm)
                work = work - g.mul_monomial(factor, mono)
                quotients[k] = quotients[k] + BiPoly.monomial(factor, mono, field)
                break
        else:
            lt = BiPoly.monomial(lc, lm, field)
            remainder = remainder + lt
            work = work - lt
    return remainder, quotients


def reduce_by(p: BiPoly, basis) -> BiPoly:
    """Multivariate division remainder of p by the given polynomials."""
    basis = [g for g in basis if not g.is_zero()]
    if not basis:
        return p
    return _reduce_once(p, list(basis))[0]


def _spoly(f: BiPoly, g: BiPoly) -> BiPoly:
    l = mono_lcm(f.lm(), g.lm())
    cf = f.field.one / f.lc()
    cg = g.field.one / g.lc()
    return f.mul_monomial(cf, mono_div(l, f.lm())) - g.mul_monomial(
        cg, mono_div(l, g.lm())
    )


def buchberger_basis(generators, field) -> list[BiPoly]:
    """Reduced Groebner basis of the given generators, ascending by LM."""
    basis = [g.monic() for g in generators if not g.is_zero()]
    if not basis:
        return []
    pairs = {(a, b) for a in range(len(basis)) for b in range(a + 1, len(basis))}
    while pairs:
        # normal selection: smallest lcm in the monomial order, then indices
        a, b = min(
            pairs, key=lambda ab: (order_key(mono_lcm(basis[ab[0]].lm(), basis[ab[1]].lm())), ab)
        )
        pairs.discard((a, b))
        la, lb = basis[a].lm(), basis[b].lm()
        if mono_lcm(la, lb) == (la[0] + lb[0], la[1] + lb[1]):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        r = reduce_by(_spoly(basis[a], basis[b]), basis)
        if r.is_zero():
            continue
        basis.append(r.monic())
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    # minimalize: drop elements whose LM is divisible by another's
    keep = []
    for k, g in enumerate(basis):
        lm = g.lm()
        if any(
            mono_divides(h.lm(), lm) and (h.lm() != lm or m < k)
            for m, h in enumerate(basis)
            if m != k
        ):
            continue
        keep.append(g)
    # fully reduce each survivor against the others
    reduced = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1 :]
        r = reduce_by(g, others) if others else g
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: order_key(g.lm()))
    return reduced


class GroebnerBasis:
    """A reduced basis, with cached leading monomials for fast division."""

    __slots__ = ("polys", "field", "params", "_lms")

    def __init__(self, polys, field, params=None):
        self.polys = tuple(polys)
        self.field = field
        self.params = params
        self._lms = tuple(g.lm() for g in self.polys)

    def leading_monomials(self):
        return self._lms

    def normal_form(self, p: BiPoly) -> BiPoly:
        """The unique remainder of p modulo the basis; zero iff p is in the ideal."""
        field = self.field
        remainder = BiPoly.zero(field)
        work = p
        polys = self.polys
        lms = self._lms
        while work.terms:
            lm = work.lm()
            lc = work.terms[lm]
            for glm, g in zip(lms, polys):
                if glm[0] <= lm[0] and glm[1] <= lm[1]:
                    work = work - g.mul_monomial(lc, (lm[0] - glm[0], lm[1] - glm[1]))
                    break
            else:
                remainder = remainder + BiPoly.monomial(lc, lm, field)
                work = work - BiPoly.monomial(lc, lm, field)
        return remainder

    def contains(self, p: BiPoly) -> bool:
        return self.normal_form(p).is_zero()

    def is_trivial(self) -> bool:
        """True iff 1 is in the ideal, i.e. the basis is {1}."""
        return len(self.polys) == 1 and self.polys[0] == BiPoly.const(1, self.field)

    def quotient_basis(self):
        """Standard monomials of the quotient, ascending, or INFINITE.

        The quotient is finite-dimensional over the field exactly when some
        leading monomial is a pure power of s and some is a pure power of t.
        """
        if self.is_trivial():
            return []
        s_bound = None
        t_bound = None
        for es, et in self._lms:
            if et == 0:
                s_bound = es if s_bound is None else min(s_bound, es)
            if es == 0:
                t_bound = et if t_bound is None else min(t_bound, et)
        if s_bound is None or t_bound is None:
            return INFINITE
        monos = [
            (es, et)
            for es in range(s_bound)
            for et in range(t_bound)
            if not any(mono_divides(lm, (es, et)) for lm in self._lms)
        ]
        monos.sort(key=order_key)
        return monos

    def dimension(self):
        qb = self.quotient_basis()
        return INFINITE if qb is INFINITE else len(qb)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.polys == other.polys and self.field == other.field

    def __hash__(self):
        return hash((self.polys, self.field))

    def __repr__(self):
        return "{" + ", ".join(g.text() for g in self.polys) + "}"


def buchberger(ideal_or_gens, field=None, params=None) -> GroebnerBasis:
    """Reduced Groebner basis of an Ideal or an iterable of polynomials."""
    if isinstance(ideal_or_gens, Ideal):
        gens = ideal_or_gens.generators
        field = ideal_or_gens.field
        params = ideal_or_gens.params
    else:
        gens = list(ideal_or_gens)
        if field is None:
            if not gens:
                raise ValueError("field required for an empty generator list")
            field = gens[0].field
    return GroebnerBasis(buchberger_basis(gens, field), field, params)


def structure_basis(i: int, j: int, field=QQ) -> GroebnerBasis:
    return buchberger(build_ideal_I(i, j, field))


class _Tracked:
    """A polynomial together with cofactors over the original generators."""

    __slots__ = ("poly", "cofs")

    def __init__(self, poly, cofs):
        self.poly = poly
        self.cofs = cofs

    def scaled(self, c):
        return _Tracked(self.poly.scale(c), [q.scale(c) for q in self.cofs])

    def monic(self):
        if self.poly.is_zero():
            return self
        return self.scaled(self.poly.field.one / self.poly.lc())


def _tracked_reduce(p: _Tracked, basis: list[_Tracked]) -> _Tracked:
    work = p.poly
    cofs = list(p.cofs)
    field = work.field
    remainder = BiPoly.zero(field)
    while not work.is_zero():
        lm = work.lm()
        lc = work.lc()
        for g in basis:
            glm = g.poly.lm()
            if mono_divides(glm, lm):
                factor = lc / g.poly.lc()
                mono = mono_div(lm, glm)
                q = BiPoly.monomial(factor, mono, field)
                work = work - g.poly.mul_monomial(factor, mono)
                cofs = [c - q * gc for c, gc in zip(cofs, g.cofs)]
                break
        else:
            lt = BiPoly.monomial(lc, lm, field)
            remainder = remainder + lt
            work = work - lt
    return _Tracked(remainder, cofs)


def buchberger_with_certificate(ideal: Ideal):
    """Reduced basis plus, per element, cofactors over the input generators.

    Returns (GroebnerBasis, certificates) where certificates[k] is a list of
    polynomials q_m with basis[k] = sum_m q_m * generators[m].  Lets a test
    confirm soundness (basis contained in the ideal) without trusting the
    engine that produced the basis.
    """
    field = ideal.field
    gens = [g for g in ideal.generators if not g.is_zero()]
    n = len(gens)
    unit = lambda k, c: [
        BiPoly.monomial(c, (0, 0), field) if m == k else BiPoly.zero(field)
        for m in range(n)
    ]
    basis = [
        _Tracked(g, unit(k, field.one)).monic() for k, g in enumerate(gens)
    ]
    pairs = {(a, b) for a in range(len(basis)) for b in range(a + 1, len(basis))}
    while pairs:
        a, b = min(
            pairs,
            key=lambda ab: (
                order_key(mono_lcm(basis[ab[0]].poly.lm(), basis[ab[1]].poly.lm())),
                ab,
            ),
        )
        pairs.discard((a, b))
        fa, fb = basis[a], basis[b]
        la, lb = fa.poly.lm(), fb.poly.lm()
        if mono_lcm(la, lb) == (la[0] + lb[0], la[1] + lb[1]):
            continue
        l = mono_lcm(la, lb)
        qa = BiPoly.monomial(field.one / fa.poly.lc(), mono_div(l, la), field)
        qb = BiPoly.monomial(field.one / fb.poly.lc(), mono_div(l, lb), field)
        sp = _Tracked(
            qa * fa.poly - qb * fb.poly,
            [qa * ca - qb * cb for ca, cb in zip(fa.cofs, fb.cofs)],
        )
        r = _tracked_reduce(sp, basis)
        if r.poly.is_zero():
            continue
        basis.append(r.monic())
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    keep = []
    for k, g in enumerate(basis):
        lm = g.poly.lm()
        if any(
            mono_divides(h.poly.lm(), lm) and (h.poly.lm() != lm or m < k)
            for m, h in enumerate(basis)
            if m != k
        ):
            continue
        keep.append(g)
    reduced = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1 :]
        r = _tracked_reduce(g, others) if others else g
        if not r.poly.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: order_key(g.poly.lm()))
    gb = GroebnerBasis([g.poly for g in reduced], field, ideal.params)
    return gb, [g.cofs for g in reduced]


def normal_form(p: BiPoly, gb: GroebnerBasis) -> "QuotientElem":
    """Normal-form representative of p in the quotient ring."""
    return QuotientRing(gb).of(p)


def is_trivial(gb: GroebnerBasis) -> bool:
    return gb.is_trivial()


def quotient_basis(gb: GroebnerBasis):
    return gb.quotient_basis()


class QuotientElem:
    """Normal-form representative in A[s,t]/I against a fixed basis."""

    __slots__ = ("poly", "ring")

    def __init__(self, poly: BiPoly, ring: "QuotientRing"):
        self.poly = poly
        self.ring = ring

    def __add__(self, other):
        other = self.ring.of(other)
        return QuotientElem(self.poly + other.poly, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self.ring.of(other)
        return QuotientElem(self.poly - other.poly, self.ring)

    def __rsub__(self, other):
        return self.ring.of(other) - self

    def __neg__(self):
        return QuotientElem(-self.poly, self.ring)

    def __mul__(self, other):
        other = self.ring.of(other)
        return QuotientElem(self.ring.gb.normal_form(self.poly * other.poly), self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, BiPoly)):
            other = self.ring.of(other)
        if not isinstance(other, QuotientElem):
            return NotImplemented
        return self.poly == other.poly and self.ring.gb == other.ring.gb

    def __hash__(self):
        return hash((self.poly, self.ring.gb))

    def __bool__(self):
        return not self.poly.is_zero()

    def __repr__(self):
        return self.poly.text()


class QuotientRing:
    """A[s,t]/I presented by a reduced Groebner basis; elements are normal forms."""

    __slots__ = ("gb", "field", "zero", "one")

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.field = gb.field
        self.zero = QuotientElem(BiPoly.zero(self.field), self)
        self.one = QuotientElem(
            gb.normal_form(BiPoly.const(1, self.field)), self
        )

    def of(self, x) -> QuotientElem:
        if isinstance(x, QuotientElem):
            if x.ring.gb != self.gb:
                raise ValueError("element of a different quotient")
            return x
        if not isinstance(x, BiPoly):
            x = BiPoly.const(x, self.field)
        return QuotientElem(self.gb.normal_form(x), self)

    def s(self, e=1) -> QuotientElem:
        return self.of(BiPoly.s(self.field, e))

    def t(self, e=1) -> QuotientElem:
        return self.of(BiPoly.t(self.field, e))

    @property
    def name(self):
        return f"{self.field.name}[s,t]/I"

    def random_element(self, rng):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            terms[(rng.randint(0, 2), rng.randint(0, 2))] = self.field.random_element(rng)
        return self.of(BiPoly(terms, self.field))

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and other.gb == self.gb

    def __hash__(self):
        return hash(("QuotientRing", self.gb))

    def __repr__(self):
        return self.name
