"""Exact coefficient arithmetic: rationals, prime fields, quadratic extensions.

Every element type here is an immutable value supporting +, -, *, /, ** and
equality, and may be mixed freely with plain ints on either side.  Rationals
are plain ``fractions.Fraction`` (always stored in lowest terms with positive
denominator, which is exactly the canonical form we need); the field objects
``QQ``, ``GF(p)`` and ``GF2(p)`` provide a uniform construction surface
(``zero``, ``one``, ``of``, ``random_element``, ...) for generic code.

Also home to the small number-theoretic predicates used by the membership
classification: the 2-adic valuation and the odd-multiple test.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

INF = math.inf  # 2-adic valuation of 0; compares and adds like a number


def nu2(n: int):
    """2-adic valuation of an integer: the exponent of 2 in n, with nu2(0) = INF."""
    if n == 0:
        return INF
    n = abs(n)
    return (n & -n).bit_length() - 1


def is_odd_multiple(a: int, b: int) -> bool:
    """True iff b != 0, b divides a and a/b is odd.

    Signs are ignored.  In particular 0 is never an odd multiple of anything
    (0/b is even), and nothing is an odd multiple of 0; the (0, 0) corner is
    therefore False as well.
    """
    if b == 0:
        return False
    a, b = abs(a), abs(b)
    return a % b == 0 and (a // b) % 2 == 1


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here stay desk-sized."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class RationalField:
    """The rational numbers; elements are fractions.Fraction."""

    name = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.char = 0

    def of(self, n) -> Fraction:
        return Fraction(n)

    def random_element(self, rng) -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def coeff_text(self, c) -> tuple[bool, str]:
        """(is_negative, magnitude text) for polynomial display."""
        return (c < 0, str(abs(c)))

    def parse_coeff(self, text: str) -> Fraction:
        return Fraction(text)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElem:
    """An element of the prime field with p elements, stored in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElem(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElem(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return FpElem(pow(self.value, -1, self.p), self.p) ** (-e)
        return FpElem(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """The field Z_p for a prime p; use the interned constructor GF(p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"
        self.zero = FpElem(0, p)
        self.one = FpElem(1, p)

    def of(self, n) -> FpElem:
        if isinstance(n, FpElem):
            if n.p != self.p:
                raise ValueError("modulus mismatch")
            return n
        if isinstance(n, Fraction):
            num = FpElem(n.numerator, self.p)
            return num if n.denominator == 1 else num / FpElem(n.denominator, self.p)
        return FpElem(int(n), self.p)

    def elements(self):
        for v in range(self.p):
            yield FpElem(v, self.p)

    def random_element(self, rng) -> FpElem:
        return FpElem(rng.randrange(self.p), self.p)

    def sqrt(self, c: FpElem):
        """A square root of c in F_p, or None.  Brute scan; p stays small."""
        for r in range(self.p):
            if (r * r - c.value) % self.p == 0:
                return FpElem(r, self.p)
        return None

    def coeff_text(self, c) -> tuple[bool, str]:
        return (False, str(c.value))

    def parse_coeff(self, text: str) -> FpElem:
        return self.of(Fraction(text))  # "a/b" becomes a * b^(-1)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def smallest_nonresidue(p: int) -> int:
    """Smallest quadratic nonresidue mod an odd prime p (deterministic)."""
    for u in range(2, p):
        if pow(u, (p - 1) // 2, p) == p - 1:
            return u
    raise ValueError(f"no nonresidue mod {p}")  # unreachable for p >= 3


class Fp2Elem:
    """a + b*w in the quadratic extension of F_p, where w*w = u (a nonresidue)."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: FpElem, b: FpElem, field: "QuadExtField"):
        self.a = a
        self.b = b
        self.field = field

    def _lift(self, other):
        if isinstance(other, Fp2Elem):
            if other.field.p != self.field.p:
                raise ValueError("modulus mismatch")
            return other
        if isinstance(other, (int, FpElem)):
            return self.field.of(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        u = self.field.u
        return Fp2Elem(
            self.a * o.a + u * (self.b * o.b),
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Fp2Elem(-self.a, -self.b, self.field)

    def conjugate(self) -> "Fp2Elem":
        return Fp2Elem(self.a, -self.b, self.field)

    def norm(self) -> FpElem:
        """a^2 - u*b^2, the product of the element with its conjugate."""
        return self.a * self.a - self.field.u * (self.b * self.b)

    def inverse(self) -> "Fp2Elem":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("0 has no inverse")
        ninv = n.inverse()
        return Fp2Elem(self.a * ninv, -self.b * ninv, self.field)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.field.p))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def in_base_field(self) -> bool:
        return not self.b

    def __repr__(self):
        if not self.b:
            return f"{self.a}"
        return f"({self.a}+{self.b}w)"


class QuadExtField:
    """F_{p^2} = F_p(w) with w^2 = u, u the smallest nonresidue mod p (p odd)."""

    def __init__(self, p: int):
        if p == 2:
            raise ValueError("p must be odd")
        self.base = GF(p)
        self.p = p
        self.char = p
        self.u = self.base.of(smallest_nonresidue(p))
        self.name = f"F{p * p}"
        self.zero = Fp2Elem(self.base.zero, self.base.zero, self)
        self.one = Fp2Elem(self.base.one, self.base.zero, self)
        self.omega = Fp2Elem(self.base.zero, self.base.one, self)

    def of(self, n) -> Fp2Elem:
        if isinstance(n, Fp2Elem):
            if n.field.p != self.p:
                raise ValueError("modulus mismatch")
            return n
        if isinstance(n, FpElem):
            return Fp2Elem(self.base.of(n), self.base.zero, self)
        return Fp2Elem(self.base.of(int(n)), self.base.zero, self)

    def make(self, a, b) -> Fp2Elem:
        return Fp2Elem(self.base.of(a), self.base.of(b), self)

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield self.make(a, b)

    def units(self):
        for z in self.elements():
            if z:
                yield z

    def random_element(self, rng) -> Fp2Elem:
        return self.make(rng.randrange(self.p), rng.randrange(self.p))

    def generator(self) -> Fp2Elem:
        """A generator of the cyclic group of units (order p^2 - 1)."""
        n = self.p * self.p - 1
        primes = factorize(n)
        for z in self.units():
            if all(z ** (n // q) != self.one for q in primes):
                return z
        raise RuntimeError("no generator found")  # unreachable

    def coeff_text(self, c) -> tuple[bool, str]:
        return (False, repr(c))

    def __eq__(self, other):
        return isinstance(other, QuadExtField) and other.p == self.p

    def __hash__(self):
        return hash(("QuadExtField", self.p))

    def __repr__(self):
        return f"GF2({self.p})"


@functools.lru_cache(maxsize=None)
def GF2(p: int) -> QuadExtField:
    return QuadExtField(p)


def fp2_frobenius(z: Fp2Elem) -> Fp2Elem:
    """The p-power map on F_{p^2}.

    Since w^2 is a nonresidue, w^p = -w, so z -> z^p is plain conjugation
    a + b*w -> a - b*w.  Fixes exactly the base-field elements.
    """
    return z.conjugate()


def element_order(z, group_order: int) -> int:
    """Multiplicative order of a unit z, given a multiple of it."""
    order = group_order
    for q in factorize(group_order):
        while order % q == 0 and z ** (order // q) == z ** 0:
            order //= q
    return order
