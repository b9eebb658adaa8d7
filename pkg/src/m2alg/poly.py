"""Commutative polynomial arithmetic over an exact field.

Two representations:

* ``UniPoly`` -- dense univariate polynomials (coefficient list, ascending),
  with Euclidean division and monic gcd.
* ``BiPoly`` -- sparse bivariate polynomials in s and t, as a map from
  exponent pairs (e_s, e_t) to nonzero coefficients.

The monomial order used everywhere (display, Groebner bases, normal forms)
is lexicographic with t > s: compare the t-exponent first, then the
s-exponent.  Canonical text is written descending in that order, e.g.
``t^3 - t^2 - 2*t + 1`` or ``t^6 + 5*s*t^4 + 6*s^2*t^2 + s^3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

NEG_INF = float("-inf")  # degree of the zero polynomial


def order_key(mono: tuple[int, int]) -> tuple[int, int]:
    """Sort key for a monomial (e_s, e_t) under lex with t > s."""
    es, et = mono
    return (et, es)


def mono_mul(m1, m2):
    return (m1[0] + m2[0], m1[1] + m2[1])


def mono_divides(m1, m2) -> bool:
    """Does s^a t^b given by m1 divide m2?"""
    return m1[0] <= m2[0] and m1[1] <= m2[1]


def mono_div(m1, m2):
    return (m1[0] - m2[0], m1[1] - m2[1])


def mono_lcm(m1, m2):
    return (max(m1[0], m2[0]), max(m1[1], m2[1]))


def _mono_text(mono: tuple[int, int]) -> str:
    es, et = mono
    parts = []
    if es:
        parts.append("s" if es == 1 else f"s^{es}")
    if et:
        parts.append("t" if et == 1 else f"t^{et}")
    return "*".join(parts)


def _join_terms(pieces: list[tuple[bool, str]]) -> str:
    """Assemble ±term pieces into canonical text."""
    if not pieces:
        return "0"
    out = []
    for k, (neg, text) in enumerate(pieces):
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(out)


def _term_text(field, coeff, mono_text: str) -> tuple[bool, str]:
    neg, mag = field.coeff_text(coeff)
    if not mono_text:
        return (neg, mag)
    if mag == "1":
        return (neg, mono_text)
    return (neg, f"{mag}*{mono_text}")


class UniPoly:
    """Dense univariate polynomial over a field."""

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs, field, var="t"):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field
        self.var = var

    @classmethod
    def zero(cls, field, var="t"):
        return cls((), field, var)

    @classmethod
    def const(cls, c, field, var="t"):
        return cls((field.of(c),), field, var)

    @classmethod
    def gen(cls, field, var="t"):
        return cls((field.zero, field.one), field, var)

    @classmethod
    def of_ints(cls, ints, field, var="t"):
        """Polynomial from ascending integer coefficients."""
        return cls([field.of(n) for n in ints], field, var)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            (self[k] + other[k] for k in range(n)), self.field, self.var
        )

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            (self[k] - other[k] for k in range(n)), self.field, self.var
        )

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs), self.field, self.var)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field, self.var)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return UniPoly(out, self.field, self.var)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(other, self.field, self.var)

    def scale(self, c):
        c = self.field.of(c) if isinstance(c, int) else c
        return UniPoly((c * a for a in self.coeffs), self.field, self.var)

    def shift(self, k: int):
        """Multiply by var^k."""
        if self.is_zero():
            return self
        return UniPoly(
            (self.field.zero,) * k + self.coeffs, self.field, self.var
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.const(1, self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        """Euclidean division; other must be nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = UniPoly.zero(self.field, self.var)
        r = self
        inv_lc = self.field.one / other.leading_coeff()
        while not r.is_zero() and r.degree >= other.degree:
            k = r.degree - other.degree
            c = r.leading_coeff() * inv_lc
            q = q + UniPoly.const(c, self.field, self.var).shift(k)
            r = r - other.scale(c).shift(k)
        return q, r

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc == self.field.one:
            return self
        return self.scale(self.field.one / lc)

    def evaluate(self, v):
        """Horner evaluation at a field element."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        return hash((self.coeffs, self.field, self.var))

    def text(self) -> str:
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            pieces.append(_term_text(self.field, c, mono))
        return _join_terms(pieces)

    def __repr__(self):
        return self.text()


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class BiPoly:
    """Sparse polynomial in s and t; terms maps (e_s, e_t) -> nonzero coeff."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: dict, field, _clean=True):
        if _clean:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self.field = field

    @classmethod
    def zero(cls, field):
        return cls({}, field, _clean=False)

    @classmethod
    def const(cls, c, field):
        c = field.of(c)
        return cls({(0, 0): c} if c else {}, field, _clean=False)

    @classmethod
    def s(cls, field, e=1):
        return cls({(e, 0): field.one}, field, _clean=False)

    @classmethod
    def t(cls, field, e=1):
        return cls({(0, e): field.one}, field, _clean=False)

    @classmethod
    def monomial(cls, c, mono, field):
        c = field.of(c) if isinstance(c, int) else c
        return cls({mono: c} if c else {}, field, _clean=False)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return BiPoly(out, self.field, _clean=False)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __neg__(self):
        return BiPoly(
            {m: -c for m, c in self.terms.items()}, self.field, _clean=False
        )

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1])
                v = out.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return BiPoly(out, self.field, _clean=False)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other, self.field)

    def scale(self, c):
        c = self.field.of(c) if isinstance(c, int) else c
        if not c:
            return BiPoly.zero(self.field)
        return BiPoly(
            {m: c * v for m, v in self.terms.items()}, self.field, _clean=False
        )

    def mul_monomial(self, c, mono):
        if not c:
            return BiPoly.zero(self.field)
        return BiPoly(
            {(m[0] + mono[0], m[1] + mono[1]): c * v for m, v in self.terms.items()},
            self.field,
            _clean=False,
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = BiPoly.const(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other, self.field)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms and self.field == other.field

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.field))

    def sorted_terms(self, reverse=True):
        return sorted(self.terms.items(), key=lambda kv: order_key(kv[0]), reverse=reverse)

    def lm(self) -> tuple[int, int]:
        """Leading monomial under lex t > s; polynomial must be nonzero."""
        return max(self.terms, key=order_key)

    def lc(self):
        return self.terms[self.lm()]

    def deg_t(self):
        return max((m[1] for m in self.terms), default=NEG_INF)

    def deg_s(self):
        return max((m[0] for m in self.terms), default=NEG_INF)

    def coeff(self, mono):
        return self.terms.get(mono, self.field.zero)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == self.field.one:
            return self
        return self.scale(self.field.one / lc)

    def evaluate_s(self, v) -> UniPoly:
        """Ring-homomorphic image under s -> v, landing in polynomials in t."""
        v = self.field.of(v) if isinstance(v, int) else v
        out: dict[int, object] = {}
        for (es, et), c in self.terms.items():
            w = c * v**es
            if et in out:
                out[et] = out[et] + w
            else:
                out[et] = w
        deg = max(out, default=-1)
        coeffs = [out.get(k, self.field.zero) for k in range(deg + 1)]
        return UniPoly(coeffs, self.field, var="t")

    def evaluate(self, sv, tv):
        """Full evaluation at field elements (s, t)."""
        acc = self.field.zero
        for (es, et), c in self.terms.items():
            acc = acc + c * sv**es * tv**et
        return acc

    def text(self) -> str:
        pieces = [
            _term_text(self.field, c, _mono_text(m)) for m, c in self.sorted_terms()
        ]
        return _join_terms(pieces)

    def __repr__(self):
        return self.text()


@dataclass(frozen=True)
class EvalAtS:
    """The evaluation homomorphism A[s,t] -> A[t], s -> value, t -> t."""

    value: object

    def __call__(self, p: BiPoly) -> UniPoly:
        return p.evaluate_s(self.value)


def evaluate_s(p: BiPoly, v) -> UniPoly:
    return p.evaluate_s(v)


class BiPolyRing:
    """Ring wrapper so generic matrix code can make 0, 1 and integer images."""

    def __init__(self, field):
        self.field = field
        self.zero = BiPoly.zero(field)
        self.one = BiPoly.const(1, field)
        self.name = f"{field.name}[s,t]"

    def of(self, n):
        if isinstance(n, BiPoly):
            return n
        return BiPoly.const(n, self.field)

    def random_element(self, rng):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            mono = (rng.randint(0, 2), rng.randint(0, 2))
            terms[mono] = self.field.random_element(rng)
        return BiPoly(terms, self.field)

    def __eq__(self, other):
        return isinstance(other, BiPolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("BiPolyRing", self.field))

    def __repr__(self):
        return self.name


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z]|\^|\*|\+|-)")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def _parse_terms(text: str, field, vars_ok=("s", "t")):
    """Parse canonical polynomial text into a monomial->coeff dict.

    Grammar: terms joined by + / -, each term a '*'-separated product of an
    optional rational coefficient and variable factors ``v`` or ``v^k``
    (the '*' may be omitted).
    """
    tokens = _tokenize(text)
    terms: dict[tuple[int, int], object] = {}
    pos = 0

    def parse_term(sign: int):
        nonlocal pos
        coeff = field.one if sign > 0 else -field.one
        exps = {v: 0 for v in vars_ok}
        saw_factor = False
        while pos < len(tokens):
            tok = tokens[pos]
            if tok in ("+", "-"):
                break
            if tok == "*":
                pos += 1
                continue
            if tok == "^":
                raise ValueError("exponent without a variable")
            if tok in vars_ok:
                pos += 1
                e = 1
                if pos < len(tokens) and tokens[pos] == "^":
                    pos += 1
                    if pos >= len(tokens) or not tokens[pos].isdigit():
                        raise ValueError("malformed exponent")
                    e = int(tokens[pos])
                    pos += 1
                exps[tok] += e
            elif tok[0].isdigit():
                coeff = coeff * field.parse_coeff(tok)
                pos += 1
            else:
                raise ValueError(f"unexpected token {tok!r}")
            saw_factor = True
        if not saw_factor:
            raise ValueError("empty term")
        mono = (exps.get("s", 0), exps.get("t", 0))
        prev = terms.get(mono)
        val = coeff if prev is None else prev + coeff
        if val:
            terms[mono] = val
        elif mono in terms:
            del terms[mono]

    sign = 1
    while pos < len(tokens) and tokens[pos] in ("+", "-"):
        if tokens[pos] == "-":
            sign = -sign
        pos += 1
    parse_term(sign)
    while pos < len(tokens):
        tok = tokens[pos]
        if tok not in ("+", "-"):
            raise ValueError(f"expected + or - at {tok!r}")
        sign = 1 if tok == "+" else -1
        pos += 1
        while pos < len(tokens) and tokens[pos] in ("+", "-"):
            if tokens[pos] == "-":
                sign = -sign
            pos += 1
        parse_term(sign)
    return terms


def parse_bipoly(text: str, field) -> BiPoly:
    """Inverse of BiPoly.text() on canonical output."""
    return BiPoly(_parse_terms(text, field), field)


def parse_unipoly(text: str, field, var="t") -> UniPoly:
    terms = _parse_terms(text.replace(var, "t"), field, vars_ok=("t",))
    deg = max((m[1] for m in terms), default=-1)
    coeffs = [field.zero] * (deg + 1)
    for (_, et), c in terms.items():
        coeffs[et] = coeffs[et] + c
    return UniPoly(coeffs, field, var=var)
