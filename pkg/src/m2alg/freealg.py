"""Words and noncommutative polynomials in x, y, with a rewriting engine.

The relations x^i y + y x^j = 1 and y^2 = 0 (gcd(i, j) = 1) yield a
reduction system:

* ``y^2 -> 0`` always;
* ``y x -> P(x) + Q(x) y`` (for i > j this comes from the derived commuting
  rule for y past x; for i = j = 1 it is simply ``y x -> 1 - x y``);
* for i > j, the alternating x-power relation with N = (i+j-1)(i-j),
  ``x^N -> x^(N-(i-j)) - x^(N-2(i-j)) + ...``, which keeps x-runs inside
  the finite spanning set {x^a, x^a y : a < N}.

Equality in the presented ring is *decided* through the faithful matrix
model over A[s,t]/I (``word_image``), never through the rewrite system
alone: the system is an accelerator whose outputs are cross-checked
(``validate_system``).  Confluence of the assembled rules is empirical,
not proved, except at i = j = 1.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
import re
from dataclasses import dataclass, field as dc_field

from .errors import Inconsistency, UnsupportedParameters
from .fields import QQ
from .groebner import structure_basis
from .mat2 import Mat2
from .model import witness_XY
from .poly import _join_terms, _term_text


class RewriteFuelExhausted(RuntimeError):
    """A reduction exceeded its step budget (possible nontermination)."""


class Word:
    """A word in x and y, stored as alternating run-length pairs."""

    __slots__ = ("runs",)

    def __init__(self, runs=()):
        merged: list[tuple[str, int]] = []
        for letter, e in runs:
            if e < 0:
                raise ValueError("negative exponent in word")
            if e == 0:
                continue
            if letter not in ("x", "y"):
                raise ValueError(f"unknown letter {letter!r}")
            if merged and merged[-1][0] == letter:
                merged[-1] = (letter, merged[-1][1] + e)
            else:
                merged.append((letter, e))
        self.runs = tuple(merged)

    @classmethod
    def one(cls):
        return cls(())

    @classmethod
    def gen(cls, letter: str, e: int = 1):
        return cls(((letter, e),))

    @classmethod
    def from_letters(cls, letters: str):
        return cls((ch, 1) for ch in letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.runs + other.runs)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.runs)

    def letters(self) -> str:
        return "".join(letter * e for letter, e in self.runs)

    def key(self):
        """Sort key for the degree-lexicographic order with x < y."""
        return (self.degree, self.letters())

    def rewrite_measure(self):
        """(y-count, per-y count of x's to its right, degree).

        Under the default reduction strategy every rewrite replaces a word
        by words that are strictly smaller in this lexicographic measure,
        so processing words in decreasing measure order terminates and
        visits each distinct word at most once.
        """
        ycount = 0
        xs_right = 0
        rvec_rev = []
        for letter, e in reversed(self.runs):
            if letter == "x":
                xs_right += e
            else:
                ycount += e
                rvec_rev.extend([xs_right] * e)
        return (ycount, tuple(reversed(rvec_rev)), self.degree)

    def is_one(self) -> bool:
        return not self.runs

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self):
        return hash(self.runs)

    def text(self) -> str:
        if not self.runs:
            return "1"
        return "*".join(
            letter if e == 1 else f"{letter}^{e}" for letter, e in self.runs
        )

    def __repr__(self):
        return self.text()


class NCPoly:
    """Formal linear combination of words over a coefficient field."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: dict, field, _clean=True):
        if _clean:
            terms = {w: c for w, c in terms.items() if c}
        self.terms = terms
        self.field = field

    @classmethod
    def zero(cls, field):
        return cls({}, field, _clean=False)

    @classmethod
    def of_word(cls, w: Word, field, coeff=1):
        c = field.of(coeff) if isinstance(coeff, int) else coeff
        return cls({w: c} if c else {}, field, _clean=False)

    @classmethod
    def one(cls, field):
        return cls.of_word(Word.one(), field)

    @classmethod
    def x(cls, field, e: int = 1):
        return cls.of_word(Word.gen("x", e), field)

    @classmethod
    def y(cls, field, e: int = 1):
        return cls.of_word(Word.gen("y", e), field)

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, Word):
            return NCPoly.of_word(other, self.field)
        return NCPoly.of_word(Word.one(), self.field, self.field.of(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            v = c if v is None else v + c
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return NCPoly(out, self.field, _clean=False)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.field, _clean=False)

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                v = out.get(w)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[w] = v
                elif w in out:
                    del out[w]
        return NCPoly(out, self.field, _clean=False)

    __rmul__ = __mul__

    def lmul_word(self, w: Word):
        return NCPoly({w * u: c for u, c in self.terms.items()}, self.field, _clean=False)

    def rmul_word(self, w: Word):
        return NCPoly({u * w: c for u, c in self.terms.items()}, self.field, _clean=False)

    def scale(self, c):
        c = self.field.of(c) if isinstance(c, int) else c
        if not c:
            return NCPoly.zero(self.field)
        return NCPoly({w: c * v for w, v in self.terms.items()}, self.field, _clean=False)

    def __eq__(self, other):
        if isinstance(other, (int, Word)):
            other = self._coerce(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms and self.field == other.field

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.field))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return set(self.terms)

    def text(self) -> str:
        pieces = []
        for w in sorted(self.terms, key=Word.key, reverse=True):
            mono = "" if w.is_one() else w.text()
            pieces.append(_term_text(self.field, self.terms[w], mono))
        return _join_terms(pieces)

    def __repr__(self):
        return self.text()


_WORD_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[xy]|\^|\*|\+|-)")


def parse_word_expr(text: str, field=QQ) -> NCPoly:
    """Parse expressions like ``x^2*y + y*x - 1`` (order of factors matters)."""
    tokens, pos = [], 0
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    result = NCPoly.zero(field)
    k = 0

    def term(sign):
        nonlocal k, result
        coeff = field.one if sign > 0 else -field.one
        runs: list[tuple[str, int]] = []
        saw = False
        while k < len(tokens) and tokens[k] not in ("+", "-"):
            tok = tokens[k]
            if tok == "*":
                k += 1
                continue
            if tok in ("x", "y"):
                k += 1
                e = 1
                if k < len(tokens) and tokens[k] == "^":
                    k += 1
                    if k >= len(tokens) or not tokens[k].isdigit():
                        raise ValueError("malformed exponent")
                    e = int(tokens[k])
                    k += 1
                runs.append((tok, e))
            elif tok[0].isdigit():
                coeff = coeff * field.parse_coeff(tok)
                k += 1
            else:
                raise ValueError(f"unexpected token {tok!r}")
            saw = True
        if not saw:
            raise ValueError("empty term")
        result = result + NCPoly.of_word(Word(runs), field, coeff)

    sign = 1
    while k < len(tokens) and tokens[k] in ("+", "-"):
        if tokens[k] == "-":
            sign = -sign
        k += 1
    if k >= len(tokens):
        raise ValueError("empty expression")
    term(sign)
    while k < len(tokens):
        sign = 1 if tokens[k] == "+" else -1
        k += 1
        while k < len(tokens) and tokens[k] in ("+", "-"):
            if tokens[k] == "-":
                sign = -sign
            k += 1
        term(sign)
    return result


@dataclass(frozen=True)
class RewriteSystem:
    """Reduction rules for the presentation with exponents (i, j), i >= j."""

    i: int
    j: int
    field: object
    yx_rhs: NCPoly
    xpow: tuple | None  # (N, NCPoly replacement for x^N), None at i = j = 1
    order: str

    @property
    def span_bound(self):
        """Exponent bound of the x-runs in normal forms (None when unbounded)."""
        return self.xpow[0] if self.xpow else None


def _xpow_as_sum(i: int, j: int, field) -> NCPoly:
    """Alternating replacement for x^N, N = (i+j-1)(i-j), valid for i > j."""
    out = NCPoly.zero(field)
    for k in range(1, i + j):
        sign = 1 if (k + 1) % 2 == 0 else -1
        out = out + NCPoly.of_word(Word.gen("x", (i + j - 1 - k) * (i - j)), field, sign)
    return out


def _reduce_x_exponents(p: NCPoly, N: int, xrhs: NCPoly) -> NCPoly:
    """Rewrite every x-run with exponent >= N using the x-power rule only."""
    field = p.field
    out = NCPoly.zero(field)
    stack = list(p.terms.items())
    while stack:
        w, c = stack.pop()
        for idx, (letter, e) in enumerate(w.runs):
            if letter == "x" and e >= N:
                left = Word(w.runs[:idx] + (("x", e - N),))
                right = Word(w.runs[idx + 1 :])
                repl = xrhs.lmul_word(left).rmul_word(right)
                stack.extend((w2, c2 * c) for w2, c2 in repl.terms.items())
                break
        else:
            out = out + NCPoly.of_word(w, field, c)
    return out


def build_rewrite_system(i: int, j: int, field=QQ) -> RewriteSystem:
    """Assemble the reduction rules for coprime (i, j).

    For i > j the y-past-x rule is produced constructively: pick the smallest
    n >= 1 with n*j = 1 + m*(i+j), push y across x^(nj) using the derived
    commuting relations, and fold x-exponents back into [0, (i+j-1)(i-j))
    using x^(i^2-j^2) = (-1)^(i+j) with its tracked sign.
    """
    if i < 1 or j < 1:
        raise UnsupportedParameters("exponents must be >= 1")
    if math.gcd(i, j) != 1:
        raise UnsupportedParameters(f"gcd({i}, {j}) != 1")
    if i < j:
        i, j = j, i
    if i == j:  # necessarily (1, 1)
        rhs = NCPoly.one(field) - NCPoly.x(field) * NCPoly.y(field)
        rs = RewriteSystem(1, 1, field, rhs, None, "deglex x < y")
        _build_sanity_check(rs)
        return rs
    N = (i + j - 1) * (i - j)
    M = (i * i - j * j)
    sigma = (-1) ** (i + j)
    xrhs = _xpow_as_sum(i, j, field)
    n = pow(j, -1, i + j)
    m = (n * j - 1) // (i + j)
    r = (-m * (i + j)) % M
    q0 = (r + m * (i + j)) // M
    gsign = sigma**q0

    def xterm(e: int, coeff: int, with_y: bool) -> NCPoly:
        folds, e = divmod(e, M)
        c = coeff * (sigma**folds) * gsign
        w = Word((("x", e), ("y", 1))) if with_y else Word.gen("x", e)
        return NCPoly.of_word(w, field, c)

    rhs = xterm(i * n + r, (-1) ** n, True)
    for k in range(n):
        rhs = rhs + xterm((n - 1) * j + k * (i - j) + r, (-1) ** k, False)
    rhs = _reduce_x_exponents(rhs, N, xrhs)
    rs = RewriteSystem(
        i, j, field, rhs, (N, xrhs), "y-count, then y-x inversions, then degree"
    )
    _build_sanity_check(rs)
    return rs


def _build_sanity_check(rs: RewriteSystem):
    """Both defining relations must reduce to 1 under the fresh rules."""
    field = rs.field
    y = NCPoly.y(field)
    for a, b in ((rs.i, rs.j), (rs.j, rs.i)):
        rel = NCPoly.x(field, a) * y + y * NCPoly.x(field, b)
        if reduce(rel, rs) != NCPoly.one(field):
            raise Inconsistency(
                f"rule construction broken for (i, j) = ({rs.i}, {rs.j})"
            )


def _redexes(word: Word, rs: RewriteSystem):
    out = []
    runs = word.runs
    N = rs.span_bound
    for idx, (letter, e) in enumerate(runs):
        if letter == "y":
            if e >= 2:
                # the word is already zero in the ring; exposing the inner
                # y-x rewrite as well only lets samplers burn fuel on it
                out.append(("yy", idx))
            elif idx + 1 < len(runs) and runs[idx + 1][0] == "x":
                out.append(("yx", idx))
        elif N is not None and e >= N:
            out.append(("xpow", idx))
    return out


def _choose(redexes, strategy, rng):
    if strategy == "random":
        return rng.choice(redexes)
    order = {"yy": 0, "yx": 1, "xpow": 2}
    if strategy == "priority":
        return min(redexes, key=lambda r: (order[r[0]], r[1]))
    if strategy == "rightmost":
        return max(redexes, key=lambda r: (-order[r[0]], r[1]))
    raise ValueError(f"unknown strategy {strategy!r}")


def _apply(word: Word, redex, rs: RewriteSystem) -> NCPoly:
    kind, idx = redex
    runs = word.runs
    field = rs.field
    if kind == "yy":
        return NCPoly.zero(field)
    if kind == "xpow":
        N, xrhs = rs.xpow
        e = runs[idx][1]
        left = Word(runs[:idx] + (("x", e - N),))
        right = Word(runs[idx + 1 :])
        return xrhs.lmul_word(left).rmul_word(right)
    # kind == "yx"
    a = runs[idx][1]
    b = runs[idx + 1][1]
    left = Word(runs[:idx] + (("y", a - 1),))
    right = Word((("x", b - 1),) + runs[idx + 2 :])
    return rs.yx_rhs.lmul_word(left).rmul_word(right)


def reduce(
    p: NCPoly,
    rs: RewriteSystem,
    strategy: str = "priority",
    rng=None,
    fuel: int = 500_000,
) -> NCPoly:
    """Rewrite to normal form (no subword matches any rule).

    The whole combination is rewritten at once, largest word first, so
    coefficients of coinciding intermediate words merge (and cancel)
    immediately.  The default strategy (kill y^2 first, then the leftmost
    y-x adjacency, then oversized x-runs) decreases the measure (y-count,
    inter-run x-exponent vector, degree) lexicographically at every step,
    so it always terminates.  Alternative strategies exist for confluence
    sampling and are guarded by the fuel budget.
    """
    field = p.field
    if rng is None:
        rng = random.Random(0)

    def neg_key(w):
        ycount, rvec, degree = w.rewrite_measure()
        return (-ycount, tuple(-v for v in rvec), -degree)

    counter = itertools.count()
    work = dict(p.terms)
    heap = [(neg_key(w), next(counter), w) for w in work]
    heapq.heapify(heap)
    normal: dict = {}
    steps = 0
    while heap:
        _, _, w = heapq.heappop(heap)
        c = work.pop(w, None)
        if c is None:
            continue  # stale heap entry
        redexes = _redexes(w, rs)
        if not redexes:
            v = normal.get(w)
            v = c if v is None else v + c
            if v:
                normal[w] = v
            elif w in normal:
                del normal[w]
            continue
        steps += 1
        if steps > fuel:
            raise RewriteFuelExhausted(
                f"no normal form within {fuel} steps (strategy {strategy!r})"
            )
        repl = _apply(w, _choose(redexes, strategy, rng), rs)
        for w2, c2 in repl.terms.items():
            v = work.get(w2)
            if v is None:
                work[w2] = c2 * c
                heapq.heappush(heap, (neg_key(w2), next(counter), w2))
            else:
                v = v + c2 * c
                if v:
                    work[w2] = v
                else:
                    del work[w2]
    return NCPoly(normal, field)


class MatrixModel:
    """Evaluation of words at the witness matrices over A[s,t]/I.

    The represented algebra is isomorphic to the full 2x2 matrix algebra
    over the quotient, so equality of images decides equality in the
    presented ring.
    """

    def __init__(self, i: int, j: int, field=QQ):
        self.i = i
        self.j = j
        self.field = field
        self.gb = structure_basis(i, j, field)
        self.pair = witness_XY(i, j, field, gb=self.gb)
        self.ring = self.pair.ring
        self.identity = Mat2.identity(self.ring)
        self.zero_mat = Mat2.zero(self.ring)
        self._xpow = [self.identity, self.pair.X]

    def xpow(self, e: int) -> Mat2:
        while len(self._xpow) <= e:
            self._xpow.append(self._xpow[-1] * self.pair.X)
        return self._xpow[e]

    def word_matrix(self, w: Word) -> Mat2:
        m = self.identity
        for letter, e in w.runs:
            if letter == "x":
                m = m * self.xpow(e)
            elif e >= 2:
                return self.zero_mat
            else:
                m = m * self.pair.Y
        return m

    def image(self, p) -> Mat2:
        if isinstance(p, Word):
            return self.word_matrix(p)
        total = self.zero_mat
        for w, c in p.terms.items():
            total = total + self.word_matrix(w).scale(self.ring.of(c))
        return total

    def equal_in_ring(self, p, q) -> bool:
        return self.image(p) == self.image(q)


_MODELS: dict = {}


def matrix_model(i: int, j: int, field=QQ) -> MatrixModel:
    key = (i, j, field)
    if key not in _MODELS:
        _MODELS[key] = MatrixModel(i, j, field)
    return _MODELS[key]


def word_image(p: NCPoly, i: int, j: int, field=QQ) -> Mat2:
    """Image of p under x -> X, y -> Y in M_2(A[s,t]/I); decides equality."""
    return matrix_model(i, j, field).image(p)


@dataclass
class ValidationReport:
    """Outcome of the empirical soundness/confluence audit of a rule set."""

    i: int
    j: int
    words_checked: int = 0
    confluence_sampled: int = 0
    confluence_inconclusive: int = 0  # alternative order ran out of fuel
    soundness_failures: list = dc_field(default_factory=list)
    confluence_divergences: list = dc_field(default_factory=list)
    normal_form_escapes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.soundness_failures
            or self.confluence_divergences
            or self.normal_form_escapes
        )

    def to_dict(self):
        return {
            "i": self.i,
            "j": self.j,
            "words_checked": self.words_checked,
            "confluence_sampled": self.confluence_sampled,
            "confluence_inconclusive": self.confluence_inconclusive,
            "soundness_failures": list(self.soundness_failures),
            "confluence_divergences": list(self.confluence_divergences),
            "normal_form_escapes": list(self.normal_form_escapes),
            "ok": self.ok,
        }


def _in_spanning_set(w: Word, rs: RewriteSystem) -> bool:
    runs = w.runs
    if not runs:
        return True
    N = rs.span_bound
    if len(runs) == 1:
        letter, e = runs[0]
        if letter == "x":
            return N is None or e < N
        return e == 1
    if len(runs) == 2:
        (l1, e1), (l2, e2) = runs
        return (
            l1 == "x"
            and l2 == "y"
            and e2 == 1
            and (N is None or e1 < N)
        )
    return False


def _word_corpus(rng, n_random: int, max_len: int, exhaustive_len):
    if exhaustive_len is not None:
        for length in range(1, exhaustive_len + 1):
            for bits in range(2**length):
                letters = "".join(
                    "xy"[(bits >> k) & 1] for k in range(length)
                )
                yield Word.from_letters(letters)
        return
    for _ in range(n_random):
        length = rng.randint(1, max_len)
        yield Word.from_letters(
            "".join(rng.choice("xy") for _ in range(length))
        )


def validate_system(
    rs: RewriteSystem,
    n_random: int = 1000,
    max_len: int = 12,
    seed: int = 0,
    exhaustive_len: int | None = None,
    strategies=("rightmost", "random", "random"),
    confluence_max_len: int = 7,
    confluence_fuel: int = 60_000,
) -> ValidationReport:
    """Audit the rules against the matrix model.

    (a) soundness: the image of every corpus word equals the image of its
    normal form, for the whole corpus; (b) local-confluence sampling:
    alternative application orders must land on the same normal form.
    Alternative orders lack the termination guarantee of the default one
    and can be exponentially slower, so sampling is restricted to words of
    length <= confluence_max_len and a run that exhausts its fuel counts
    as inconclusive, not as a divergence.
    """
    model = matrix_model(rs.i, rs.j, rs.field)
    report = ValidationReport(i=rs.i, j=rs.j)
    rng = random.Random(seed)
    for w in _word_corpus(rng, n_random, max_len, exhaustive_len):
        report.words_checked += 1
        p = NCPoly.of_word(w, rs.field)
        nf = reduce(p, rs)
        if not all(_in_spanning_set(u, rs) for u in nf.terms):
            report.normal_form_escapes.append(w.text())
        if model.image(p) != model.image(nf):
            report.soundness_failures.append(w.text())
        if w.degree > confluence_max_len:
            continue
        for k, strat in enumerate(strategies):
            report.confluence_sampled += 1
            try:
                alt = reduce(
                    p,
                    rs,
                    strategy=strat,
                    rng=random.Random(seed + 7 * k + 1),
                    fuel=confluence_fuel,
                )
            except RewriteFuelExhausted:
                report.confluence_inconclusive += 1
                continue
            if alt != nf:
                report.confluence_divergences.append(f"{w.text()} [{strat}]")
    return report


@dataclass
class IdentityReport:
    """Pass/fail per named ring identity, all decided via word_image."""

    i: int
    j: int
    entries: list = dc_field(default_factory=list)

    def record(self, name: str, ok: bool):
        self.entries.append((name, bool(ok)))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.entries)

    @property
    def failures(self) -> list:
        return [name for name, ok in self.entries if not ok]

    def to_dict(self):
        return {
            "i": self.i,
            "j": self.j,
            "checks": [{"name": n, "ok": ok} for n, ok in self.entries],
            "ok": self.ok,
        }


def check_identities(i: int, j: int, n_max: int = 6, field=QQ) -> IdentityReport:
    """Verify the derived relations of the presented ring in the matrix model.

    Covers: the y x^k y collapses; the swapped defining relation; the two
    families pushing y across x^(in) and x^(jn) for n <= n_max; the explicit
    inverse of x (i != j); the alternating x-power relation and the
    root-of-unity power; centrality of x^(i+j) and x^i - x^j; and the full
    set of seventeen matrix-unit relations.
    """
    if math.gcd(i, j) != 1:
        raise UnsupportedParameters(f"gcd({i}, {j}) != 1")
    model = matrix_model(i, j, field)
    rep = IdentityReport(i=i, j=j)
    f = field
    one = NCPoly.one(f)
    x = lambda e=1: NCPoly.x(f, e) if e else one
    y = NCPoly.y(f)
    eq = model.equal_in_ring

    rep.record("y*x^i*y = y", eq(y * x(i) * y, y))
    rep.record("y*x^j*y = y", eq(y * x(j) * y, y))
    rep.record("y*x^(i+j)*y = 0", eq(y * x(i + j) * y, NCPoly.zero(f)))
    rep.record(
        "y*x^(2i)*y = -y*x^(2j)*y", eq(y * x(2 * i) * y, -(y * x(2 * j) * y))
    )
    rep.record("x^i*y + y*x^j = 1", eq(x(i) * y + y * x(j), one))
    rep.record("x^j*y + y*x^i = 1 (swap)", eq(x(j) * y + y * x(i), one))

    for n in range(1, n_max + 1):
        lhs1 = y * x(i * n)
        rhs1 = (x(j * n) * y).scale((-1) ** n)
        for k in range(n):
            rhs1 = rhs1 + x((n - 1) * j + k * (i - j)).scale((-1) ** (n - 1 - k))
        rep.record(f"y*x^(i*{n}) push-through", eq(lhs1, rhs1))
        lhs2 = y * x(j * n)
        rhs2 = (x(i * n) * y).scale((-1) ** n)
        for k in range(n):
            rhs2 = rhs2 + x((n - 1) * j + k * (i - j)).scale((-1) ** k)
        rep.record(f"y*x^(j*{n}) push-through", eq(lhs2, rhs2))

    hi, lo = max(i, j), min(i, j)
    if hi > lo:
        inv_right = x(lo - 1) * y + x(hi - lo - 1) - x(hi - 1) * y * x(hi - lo)
        rep.record("x * (right inverse) = 1", eq(x() * inv_right, one))
        inv_left = x(hi - lo - 1) - x(hi - lo) * y * x(hi - 1) + y * x(lo - 1)
        rep.record("(left inverse) * x = 1", eq(inv_left * x(), one))
        N = (hi + lo - 1) * (hi - lo)
        alt = NCPoly.zero(f)
        for k in range(1, hi + lo):
            alt = alt + x((hi + lo - 1 - k) * (hi - lo)).scale((-1) ** (k + 1))
        rep.record("alternating x-power relation", eq(x(N), alt))
    rep.record(
        "x^(i^2-j^2) = (-1)^(i+j)",
        eq(x(hi * hi - lo * lo), one.scale((-1) ** (i + j))),
    )
    for name, z in (("x^(i+j)", x(i + j)), ("x^i - x^j", x(i) - x(j))):
        rep.record(f"[{name}, x] = 0", eq(z * x() - x() * z, NCPoly.zero(f)))
        rep.record(f"[{name}, y] = 0", eq(z * y - y * z, NCPoly.zero(f)))

    e = {
        (1, 1): y * x(lo),
        (1, 2): y,
        (2, 1): x(hi) * y * x(lo),
        (2, 2): x(hi) * y,
    }
    rep.record("e11 + e22 = 1", eq(e[(1, 1)] + e[(2, 2)], one))
    for h in (1, 2):
        for k in (1, 2):
            for l in (1, 2):
                for m in (1, 2):
                    want = e[(h, m)] if k == l else NCPoly.zero(f)
                    rep.record(
                        f"e{h}{k}*e{l}{m}",
                        eq(e[(h, k)] * e[(l, m)], want),
                    )
    return rep
