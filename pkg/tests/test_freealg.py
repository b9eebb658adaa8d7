import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m2alg.errors import UnsupportedParameters
from m2alg.fields import GF, QQ
from m2alg.freealg import (
    NCPoly,
    Word,
    build_rewrite_system,
    check_identities,
    matrix_model,
    parse_word_expr,
    reduce,
    validate_system,
    word_image,
)
from m2alg.mat2 import Mat2


def w(letters):
    return Word.from_letters(letters)


def test_word_normalization():
    assert Word((("x", 2), ("x", 3))).runs == (("x", 5),)
    assert Word((("x", 0), ("y", 1))).runs == (("y", 1),)
    assert w("xxyyx").runs == (("x", 2), ("y", 2), ("x", 1))
    assert (w("xy") * w("yx")).runs == (("x", 1), ("y", 2), ("x", 1))
    assert Word.one().degree == 0
    assert w("xyx").text() == "x*y*x"
    assert Word.gen("x", 3).text() == "x^3"


def test_word_rejects_bad_input():
    with pytest.raises(ValueError):
        Word((("z", 1),))
    with pytest.raises(ValueError):
        Word((("x", -1),))


def test_ncpoly_arithmetic():
    x = NCPoly.x(QQ)
    y = NCPoly.y(QQ)
    assert (x * y - y * x).terms != {}
    assert x * y != y * x
    p = (x + y) * (x - y)
    # x^2 - xy + yx - y^2: all four distinct words
    assert len(p.terms) == 4
    assert (p - p).is_zero()
    assert (x + 1) * (x - 1) == x * x - NCPoly.one(QQ)


def test_ncpoly_text_ordering():
    x = NCPoly.x(QQ)
    y = NCPoly.y(QQ)
    p = NCPoly.one(QQ) + y - x * y
    assert p.text() == "-x*y + y + 1"


def test_parse_word_expr():
    p = parse_word_expr("x^2*y + y*x - 1", QQ)
    x = NCPoly.x(QQ)
    y = NCPoly.y(QQ)
    assert p == x * x * y + y * x - NCPoly.one(QQ)
    assert parse_word_expr("2*x*y", QQ) == (x * y).scale(2)
    assert parse_word_expr("-x + 3", QQ) == -x + NCPoly.one(QQ).scale(3)
    # order of letters matters
    assert parse_word_expr("y*x", QQ) != parse_word_expr("x*y", QQ)
    with pytest.raises(ValueError):
        parse_word_expr("x^", QQ)
    with pytest.raises(ValueError):
        parse_word_expr("q + 1", QQ)


def test_build_rewrite_system_goldens():
    rs = build_rewrite_system(1, 1)
    assert rs.xpow is None
    assert rs.yx_rhs == NCPoly.one(QQ) - NCPoly.x(QQ) * NCPoly.y(QQ)

    rs21 = build_rewrite_system(2, 1)
    assert rs21.xpow[0] == 2
    assert rs21.xpow[1] == NCPoly.x(QQ) - NCPoly.one(QQ)
    assert rs21.yx_rhs == parse_word_expr("1 + y - x*y", QQ)

    rs32 = build_rewrite_system(3, 2)
    assert rs32.xpow[0] == 4
    assert rs32.xpow[1] == parse_word_expr("x^3 - x^2 + x - 1", QQ)
    assert rs32.yx_rhs == parse_word_expr(
        "-x^3*y + x^2*y - x^3 - x*y + x^2 + y", QQ
    )


def test_build_rewrite_system_rejects():
    with pytest.raises(UnsupportedParameters):
        build_rewrite_system(4, 2)


def test_reduce_examples():
    rs = build_rewrite_system(1, 1)
    y = NCPoly.y(QQ)
    assert reduce(NCPoly.of_word(w("yxy"), QQ), rs) == y
    assert reduce(NCPoly.of_word(w("yyx"), QQ), rs).is_zero()
    rs21 = build_rewrite_system(2, 1)
    assert reduce(parse_word_expr("x^2*y + y*x", QQ), rs21) == NCPoly.one(QQ)
    # defining relation in the swapped orientation also collapses
    assert reduce(parse_word_expr("x*y + y*x^2", QQ), rs21) == NCPoly.one(QQ)


def test_reduce_normal_form_support():
    rs = build_rewrite_system(3, 2)
    rng = random.Random(1)
    for _ in range(60):
        word = w("".join(rng.choice("xy") for _ in range(rng.randint(1, 10))))
        nf = reduce(NCPoly.of_word(word, QQ), rs)
        for u in nf.terms:
            runs = u.runs
            assert len(runs) <= 2
            if runs:
                assert runs[0][0] == "x" or (len(runs) == 1 and runs[0] == ("y", 1))
                if runs[0][0] == "x":
                    assert runs[0][1] < 4
                if len(runs) == 2:
                    assert runs[1] == ("y", 1)


@st.composite
def ncpolys(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        letters = draw(st.text(alphabet="xy", min_size=0, max_size=6))
        terms[Word.from_letters(letters)] = QQ.of(draw(st.integers(-3, 3)))
    return NCPoly(terms, QQ)


@settings(max_examples=40, deadline=None)
@given(ncpolys())
def test_reduce_idempotent(p):
    rs = build_rewrite_system(2, 1)
    nf = reduce(p, rs)
    assert reduce(nf, rs) == nf


@settings(max_examples=40, deadline=None)
@given(ncpolys(), ncpolys())
def test_reduce_linear(p, q):
    rs = build_rewrite_system(2, 1)
    assert reduce(p + q, rs) == reduce(p, rs) + reduce(q, rs)


def test_word_image_examples():
    for i, j in [(2, 1), (4, 3), (3, 2)]:
        model = matrix_model(i, j)
        ring = model.ring
        assert model.image(NCPoly.x(QQ, i + j)) == Mat2.scalar(ring, ring.s())
        assert model.image(
            NCPoly.x(QQ, j) - NCPoly.x(QQ, i)
        ) == Mat2.scalar(ring, ring.t())
        rel = NCPoly.x(QQ, i) * NCPoly.y(QQ) + NCPoly.y(QQ) * NCPoly.x(QQ, j)
        assert model.image(rel) == model.identity


def test_word_image_function_form():
    img = word_image(parse_word_expr("x*y + y*x", QQ), 1, 1)
    model = matrix_model(1, 1)
    assert img == model.identity


def test_word_image_rejects_non_coprime():
    with pytest.raises(UnsupportedParameters):
        word_image(NCPoly.x(QQ), 4, 2)


def test_model_injectivity_on_spanning_set():
    # distinct normal-form words have distinct images (2x2 entries in the
    # quotient), for every coprime pair with a finite spanning set
    for i, j in [(2, 1), (3, 2), (4, 3), (3, 1)]:
        model = matrix_model(i, j)
        bound = (i + j - 1) * (i - j)
        images = {}
        for a in range(bound):
            for with_y in (False, True):
                word = Word((("x", a), ("y", 1))) if with_y else Word.gen("x", a)
                m = model.word_matrix(word)
                key = (m.a.poly.text(), m.b.poly.text(), m.c.poly.text(), m.d.poly.text())
                assert key not in images, (i, j, word, images[key])
                images[key] = word


def test_validate_exhaustive_1_1():
    rs = build_rewrite_system(1, 1)
    rep = validate_system(rs, exhaustive_len=6)
    assert rep.ok
    assert rep.words_checked == 2**7 - 2
    assert rep.confluence_divergences == []


def test_validate_random_2_1_and_3_2():
    for i, j in [(2, 1), (3, 2)]:
        rs = build_rewrite_system(i, j)
        rep = validate_system(rs, n_random=150, max_len=10, seed=3)
        assert rep.ok, rep.to_dict()
        assert rep.words_checked == 150


def test_check_identities_pairs():
    for i, j in [(2, 1), (3, 2), (1, 1)]:
        rep = check_identities(i, j, n_max=6)
        assert rep.ok, (i, j, rep.failures)
    # seventeen matrix-unit relations are part of the report
    rep = check_identities(2, 1, n_max=1)
    unit_checks = [n for n, _ in rep.entries if n.startswith("e")]
    assert len(unit_checks) == 17


def test_check_identities_over_fp():
    rep = check_identities(3, 2, n_max=4, field=GF(3))
    assert rep.ok, rep.failures


def test_check_identities_rejects():
    with pytest.raises(UnsupportedParameters):
        check_identities(6, 3)
