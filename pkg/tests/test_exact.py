"""Tests for the exact arithmetic substrate (rationals, matrices,
words, polynomials)."""

import random
from fractions import Fraction

import pytest

from parafree.exact import (
    ExpWord,
    G,
    H,
    Mat2,
    UniPoly,
    eval_word,
    eval_word_symbolic,
    format_rational,
    gen_power,
    gen_power_symbolic,
    other_tag,
    parse_rational,
    word_from_exponents,
)

rng = random.Random(20260826)


def rand_word(max_len=6, bound=9):
    l = rng.randint(1, max_len)
    exps = tuple(rng.choice([a for a in range(-bound, bound + 1) if a != 0])
                 for _ in range(l))
    return ExpWord(rng.choice([G, H]), exps)


def rand_tau():
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


# --- rationals ---------------------------------------------------------

def test_parse_rational_basic():
    assert parse_rational("3") == 3
    assert parse_rational("-7") == -7
    assert parse_rational("9/4") == Fraction(9, 4)
    assert parse_rational("-6/8") == Fraction(-3, 4)
    assert parse_rational(" 2/3 ") == Fraction(2, 3)


def test_parse_rational_rejects_garbage():
    for bad in ["", "a", "1/0", "1/-2", "1.5", "2/3/4", "+3", "1 /2"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational_round_trip():
    for _ in range(200):
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-9, 4)) == "-9/4"


# --- matrices ----------------------------------------------------------

def rand_mat():
    while True:
        m = Mat2(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                   for _ in range(4)))
        if m.det() != 0:
            return m


def test_mat2_identity_and_det():
    i = Mat2.identity()
    assert i.is_identity()
    assert i.det() == 1
    m = rand_mat()
    assert (m * i) == m
    assert (i * m) == m


def test_mat2_mul_associative():
    for _ in range(50):
        a, b, c = rand_mat(), rand_mat(), rand_mat()
        assert (a * b) * c == a * (b * c)
        assert (a * b).det() == a.det() * b.det()


def test_mat2_inverse_and_transpose():
    for _ in range(50):
        m = rand_mat()
        assert (m * m.inverse()).is_identity()
        assert (m.inverse() * m).is_identity()
        assert m.transpose().transpose() == m
        assert m.transpose().det() == m.det()
    with pytest.raises(ZeroDivisionError):
        Mat2(Fraction(1), Fraction(2), Fraction(2), Fraction(4)).inverse()


def test_gen_power_closed_form():
    tau = Fraction(5, 3)
    assert gen_power(G, 4, tau) == Mat2(Fraction(1), Fraction(4),
                                        Fraction(0), Fraction(1))
    assert gen_power(H, -2, tau) == Mat2(Fraction(1), Fraction(0),
                                         Fraction(-10, 3), Fraction(1))
    # power law: g^a g^b = g^(a+b), same for h
    for tag in (G, H):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        assert gen_power(tag, a, tau) * gen_power(tag, b, tau) == \
            gen_power(tag, a + b, tau)
    with pytest.raises(ValueError):
        gen_power("X", 1, tau)


# --- words -------------------------------------------------------------

def test_expword_construction_and_end():
    w = ExpWord(G, (1, -2, 3))
    assert len(w) == 3
    assert w.end == G
    assert ExpWord(G, (1, 2)).end == H
    assert ExpWord(H, (1,)).end == H
    with pytest.raises(ValueError):
        ExpWord("Q", (1,))
    with pytest.raises(ValueError):
        ExpWord(G, ())


def test_expword_letters_alternate():
    w = ExpWord(H, (2, 3, -1, 5))
    tags = [tag for tag, _ in w.letters()]
    assert tags == [H, G, H, G]
    for t in tags:
        assert other_tag(other_tag(t)) == t


def test_expword_inverse():
    for _ in range(100):
        w = rand_word()
        tau = rand_tau()
        m = eval_word(w, tau)
        assert eval_word(w.inverse(), tau) == m.inverse()
        assert w.inverse().inverse() == w


def test_expword_concat():
    w = ExpWord(G, (1, 2))  # ends H
    v = ExpWord(G, (3,))    # must start G to continue
    assert w.concat(v).exponents == (1, 2, 3)
    with pytest.raises(ValueError):
        w.concat(ExpWord(H, (3,)))
    for _ in range(50):
        a, b = rand_word(), rand_word()
        if b.start == other_tag(a.end):
            tau = rand_tau()
            assert eval_word(a.concat(b), tau) == \
                eval_word(a, tau) * eval_word(b, tau)


def test_expword_flags():
    assert ExpWord(G, (1, 2, 3)).is_positive
    assert not ExpWord(G, (1, -2)).is_positive
    assert ExpWord(G, (1, -2)).is_reduced
    assert not ExpWord(G, (1, 0, 2)).is_reduced


def test_eval_word_unimodular():
    for _ in range(100):
        w, tau = rand_word(), rand_tau()
        assert eval_word(w, tau).det() == 1


def test_word_from_exponents():
    w = word_from_exponents([1, -2, 3])
    assert w.start == G and w.exponents == (1, -2, 3)
    assert word_from_exponents((5,), start=H).start == H


# --- polynomials -------------------------------------------------------

def rand_poly(deg=5, bound=9):
    return UniPoly(tuple(rng.randint(-bound, bound)
                         for _ in range(rng.randint(0, deg + 1))))


def test_unipoly_trims_and_degree():
    assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert UniPoly((0,)).is_zero
    assert UniPoly.zero().degree() == -1
    assert UniPoly.var().degree() == 1
    assert UniPoly.const(7).evaluate(Fraction(100)) == 7


def test_unipoly_ring_laws_against_evaluation():
    for _ in range(200):
        a, b = rand_poly(), rand_poly()
        t = rand_tau()
        assert (a + b).evaluate(t) == a.evaluate(t) + b.evaluate(t)
        assert (a - b).evaluate(t) == a.evaluate(t) - b.evaluate(t)
        assert (a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t)
        assert (-a).evaluate(t) == -a.evaluate(t)
        assert a.scale(3).evaluate(t) == 3 * a.evaluate(t)
        assert a * b == b * a
        assert a + b == b + a


def test_unipoly_divide_by_var():
    p = UniPoly((0, 3, -1))
    assert p.divide_by_var() == UniPoly((3, -1))
    with pytest.raises(ArithmeticError):
        UniPoly((2, 1)).divide_by_var()
    assert UniPoly.zero().divide_by_var().is_zero


def test_unipoly_render():
    assert UniPoly((11, -23, 7)).render() == "7*tau^2 - 23*tau + 11"
    assert UniPoly((0, 1)).render() == "tau"
    assert UniPoly((0, -1)).render() == "-tau"
    assert UniPoly((5,)).render() == "5"
    assert UniPoly.zero().render() == "0"
    assert UniPoly((0, 0, 1)).render("x") == "x^2"


def test_symbolic_matches_numeric():
    for _ in range(100):
        w = rand_word()
        tau = rand_tau()
        assert eval_word_symbolic(w).specialize(tau) == eval_word(w, tau)


def test_symbolic_det_is_one():
    for _ in range(30):
        w = rand_word()
        assert eval_word_symbolic(w).det() == UniPoly.const(1)


def test_gen_power_symbolic_bad_tag():
    with pytest.raises(ValueError):
        gen_power_symbolic("Z", 1)
