from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from invbinom.errors import BranchCutError, DomainError, ParseError
from invbinom.hpcore import (
    BigComplex,
    BigReal,
    agreement_bits,
    complex_asin,
    complex_fn,
    double_evaluation,
    real_fn,
    real_from_decimal,
    working_precision,
)

P = 256


def exact(q, prec=P):
    return BigReal.exact(Fraction(q), prec)


def cplx(re, im, prec=P):
    return BigComplex(exact(re, prec), exact(im, prec))


def as_fraction(x: BigReal) -> Fraction:
    sign, man, exp, _ = x.value._mpf_
    q = Fraction(man) * Fraction(2) ** exp
    return -q if sign else q


def oracle(fn, prec=P + 64):
    with mp.workprec(prec):
        return fn()


def close(a, b, prec=P, slack=8):
    """Relative agreement within 2^-(prec - slack)."""
    return agreement_bits(a, b) >= prec - slack


def test_working_precision():
    assert working_precision(50) == 167 + 64
    assert working_precision(6) >= 6 * 3.32 + 64


@pytest.mark.parametrize("text, value", [
    ("0.5", Fraction(1, 2)),
    ("-3", Fraction(-3)),
    ("1.25e2", Fraction(125)),
    (".125", Fraction(1, 8)),
])
def test_decimal_exactly_representable(text, value):
    assert as_fraction(real_from_decimal(text, 128)) == value


@pytest.mark.parametrize("text", ["0.1", "0.84660943", "-2.718281828459045235360287", "3e-40"])
def test_decimal_correctly_rounded(text):
    x = real_from_decimal(text, 128)
    err = abs(as_fraction(x) - Fraction(text))
    ulp = Fraction(2) ** (int(mp.floor(mp.log(abs(x.value), 2))) - 127)
    assert err <= ulp / 2


@pytest.mark.parametrize("text", ["", "1.2.3", "abc", "1e", "--1", "0x10"])
def test_decimal_malformed(text):
    with pytest.raises(ParseError):
        real_from_decimal(text, 128)


def test_precision_too_small():
    with pytest.raises(ValueError):
        real_from_decimal("1", 10)


def test_mixed_precision_takes_minimum():
    s = exact(1, 128) + exact(Fraction(1, 3), 256)
    assert s.prec == 128


def test_complex_parts_share_precision():
    with pytest.raises(ValueError):
        BigComplex(exact(1, 128), exact(1, 256))


def test_atan_values():
    assert close(real_fn("atan", exact(1)), oracle(lambda: mp.pi / 4))
    a = real_fn("sqrt", exact(3))
    assert close(real_fn("atan", 2 - a), oracle(lambda: mp.pi / 12))


def test_atanh_half():
    assert close(real_fn("atanh", exact(Fraction(1, 2))), oracle(lambda: mp.log(3) / 2))


@pytest.mark.parametrize("q", [Fraction(1, 7), Fraction(3), Fraction(-5, 2), Fraction(10**9, 3)])
def test_acot_matches_atan_of_reciprocal(q):
    a = real_fn("acot", exact(q))
    b = real_fn("atan", 1 / exact(q))
    ulp = mpf(2) ** (mp.floor(mp.log(abs(b.value), 2)) - P + 1)
    assert abs(a.value - b.value) <= 4 * ulp


@pytest.mark.parametrize("tag, arg, words", [
    ("sqrt", -1, ("sqrt", "negative")),
    ("ln", -2, ("ln", "negative")),
    ("ln", 0, ("ln", "zero")),
    ("atanh", 2, ("atanh", "positive")),
    ("atanh", -3, ("atanh", "negative")),
    ("atanh", 1, ("atanh", "pole")),
    ("acot", 0, ("acot", "zero")),
])
def test_real_domain_errors_name_function(tag, arg, words):
    with pytest.raises(DomainError) as info:
        real_fn(tag, exact(arg))
    for w in words:
        assert w in str(info.value)


def test_complex_sqrt_of_i():
    z = complex_fn("sqrt", cplx(0, 1))
    h = oracle(lambda: mp.sqrt(2) / 2)
    assert close(z.re, h) and close(z.im, h)


def test_complex_atan_of_imaginary_is_atanh():
    z = complex_fn("atan", cplx(0, Fraction(1, 2)))
    assert z.re.value == 0
    assert close(z.im, oracle(lambda: mp.atanh(mpf(1) / 2)))


@pytest.mark.parametrize("tag, re, im", [
    ("sqrt", -1, 0),
    ("ln", -2, 0),
    ("atanh", 2, 0),
    ("atanh", -3, 0),
    ("atan", 0, 2),
    ("atan", 0, -5),
])
def test_branch_cut_arguments_raise(tag, re, im):
    with pytest.raises(BranchCutError):
        complex_fn(tag, cplx(re, im))


def test_real_arguments_stay_real():
    z = complex_fn("sqrt", cplx(4, 0))
    assert z.im.value == 0 and z.re.value == 2
    w = complex_fn("mul", cplx(3, 0), cplx(Fraction(1, 3), 0))
    assert w.is_real()


@pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_arcsin_of_rotated_argument(x):
    """arcsin(x sqrt(i)) from the atan/sqrt kernels against mpmath's asin."""
    rot = complex_fn("sqrt", cplx(0, 1))
    z = complex_asin(rot * exact(x))
    ref = oracle(lambda: mp.asin(mp.mpf(x.numerator) / x.denominator * mp.sqrt(mp.j)))
    assert agreement_bits(z.re, ref.real) > 40 * 3.33
    assert agreement_bits(z.im, ref.imag) > 40 * 3.33


def test_double_evaluation_agrees():
    def composite(prec):
        x = exact(Fraction(2, 7), prec)
        return real_fn("atanh", x) * real_fn("atan", real_fn("sqrt", x)) + real_fn("ln", 1 + x)

    assert double_evaluation(composite, 256) >= 256 - 16


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)


@settings(max_examples=200, deadline=None)
@given(rationals, rationals.filter(lambda q: q != 0))
def test_arithmetic_is_correctly_rounded(a, b):
    x, y = exact(a, 128), exact(b, 128)
    qa, qb = as_fraction(x), as_fraction(y)
    assert abs(qa - a) <= abs(a) / 2**127
    for got, want in ((x + y, qa + qb), (x - y, qa - qb), (x * y, qa * qb), (x / y, qa / qb)):
        assert abs(as_fraction(got) - want) <= abs(want) / 2**127
